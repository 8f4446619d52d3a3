#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "qgrad/bounds.hpp"
#include "qgrad/qge.hpp"

using namespace qgrad;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("p=1 lower bound formula") {
    CHECK(lower_bound_p1(1, 876.0, 1.0) == doctest::Approx(1.0));
    CHECK(lower_bound_p1(4, 1.0, 0.005) == doctest::Approx(8.0 / (876.0 * 0.005)));
    const double one = lower_bound_p1(2, 1.0, 0.001);
    const double two = lower_bound_p1(4, 1.0, 0.001);
    CHECK(two / one == doctest::Approx(std::pow(2.0, 1.5)));
    CHECK_THROWS_AS(lower_bound_p1(1, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_p1(1, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("general lower bound: N formula and exponents") {
    const auto report = lower_bound_general(3, 1.0, 0.0005, 1.0, 17.0 / 18.0);
    CHECK(report.N_boost == 6);
    CHECK(report.bound_value ==
          doctest::Approx(std::pow(3.0, 1.5) / (1752.0 * 6.0 * 0.0005)));
    CHECK_FALSE(report.p_one_guarded);

    const auto inf_report = lower_bound_general(4, 1.0, 0.0005, kInf, 17.0 / 18.0);
    CHECK(inf_report.bound_value ==
          doctest::Approx(std::pow(4.0, 0.5) / (1752.0 * 6.0 * 0.0005)));

    const auto d1 = lower_bound_general(1, 2.0, 0.001, 1.0, 17.0 / 18.0);
    CHECK(d1.bound_value == doctest::Approx(2.0 / (1752.0 * 6.0 * 0.001)));

    const auto certain = lower_bound_general(1, 1.0, 0.001, 1.0, 1.0);
    CHECK(certain.N_boost == 1);
    CHECK(certain.p_one_guarded);

    CHECK_THROWS_AS(lower_bound_general(1, 1.0, 0.001, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_general(1, 1.0, 0.01, 1.0, 0.9), std::invalid_argument);
}

TEST_CASE("bound formulas are scale invariant in (c, eps)") {
    CHECK(lower_bound_p1(3, 1.0, 0.001) == doctest::Approx(lower_bound_p1(3, 10.0, 0.01)));
    CHECK(lower_bound_general(3, 1.0, 0.001, 2.0, 0.9).bound_value ==
          doctest::Approx(lower_bound_general(3, 10.0, 0.01, 2.0, 0.9).bound_value));
}

namespace {
ObjectiveFunction phase_fn(int d, std::function<double(std::span<const double>)> g) {
    ObjectiveFunction f;
    f.dimension = d;
    f.evaluate = std::move(g);
    return f;
}
}  // namespace

TEST_CASE("hybrid bound: coincident peripherals are unbounded") {
    const auto f0 = phase_fn(1, [](std::span<const double> x) { return 0.3 * x[0]; });
    const auto f1 = phase_fn(1, [](std::span<const double> x) { return 0.3 * x[0]; });
    CHECK(std::isinf(hybrid_bound(f0, {f1}, GridSpec{1, 4, 1.0})));
    CHECK_THROWS_AS(hybrid_bound(f0, {}, GridSpec{1, 4, 1.0}), std::invalid_argument);
}

TEST_CASE("hybrid bound respects the phase-difference inequality") {
    const auto f0 = phase_fn(1, [](std::span<const double> x) { return 0.4 * std::sin(x[0]); });
    const auto f1 = phase_fn(1, [](std::span<const double> x) { return 0.1 * std::sin(x[0]); });
    const GridSpec grid{1, 5, 2.0};
    double max_gap_sq = 0.0;
    for (std::size_t idx = 0; idx < grid.total_points(); ++idx) {
        const auto x = grid_point(grid, decode_index(grid, idx));
        const double gap = 0.3 * std::sin(x[0]);
        max_gap_sq = std::max(max_gap_sq, gap * gap);
    }
    // |e^{ia} - e^{ib}| <= |a - b| pointwise, so the bound from the true phase
    // distances is at least the bound computed from the raw gaps.
    CHECK(hybrid_bound(f0, {f1}, grid) >= std::sqrt(1.0 / (9.0 * max_gap_sq)));
}

TEST_CASE("hybrid bound is consistent with the oracle-distance supremum") {
    const int d = 2;
    const double c = 1.0, eps = 0.005;
    TestFunctionInstance center{d, c, eps, {1, 1}};
    std::vector<ObjectiveFunction> peripherals;
    for (int j = 0; j < d; ++j) {
        TestFunctionInstance flip = center;
        flip.b[static_cast<size_t>(j)] = -1;
        peripherals.push_back(make_objective(flip));
    }
    const GridSpec grid{d, 5, 2.0 * kPi / c};
    const double bound = hybrid_bound(make_objective(center), peripherals, grid);
    // oracle distance sup <= (146 eps / (c d))^2 per point implies
    // bound >= sqrt(d / (9 d (146 eps / (c d))^2)) = c d / (3 * 146 eps)
    CHECK(bound >= c * d / (3.0 * 146.0 * eps) - 1e-9);
}

TEST_CASE("oracle distance: origin and 1-D peak") {
    const std::vector<std::vector<double>> origin{{0.0}};
    CHECK(oracle_distance_sup({1}, 1.0, 0.005, 1, origin) == doctest::Approx(0.0));
    const double c = 1.0, eps = 0.005;
    const std::vector<std::vector<double>> peak{{kPi / (2.0 * c)}};
    CHECK(oracle_distance_sup({1}, c, eps, 1, peak) ==
          doctest::Approx(std::pow(146.0 * eps / c, 2)));
}

TEST_CASE("oracle distance never exceeds the proof bound") {
    const int d = 3;
    const double c = 1.2, eps = 0.007;
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> unif(-kPi / c, kPi / c);
    std::vector<std::vector<double>> pts(10000, std::vector<double>(d));
    for (auto& x : pts)
        for (double& v : x) v = unif(rng);
    const double sup = oracle_distance_sup({1, -1, 1}, c, eps, d, pts);
    CHECK(sup <= std::pow(146.0 * eps / (c * d), 2) + 1e-12);
}

TEST_CASE("moment bound values and the exact tiny case") {
    CHECK(moment_bound_value(2, 1, 1.0) == doctest::Approx(2.0));
    CHECK(moment_bound_value(2, 2, 0.0) == doctest::Approx(1.0));
    CHECK(moment_bound_value(4, 2, 0.5) ==
          doctest::Approx(std::sqrt(2.0 * 4.0 * 2.0) * std::sqrt(std::pow(2.0, 4))));

    // n = 1 grid marginal is uniform on {-1/4, +1/4}: E[(x1+x2)^2] = 1/8
    const auto check = moment_bound_check(2, 1, 1.0, 40000, 1, 9);
    CHECK(check.empirical == doctest::Approx(0.125).epsilon(0.05));
    CHECK(check.bound == doctest::Approx(2.0));
    CHECK(check.pass);
}

TEST_CASE("moment bound with q = 0 holds deterministically") {
    for (int d : {1, 2, 4}) {
        for (int k : {1, 2, 3}) {
            const auto check = moment_bound_check(d, k, 0.0, 20000, 6, 100 + d + k);
            CHECK(check.pass);
        }
    }
}

TEST_CASE("marking survey: perfect and useless estimators") {
    const int d = 2;
    const double c = 1.0, eps = 0.005;
    GradientEstimator perfect = [](const ObjectiveFunction& f, std::uint64_t) {
        return *f.reference_gradient_at_origin;
    };
    const auto good = empirical_marking_survey(perfect, d, c, eps, 3, 4, 1);
    CHECK(good.vertices_surveyed == 4);
    CHECK(good.marked_vertex_fraction == doctest::Approx(1.0));
    CHECK(good.marked_edge_fraction == doctest::Approx(1.0));

    GradientEstimator zero = [](const ObjectiveFunction& f, std::uint64_t) {
        return std::vector<double>(static_cast<size_t>(f.dimension), 0.0);
    };
    const auto bad = empirical_marking_survey(zero, d, c, eps, 3, 4, 1);
    CHECK(bad.marked_vertex_fraction == doctest::Approx(0.0));
    CHECK(bad.marked_edge_fraction == doctest::Approx(0.0));
}

TEST_CASE("marking survey: the algorithm marks enough edges at d = 2") {
    const int d = 2;
    const double c = 1.0, feps = 0.006;
    AlgorithmParams params{0.5, c, kInf, d, 0.2};
    GradientEstimator alg = [&params](const ObjectiveFunction& f, std::uint64_t seed) {
        return run_qge(f, params, seed).estimate;
    };
    const auto survey = empirical_marking_survey(alg, d, c, feps, 5, 4, 77);
    CHECK(survey.marked_edge_fraction >= 0.25);
}

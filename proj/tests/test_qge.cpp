#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "qgrad/bounds.hpp"
#include "qgrad/qge.hpp"
#include "qgrad/rng.hpp"

using namespace qgrad;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

ObjectiveFunction zero_fn(int d) {
    ObjectiveFunction f;
    f.dimension = d;
    f.evaluate = [](std::span<const double>) { return 0.0; };
    f.reference_gradient_at_origin = std::vector<double>(static_cast<size_t>(d), 0.0);
    return f;
}
}  // namespace

TEST_CASE("derived constants: worked example") {
    AlgorithmParams params{0.5, 1.0, kInf, 1, 0.26};
    const auto dc = derive_constants(params);
    CHECK(dc.eps_prime == doctest::Approx(0.26));
    CHECK(dc.m == 2);
    CHECK(dc.n == 6);
    CHECK(dc.N == static_cast<int>(std::ceil(18.0 * std::log2(3.0))));
    CHECK(static_cast<double>(dc.S) * dc.r * dc.eps_prime >= 8.0 * kPi);
    CHECK(dc.delta == doctest::Approx(1.0 / (12.0 * std::sqrt(2.0) * dc.S)));
    CHECK_FALSE(dc.sigma_clamped);
}

TEST_CASE("derived constants: eps_prime scales with d^{1/p}") {
    AlgorithmParams params{0.5, 1.0, 1.0, 2, 0.3};
    const auto dc = derive_constants(params);
    CHECK(dc.eps_prime == doctest::Approx(0.15));
    AlgorithmParams pinf = params;
    pinf.p = kInf;
    CHECK(derive_constants(pinf).eps_prime == doctest::Approx(0.3));
}

TEST_CASE("derived constants: sigma below one half is clamped") {
    AlgorithmParams params{0.0, 1.0, kInf, 1, 0.3};
    const auto dc = derive_constants(params);
    CHECK(dc.sigma_clamped);
    AlgorithmParams ref = params;
    ref.sigma = 0.5;
    CHECK(dc.m == derive_constants(ref).m);
    CHECK(dc.r == doctest::Approx(derive_constants(ref).r));
}

TEST_CASE("derived constants: validation and memory guard") {
    CHECK_THROWS_AS(derive_constants(AlgorithmParams{0.5, 1.0, kInf, 1, 1.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(derive_constants(AlgorithmParams{1.5, 1.0, kInf, 1, 0.3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(derive_constants(AlgorithmParams{0.5, 1.0, 0.5, 1, 0.3}),
                    std::invalid_argument);
    // tiny eps drives n*d over the default guard of 24 qubits
    CHECK_THROWS_AS(derive_constants(AlgorithmParams{0.5, 1.0, kInf, 3, 1e-4}),
                    MemoryGuardError);
}

TEST_CASE("inner loop on f = 0 returns the zero vector") {
    const auto f = zero_fn(1);
    AlgorithmParams params{0.5, 1.0, kInf, 1, 0.3};
    const auto dc = derive_constants(params);
    const GridSpec spec{1, dc.n, dc.r};
    const auto scheme = make_scheme(dc.m);
    std::mt19937_64 rng(4);
    QueryLedger ledger;
    for (int t = 0; t < 5; ++t) {
        const auto g = run_inner_loop(f, dc, spec, scheme, rng, ledger, QgeOptions{});
        CHECK(g[0] == 0.0);
    }
    CHECK(ledger.base_calls == 5ull * dc.S * (2 * dc.m + 1));
}

TEST_CASE("inner loop recovers an exact Fourier eigencase") {
    AlgorithmParams params{0.5, 1.0, kInf, 1, 0.3};
    const auto dc = derive_constants(params);
    const int j0 = 3;
    const double slope = 2.0 * kPi * j0 / (static_cast<double>(dc.S) * dc.r);
    ObjectiveFunction f;
    f.dimension = 1;
    f.evaluate = [slope](std::span<const double> x) { return slope * x[0]; };
    const GridSpec spec{1, dc.n, dc.r};
    const auto scheme = make_scheme(dc.m);
    std::mt19937_64 rng(11);
    QueryLedger ledger;
    for (int t = 0; t < 5; ++t) {
        const auto g = run_inner_loop(f, dc, spec, scheme, rng, ledger, QgeOptions{});
        CHECK(g[0] == doctest::Approx(slope).epsilon(1e-12));
    }
}

TEST_CASE("run_qge on f = 0 and determinism") {
    const auto f = zero_fn(2);
    AlgorithmParams params{0.5, 1.0, kInf, 2, 0.3};
    const auto r1 = run_qge(f, params, 99);
    CHECK(r1.estimate[0] == 0.0);
    CHECK(r1.estimate[1] == 0.0);
    const auto dc = derive_constants(params);
    CHECK(static_cast<int>(r1.per_loop_estimates.size()) == dc.N);

    TestFunctionInstance inst{2, 1.0, 0.006, {1, -1}};
    const auto tf = make_objective(inst);
    const auto a = run_qge(tf, params, 1234);
    const auto b = run_qge(tf, params, 1234);
    CHECK(a.estimate == b.estimate);
    const auto c = run_qge(tf, params, 1235);
    CHECK(a.per_loop_estimates != c.per_loop_estimates);
}

TEST_CASE("run_qge ledger matches both cost models exactly") {
    TestFunctionInstance inst{1, 1.0, 0.006, {1}};
    const auto f = make_objective(inst);
    AlgorithmParams params{0.5, 1.0, kInf, 1, 0.3};
    const auto dc = derive_constants(params);
    const auto exact = run_qge(f, params, 5);
    CHECK(exact.ledger.base_calls ==
          static_cast<std::uint64_t>(dc.N) * dc.S * (2 * dc.m + 1));
    QgeOptions opts;
    opts.cost_model = CostModel::FracQuery;
    const auto frac = run_qge(f, params, 5, opts);
    CHECK(frac.ledger.base_calls == static_cast<std::uint64_t>(dc.N) * dc.S *
                                         query_cost(dc.m, dc.delta, CostModel::FracQuery));
}

TEST_CASE("perturbed and cached paths agree on the ledger and succeed") {
    TestFunctionInstance inst{1, 1.0, 0.006, {1}};
    const auto f = make_objective(inst);
    AlgorithmParams params{0.5, 1.0, kInf, 1, 0.3};
    QgeOptions opts;
    opts.perturb = true;
    const auto run = run_qge(f, params, 31, opts);
    const auto dc = derive_constants(params);
    CHECK(run.ledger.base_calls == static_cast<std::uint64_t>(dc.N) * dc.S * (2 * dc.m + 1));
    CHECK(std::abs(run.estimate[0] - 73.0 * 0.006) <= 0.3);
}

TEST_CASE("mean aggregation is exposed and differs from the median in general") {
    std::vector<std::vector<double>> loops{{0.0}, {0.0}, {10.0}};
    // exercised indirectly: run_qge with --mean on a deterministic zero case
    const auto f = zero_fn(1);
    AlgorithmParams params{0.5, 1.0, kInf, 1, 0.3};
    QgeOptions opts;
    opts.use_mean = true;
    CHECK(run_qge(f, params, 1, opts).estimate[0] == 0.0);
    (void)loops;
}

TEST_CASE("exact inner-loop success probability is at least 2/3") {
    TestFunctionInstance inst{1, 1.0, 0.006, {-1}};
    const auto f = make_objective(inst);
    AlgorithmParams params{0.5, 1.0, kInf, 1, 0.3};
    const double mass = exact_inner_loop_success(f, params);
    CHECK(mass >= 2.0 / 3.0);
    CHECK(mass <= 1.0 + 1e-12);
}

TEST_CASE("estimate_success_probability on a d=1 instance") {
    TestFunctionInstance inst{1, 1.0, 0.006, {1}};
    const auto f = make_objective(inst);
    AlgorithmParams params{0.5, 1.0, kInf, 1, 0.3};
    const auto est = estimate_success_probability(f, params, 100, 2025);
    CHECK(est.trials == 100);
    CHECK(est.wilson_low >= 0.6);
}

TEST_CASE("naive gradient baseline") {
    ObjectiveFunction lin;
    lin.dimension = 3;
    lin.evaluate = [](std::span<const double> x) { return 1.0 + 2.0 * x[0] - x[2]; };
    const auto [g, count] = naive_gradient(lin, 0.01, 1.0, 0.0);
    CHECK(count == 4);
    CHECK(g[0] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(g[1] == doctest::Approx(0.0));
    CHECK(g[2] == doctest::Approx(-1.0).epsilon(1e-10));

    ObjectiveFunction sine;
    sine.dimension = 1;
    sine.evaluate = [](std::span<const double> x) { return 0.5 * std::sin(x[0]); };
    const auto [gs, cs] = naive_gradient(sine, 0.01, 1.0, 0.0);
    CHECK(cs == 2);
    CHECK(std::abs(gs[0] - 0.5) <= 0.01);

    ObjectiveFunction wide = zero_fn(10);
    CHECK(naive_gradient(wide, 0.01, 1.0, 0.5).second == 11);
}

TEST_CASE("lp_norm handles finite p and infinity") {
    const std::vector<double> v{3.0, -4.0};
    CHECK(lp_norm(v, 2.0) == doctest::Approx(5.0));
    CHECK(lp_norm(v, 1.0) == doctest::Approx(7.0));
    CHECK(lp_norm(v, kInf) == doctest::Approx(4.0));
    CHECK_THROWS_AS(lp_norm(v, 0.5), std::invalid_argument);
}

TEST_CASE("boost_samples basics") {
    const std::vector<std::vector<double>> same{{1.0, 2.0}, {1.0, 2.0}, {1.0, 2.0}};
    CHECK(boost_samples(same, 0.1, 2.0) == std::vector<double>{1.0, 2.0});

    const std::vector<std::vector<double>> trio{{0.0, 0.0}, {0.05, 0.0}, {9.0, 9.0}};
    const auto g = boost_samples(trio, 0.1, 2.0);
    CHECK(lp_norm(std::vector<double>{g[0], g[1]}, 2.0) < 0.2);

    CHECK_THROWS_AS(boost_samples({}, 0.1, 2.0), std::invalid_argument);
}

TEST_CASE("boost_samples returns zero when no majority ball exists") {
    std::vector<std::vector<double>> spread;
    for (int i = 0; i < 5; ++i) spread.push_back({static_cast<double>(100 * i), 0.0});
    const auto g = boost_samples(spread, 0.1, 2.0);
    CHECK(g == std::vector<double>{0.0, 0.0});
}

TEST_CASE("the l1 median pathology defeats the median but not boosting") {
    // Two five-sample clusters near (0.8, 0) and (0, 0.8) plus one outlier at
    // (0.6, 0.6); the target is the origin and all but the outlier lie within
    // l1 distance 1 of it.
    const std::vector<std::vector<double>> samples{
        {0.77, 0.09}, {0.9, -0.05}, {0.85, -0.05}, {0.81, -0.03}, {0.7, -0.01},
        {-0.02, 0.74}, {0.06, 0.8}, {0.02, 0.83},  {-0.05, 0.77}, {0.05, 0.93},
        {0.6, 0.6}};
    const double eps = 1.0;
    const std::vector<double> target{0.0, 0.0};
    size_t within = 0;
    for (const auto& s : samples)
        if (lp_norm(std::vector<double>{s[0], s[1]}, 1.0) <= eps) ++within;
    CHECK(2 * within > samples.size());

    // coordinate-wise median lands on the outlier, outside the eps ball
    std::vector<double> xs, ys;
    for (const auto& s : samples) {
        xs.push_back(s[0]);
        ys.push_back(s[1]);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    const std::vector<double> median{xs[5], ys[5]};
    CHECK(lp_norm(median, 1.0) > eps);

    const auto g = boost_samples(samples, eps, 1.0);
    std::vector<double> diff{g[0] - target[0], g[1] - target[1]};
    CHECK(lp_norm(diff, 1.0) <= 3.0 * eps);
    CHECK(lp_norm(diff, 1.0) > 0.0);  // not the zero fallback
}

TEST_CASE("exact l-infinity boosting") {
    const std::vector<std::vector<double>> samples{
        {0.0, 0.0}, {0.1, -0.1}, {0.05, 0.08}, {5.0, 5.0}, {-6.0, 2.0}};
    const auto g = boost_samples_linf_exact(samples, 0.15);
    // majority cluster of three near the origin
    std::vector<double> d0{g[0], g[1]};
    CHECK(lp_norm(d0, kInf) <= 0.3);
}

TEST_CASE("wilson interval sanity") {
    const auto [lo_all, hi_all] = wilson_interval(200, 200);
    CHECK(lo_all > 0.97);
    CHECK(hi_all == doctest::Approx(1.0));
    const auto [lo_half, hi_half] = wilson_interval(100, 200);
    CHECK(lo_half < 0.5);
    CHECK(hi_half > 0.5);
    const auto [lo_none, hi_none] = wilson_interval(0, 0);
    CHECK(lo_none == 0.0);
    CHECK(hi_none == 1.0);
}

TEST_CASE("seed mixing decorrelates streams") {
    CHECK(mix_seed(1, 0) != mix_seed(1, 1));
    CHECK(mix_seed(1, 0) != mix_seed(2, 0));
    CHECK(mix_seed(7, 3) == mix_seed(7, 3));
}

#include "qgrad/bounds.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "qgrad/qge.hpp"
#include "qgrad/rng.hpp"

namespace qgrad {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double lower_bound_p1(int d, double c, double eps) {
    if (!(eps > 0.0 && eps < c / 146.0))
        throw std::invalid_argument("lower_bound_p1: requires eps in (0, c/146)");
    return c * std::pow(static_cast<double>(d), 1.5) / (876.0 * eps);
}

LowerBoundReport lower_bound_general(int d, double c, double eps, double p, double P) {
    const double dd = static_cast<double>(d);
    const double exp_d = std::isinf(p) ? 0.0 : 1.0 / p;
    if (!(eps > 0.0 && eps < c / (292.0 * std::pow(dd, 1.0 - exp_d))))
        throw std::invalid_argument(
            "lower_bound_general: requires eps in (0, c / (292 d^{1-1/p}))");
    if (!(P > 0.5 && P <= 1.0))
        throw std::invalid_argument("lower_bound_general: requires P in (1/2, 1]");
    LowerBoundReport report;
    report.d = d;
    report.c = c;
    report.eps = eps;
    report.p = p;
    report.P = P;
    const double half = P - 0.5;
    int N = static_cast<int>(std::ceil(18.0 * (1.0 - P) / (half * half)));
    if (N < 1) {
        // At P = 1 the formula yields N = 0 and the bound would divide by
        // zero; guard to 1 and flag.
        N = 1;
        report.p_one_guarded = true;
    }
    report.N_boost = N;
    report.bound_value = c * std::pow(dd, 0.5 + exp_d) / (1752.0 * N * eps);
    return report;
}

double hybrid_bound(const ObjectiveFunction& f0,
                    const std::vector<ObjectiveFunction>& peripherals, const GridSpec& grid) {
    if (peripherals.empty()) throw std::invalid_argument("hybrid_bound: no peripherals");
    const std::size_t total = grid.total_points();
    const double Nf = static_cast<double>(peripherals.size());
    double max_sum = 0.0;
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<int> k = decode_index(grid, idx);
        std::vector<double> x = grid_point(grid, k);
        const double f0x = f0(x);
        double sum = 0.0;
        for (const auto& fj : peripherals) {
            // |e^{ia} - e^{ib}|^2 = 2 - 2 cos(a - b)
            sum += 2.0 - 2.0 * std::cos(f0x - fj(x));
        }
        max_sum = std::max(max_sum, sum);
    }
    if (max_sum == 0.0) return kInf;
    return std::sqrt(Nf / (9.0 * max_sum));
}

double oracle_distance_sup(const std::vector<int>& bstar, double c, double eps, int d,
                           const std::vector<std::vector<double>>& samples) {
    if (static_cast<int>(bstar.size()) != d)
        throw std::invalid_argument("oracle_distance_sup: sign vector length mismatch");
    TestFunctionInstance center{d, c, eps, bstar};
    std::vector<TestFunctionInstance> flipped;
    for (int j = 0; j < d; ++j) {
        TestFunctionInstance inst = center;
        inst.b[static_cast<size_t>(j)] = -inst.b[static_cast<size_t>(j)];
        flipped.push_back(std::move(inst));
    }
    double sup = 0.0;
    for (const auto& x : samples) {
        const double f0 = test_function_eval(center, x);
        double sum = 0.0;
        for (int j = 0; j < d; ++j) {
            const double diff = f0 - test_function_eval(flipped[static_cast<size_t>(j)], x);
            sum += diff * diff;
        }
        sup = std::max(sup, sum);
    }
    return sup;
}

double moment_bound_value(int d, int k, double q) {
    const double half_d = static_cast<double>(d) / 2.0;
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= i;
    const double first = 2.0 * std::pow(half_d, k) * kfact;
    const double second = std::pow(half_d, 2.0 * k);
    return std::pow(first, q) * std::pow(second, 1.0 - q);
}

MomentCheck moment_bound_check(int d, int k, double q, int trials, int n_grid,
                               std::uint64_t seed) {
    if (trials < 2) throw std::invalid_argument("moment_bound_check: need trials >= 2");
    std::mt19937_64 rng(seed);
    const int P = 1 << n_grid;
    const int H = P / 2;
    std::uniform_int_distribution<int> idx(-H, H - 1);
    double sum = 0.0, sumsq = 0.0;
    for (int t = 0; t < trials; ++t) {
        double s = 0.0;
        for (int j = 0; j < d; ++j) s += (idx(rng) + 0.5) / P;  // grid marginal on [-1/2, 1/2]
        const double v = std::pow(s, 2.0 * k);
        sum += v;
        sumsq += v * v;
    }
    MomentCheck check;
    check.empirical = sum / trials;
    const double var = std::max(0.0, sumsq / trials - check.empirical * check.empirical);
    check.std_error = std::sqrt(var / trials);
    check.bound = moment_bound_value(d, k, q);
    check.pass = check.empirical <= check.bound * (1.0 + 3.0 * check.std_error / check.bound);
    return check;
}

MarkingSurvey empirical_marking_survey(const GradientEstimator& estimator, int d, double c,
                                       double eps, int trials_per_vertex, int vertex_budget,
                                       std::uint64_t seed) {
    MarkingSurvey survey;
    survey.d = d;

    std::vector<std::vector<int>> vertices;
    if (d <= 4) {
        for (int mask = 0; mask < (1 << d); ++mask) {
            std::vector<int> b(static_cast<size_t>(d));
            for (int j = 0; j < d; ++j) b[static_cast<size_t>(j)] = (mask >> j) & 1 ? 1 : -1;
            vertices.push_back(std::move(b));
        }
    } else {
        std::mt19937_64 rng(mix_seed(seed, 0xfaceull));
        std::bernoulli_distribution coin(0.5);
        for (int t = 0; t < vertex_budget; ++t) {
            std::vector<int> b(static_cast<size_t>(d));
            for (int j = 0; j < d; ++j) b[static_cast<size_t>(j)] = coin(rng) ? 1 : -1;
            vertices.push_back(std::move(b));
        }
    }
    survey.vertices_surveyed = static_cast<int>(vertices.size());

    const double tol = 72.0 * eps / d;
    std::vector<std::vector<bool>> marked(vertices.size(),
                                          std::vector<bool>(static_cast<size_t>(d), false));
    survey.per_coordinate_fraction.assign(static_cast<size_t>(d), 0.0);
    int any_marked = 0;
    for (size_t v = 0; v < vertices.size(); ++v) {
        TestFunctionInstance inst{d, c, eps, vertices[v]};
        const ObjectiveFunction f = make_objective(inst);
        const std::vector<double> grad = gradient_at_origin(inst);
        std::vector<int> hits(static_cast<size_t>(d), 0);
        for (int t = 0; t < trials_per_vertex; ++t) {
            const std::vector<double> est =
                estimator(f, mix_seed(seed, (v << 20) + static_cast<std::uint64_t>(t)));
            for (int j = 0; j < d; ++j)
                if (std::abs(est[static_cast<size_t>(j)] - grad[static_cast<size_t>(j)]) <= tol)
                    ++hits[static_cast<size_t>(j)];
        }
        bool any = false;
        for (int j = 0; j < d; ++j) {
            const bool mk = 3 * hits[static_cast<size_t>(j)] >= 2 * trials_per_vertex;
            marked[v][static_cast<size_t>(j)] = mk;
            if (mk) {
                survey.per_coordinate_fraction[static_cast<size_t>(j)] += 1.0;
                any = true;
            }
        }
        if (any) ++any_marked;
    }
    for (double& frac : survey.per_coordinate_fraction) frac /= static_cast<double>(vertices.size());
    survey.marked_vertex_fraction =
        static_cast<double>(any_marked) / static_cast<double>(vertices.size());

    // Edge statistics only make sense over the full cube.
    if (d <= 4) {
        int marked_edges = 0, total_edges = 0;
        for (int mask = 0; mask < (1 << d); ++mask) {
            for (int j = 0; j < d; ++j) {
                if ((mask >> j) & 1) continue;  // count each edge once
                const int other = mask | (1 << j);
                ++total_edges;
                if (marked[static_cast<size_t>(mask)][static_cast<size_t>(j)] &&
                    marked[static_cast<size_t>(other)][static_cast<size_t>(j)])
                    ++marked_edges;
            }
        }
        survey.marked_edge_fraction =
            total_edges > 0 ? static_cast<double>(marked_edges) / total_edges : 0.0;
    }
    return survey;
}

}  // namespace qgrad

#include "qgrad/qge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "qgrad/rng.hpp"

namespace qgrad {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

// ceil(log2(v)) with a snap window so exact powers of two computed in floating
// point do not round up spuriously.
int ceil_log2(double v) {
    if (!(v > 0.0)) throw std::domain_error("ceil_log2: nonpositive argument");
    double lg = std::log2(v);
    if (std::abs(lg - std::round(lg)) < 1e-9) lg = std::round(lg);
    return static_cast<int>(std::ceil(lg));
}

double median_of(std::vector<double> v) {
    const size_t n = v.size();
    std::nth_element(v.begin(), v.begin() + n / 2, v.end());
    double hi = v[n / 2];
    if (n % 2 == 1) return hi;
    std::nth_element(v.begin(), v.begin() + n / 2 - 1, v.end());
    return 0.5 * (v[n / 2 - 1] + hi);
}

std::vector<double> aggregate(const std::vector<std::vector<double>>& loops, int d,
                              bool use_mean) {
    std::vector<double> out(static_cast<size_t>(d), 0.0);
    if (use_mean) {
        for (const auto& g : loops)
            for (int j = 0; j < d; ++j) out[static_cast<size_t>(j)] += g[static_cast<size_t>(j)];
        for (double& v : out) v /= static_cast<double>(loops.size());
        return out;
    }
    std::vector<double> column(loops.size());
    for (int j = 0; j < d; ++j) {
        for (size_t i = 0; i < loops.size(); ++i) column[i] = loops[i][static_cast<size_t>(j)];
        out[static_cast<size_t>(j)] = median_of(column);
    }
    return out;
}

}  // namespace

DerivedConstants derive_constants(const AlgorithmParams& params) {
    if (params.d < 1) throw std::invalid_argument("derive_constants: d must be >= 1");
    if (!(params.c > 0.0)) throw std::invalid_argument("derive_constants: c must be positive");
    if (!(params.eps > 0.0 && params.eps < params.c))
        throw std::invalid_argument("derive_constants: requires eps in (0, c)");
    if (!(params.p >= 1.0)) throw std::invalid_argument("derive_constants: requires p >= 1");
    if (params.sigma < 0.0 || params.sigma > 1.0)
        throw std::invalid_argument("derive_constants: requires sigma in [0, 1]");

    DerivedConstants dc;
    double sigma = params.sigma;
    if (sigma < 0.5) {
        // Gevrey classes are nested in sigma, so a function declared below 1/2
        // is also a member at 1/2; run the algorithm there.
        sigma = 0.5;
        dc.sigma_clamped = true;
    }
    const double d = static_cast<double>(params.d);
    const double dp = std::isinf(params.p) ? 1.0 : std::pow(d, 1.0 / params.p);
    dc.eps_prime = params.eps / dp;

    const double ds = std::pow(d, sigma);
    const double two_s = std::pow(2.0, sigma);
    dc.m = std::max(ceil_log2(params.c * ds / dc.eps_prime), 2);
    const double base = two_s * dc.eps_prime / (272.0 * kPi * kE * dc.m * params.c * ds);
    dc.r = two_s / (2.0 * kE * dc.m * params.c * ds) * std::pow(base, 1.0 / (2.0 * dc.m));
    const double s_real = std::ceil(8.0 * kPi / (dc.r * dc.eps_prime));
    if (!(s_real >= 1.0)) throw std::logic_error("derive_constants: S < 1");
    dc.S = static_cast<std::uint64_t>(s_real);
    dc.n = ceil_log2(12.0 * params.c / dc.eps_prime);
    dc.N = static_cast<int>(std::ceil(18.0 * std::log2(3.0 * d)));
    dc.delta = 1.0 / (12.0 * std::sqrt(2.0) * static_cast<double>(dc.S));

    const long long nd = static_cast<long long>(dc.n) * params.d;
    if (nd > memory_guard())
        throw MemoryGuardError("derived constants need n*d = " + std::to_string(nd) +
                               " qubits, exceeding the memory guard of " +
                               std::to_string(memory_guard()));
    return dc;
}

std::vector<double> run_inner_loop(const ObjectiveFunction& f, const DerivedConstants& dc,
                                   const GridSpec& spec, const CentralDifferenceScheme& scheme,
                                   std::mt19937_64& rng, QueryLedger& ledger,
                                   const QgeOptions& opts) {
    State state = uniform_superposition(spec);
    PerturbSpec perturb;
    if (opts.perturb) {
        perturb.enabled = true;
        perturb.seed = rng();
    }
    apply_smoothing_oracle_repeated(state, f, scheme, dc.delta, dc.S, perturb, ledger);
    inverse_qft_all_axes(state);
    std::vector<int> h = sample_outcome(state, rng);
    std::vector<double> g(h.size());
    const double scale = 2.0 * kPi / (static_cast<double>(dc.S) * dc.r);
    for (size_t j = 0; j < h.size(); ++j) g[j] = scale * h[j];
    return g;
}

namespace {

// Pre-measurement outcome distribution of one (unperturbed) inner loop as a
// cumulative table; identical for every loop, so it is computed once.
struct CachedLoop {
    GridSpec spec;
    std::vector<double> cumulative;
    QueryLedger per_loop;  // ledger increments of a single loop
};

CachedLoop build_cached_loop(const ObjectiveFunction& f, const DerivedConstants& dc,
                             const CentralDifferenceScheme& scheme, CostModel model, int d) {
    CachedLoop cl;
    cl.spec = GridSpec{d, dc.n, dc.r};
    cl.per_loop.cost_model = model;
    State state = uniform_superposition(cl.spec);
    apply_smoothing_oracle_repeated(state, f, scheme, dc.delta, dc.S, PerturbSpec{}, cl.per_loop);
    inverse_qft_all_axes(state);
    cl.cumulative.resize(state.amplitudes.size());
    double acc = 0.0;
    for (size_t i = 0; i < state.amplitudes.size(); ++i) {
        acc += std::norm(state.amplitudes[i]);
        cl.cumulative[i] = acc;
    }
    return cl;
}

std::vector<int> sample_cached(const CachedLoop& cl, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double u = unif(rng);
    auto it = std::upper_bound(cl.cumulative.begin(), cl.cumulative.end(), u);
    size_t idx = static_cast<size_t>(it - cl.cumulative.begin());
    if (idx >= cl.cumulative.size()) idx = cl.cumulative.size() - 1;
    return decode_index(cl.spec, idx);
}

RunResult run_qge_cached(const ObjectiveFunction& f, const CachedLoop& cl,
                         const DerivedConstants& dc, std::uint64_t seed, const QgeOptions& opts) {
    RunResult result;
    result.seed = seed;
    result.ledger.cost_model = opts.cost_model;
    const double scale = 2.0 * kPi / (static_cast<double>(dc.S) * dc.r);
    for (int i = 0; i < dc.N; ++i) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        std::vector<int> h = sample_cached(cl, rng);
        std::vector<double> g(h.size());
        for (size_t j = 0; j < h.size(); ++j) g[j] = scale * h[j];
        result.per_loop_estimates.push_back(std::move(g));
        result.ledger.base_calls += cl.per_loop.base_calls;
        result.ledger.smoothing_calls += cl.per_loop.smoothing_calls;
    }
    result.estimate = aggregate(result.per_loop_estimates, f.dimension, opts.use_mean);
    return result;
}

}  // namespace

RunResult run_qge(const ObjectiveFunction& f, const AlgorithmParams& params, std::uint64_t seed,
                  const QgeOptions& opts) {
    if (f.dimension != params.d) throw std::invalid_argument("run_qge: dimension mismatch");
    const DerivedConstants dc = derive_constants(params);
    const CentralDifferenceScheme scheme = make_scheme(dc.m);
    if (!opts.perturb) {
        const CachedLoop cl = build_cached_loop(f, dc, scheme, opts.cost_model, params.d);
        return run_qge_cached(f, cl, dc, seed, opts);
    }
    const GridSpec spec{params.d, dc.n, dc.r};
    RunResult result;
    result.seed = seed;
    result.ledger.cost_model = opts.cost_model;
    for (int i = 0; i < dc.N; ++i) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        result.per_loop_estimates.push_back(
            run_inner_loop(f, dc, spec, scheme, rng, result.ledger, opts));
    }
    result.estimate = aggregate(result.per_loop_estimates, params.d, opts.use_mean);
    return result;
}

SuccessEstimate estimate_success_probability(const ObjectiveFunction& f,
                                             const AlgorithmParams& params, int trials,
                                             std::uint64_t seed, const QgeOptions& opts) {
    if (!f.reference_gradient_at_origin)
        throw std::invalid_argument("estimate_success_probability: reference gradient required");
    const std::vector<double>& grad = *f.reference_gradient_at_origin;
    const DerivedConstants dc = derive_constants(params);
    const CentralDifferenceScheme scheme = make_scheme(dc.m);

    // One outcome distribution serves every unperturbed trial.
    std::optional<CachedLoop> cache;
    if (!opts.perturb) cache = build_cached_loop(f, dc, scheme, opts.cost_model, params.d);

    SuccessEstimate est;
    est.trials = trials;
    std::vector<double> diff(static_cast<size_t>(params.d));
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = mix_seed(seed, 0x51d0000ull + static_cast<std::uint64_t>(t));
        RunResult run = cache ? run_qge_cached(f, *cache, dc, trial_seed, opts)
                              : run_qge(f, params, trial_seed, opts);
        for (int j = 0; j < params.d; ++j)
            diff[static_cast<size_t>(j)] =
                run.estimate[static_cast<size_t>(j)] - grad[static_cast<size_t>(j)];
        if (lp_norm(diff, params.p) <= params.eps) ++est.successes;
    }
    est.fraction = trials > 0 ? static_cast<double>(est.successes) / trials : 0.0;
    std::tie(est.wilson_low, est.wilson_high) = wilson_interval(est.successes, est.trials);
    return est;
}

double exact_inner_loop_success(const ObjectiveFunction& f, const AlgorithmParams& params) {
    if (params.d != 1 || f.dimension != 1)
        throw std::invalid_argument("exact_inner_loop_success: d = 1 only");
    if (!f.reference_gradient_at_origin)
        throw std::invalid_argument("exact_inner_loop_success: reference gradient required");
    const double grad = (*f.reference_gradient_at_origin)[0];
    const DerivedConstants dc = derive_constants(params);
    const CentralDifferenceScheme scheme = make_scheme(dc.m);
    const GridSpec spec{1, dc.n, dc.r};
    State state = uniform_superposition(spec);
    QueryLedger ledger;
    apply_smoothing_oracle_repeated(state, f, scheme, dc.delta, dc.S, PerturbSpec{}, ledger);
    inverse_qft_all_axes(state);
    const double scale = 2.0 * kPi / (static_cast<double>(dc.S) * dc.r);
    const int half = spec.half();
    double mass = 0.0;
    for (int h = -half; h < half; ++h) {
        if (std::abs(scale * h - grad) <= dc.eps_prime)
            mass += std::norm(state.amplitudes[static_cast<size_t>(h + half)]);
    }
    return mass;
}

std::pair<std::vector<double>, int> naive_gradient(const ObjectiveFunction& f, double eps,
                                                   double c, double sigma) {
    const double r = 4.0 * eps / (c * c * std::pow(2.0, sigma));
    const int d = f.dimension;
    std::vector<double> x(static_cast<size_t>(d), 0.0);
    const double f0 = f(x);
    std::vector<double> g(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
        x[static_cast<size_t>(j)] = r;
        g[static_cast<size_t>(j)] = (f(x) - f0) / r;
        x[static_cast<size_t>(j)] = 0.0;
    }
    return {g, d + 1};
}

double lp_norm(std::span<const double> v, double p) {
    if (std::isinf(p)) {
        double mx = 0.0;
        for (double x : v) mx = std::max(mx, std::abs(x));
        return mx;
    }
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: requires p >= 1");
    double s = 0.0;
    for (double x : v) s += std::pow(std::abs(x), p);
    return std::pow(s, 1.0 / p);
}

std::vector<double> boost_samples(const std::vector<std::vector<double>>& samples, double eps,
                                  double p) {
    if (samples.empty()) throw std::invalid_argument("boost_samples: no samples");
    const size_t n = samples.size();
    std::vector<double> diff(samples[0].size());
    for (const auto& candidate : samples) {
        size_t within = 0;
        for (const auto& s : samples) {
            for (size_t j = 0; j < diff.size(); ++j) diff[j] = s[j] - candidate[j];
            if (lp_norm(diff, p) <= 2.0 * eps) ++within;
        }
        if (2 * within > n) return candidate;
    }
    return std::vector<double>(samples[0].size(), 0.0);
}

std::vector<double> boost_samples_linf_exact(const std::vector<std::vector<double>>& samples,
                                             double eps) {
    if (samples.empty()) throw std::invalid_argument("boost_samples_linf_exact: no samples");
    const size_t n = samples.size();
    const size_t d = samples[0].size();
    double combos = 1.0;
    for (size_t j = 0; j < d; ++j) combos *= static_cast<double>(n);
    if (combos > 1e7)
        throw std::invalid_argument("boost_samples_linf_exact: candidate grid too large");
    // An optimal center can be taken with every coordinate at some interval
    // lower endpoint s_{i,j} - eps (slide the center down until blocked).
    std::vector<size_t> pick(d, 0);
    std::vector<double> g(d), best;
    size_t best_count = 0;
    while (true) {
        for (size_t j = 0; j < d; ++j) g[j] = samples[pick[j]][j] - eps;
        size_t within = 0;
        for (const auto& s : samples) {
            bool ok = true;
            for (size_t j = 0; j < d && ok; ++j) ok = std::abs(s[j] - g[j]) <= eps + 1e-12;
            if (ok) ++within;
        }
        if (within > best_count) {
            best_count = within;
            best = g;
        }
        size_t j = 0;
        for (; j < d; ++j) {
            if (++pick[j] < n) break;
            pick[j] = 0;
        }
        if (j == d) break;
    }
    if (2 * best_count > n) return best;
    return std::vector<double>(d, 0.0);
}

std::pair<double, double> wilson_interval(int successes, int trials) {
    if (trials <= 0) return {0.0, 1.0};
    const double z = 1.959963984540054;  // 95% two-sided normal quantile
    const double nd = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / nd;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nd;
    const double center = phat + z2 / (2.0 * nd);
    const double rad = z * std::sqrt(phat * (1.0 - phat) / nd + z2 / (4.0 * nd * nd));
    return {(center - rad) / denom, (center + rad) / denom};
}

}  // namespace qgrad

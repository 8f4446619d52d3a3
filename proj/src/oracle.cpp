#include "qgrad/oracle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qgrad {

std::uint64_t query_cost(int m, double delta, CostModel model) {
    if (m < 1) throw std::invalid_argument("query_cost: m must be >= 1");
    if (model == CostModel::ExactSim) return static_cast<std::uint64_t>(2 * m + 1);
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("query_cost: FracQuery needs delta in (0, 1)");
    const double lg = std::log2(2.0 * m / delta);
    // Snap near-integer values before ceiling so exact powers of two don't
    // round up from float noise.
    double snapped = lg;
    if (std::abs(lg - std::round(lg)) < 1e-9) snapped = std::round(lg);
    const auto factor = static_cast<std::uint64_t>(std::ceil(snapped));
    return 2ull * static_cast<std::uint64_t>(m) * factor + 1ull;
}

void apply_fractional_phase(State& state, const ObjectiveFunction& f, double xi,
                            QueryLedger& ledger, std::uint64_t base_cost) {
    const GridSpec& spec = state.spec;
    if (f.dimension != spec.d)
        throw std::invalid_argument("apply_fractional_phase: dimension mismatch");
    const std::size_t total = state.amplitudes.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<int> k = decode_index(spec, idx);
        std::vector<double> x = grid_point(spec, k);
        const double fx = f(x);
        if (std::abs(fx) > 0.5 + 1e-12)
            throw std::domain_error("apply_fractional_phase: |f(x)| > 1/2 on the grid");
        const double ang = xi * fx;
        state.amplitudes[idx] *= Complex(std::cos(ang), std::sin(ang));
    }
    ledger.base_calls += base_cost;
}

namespace {

// Accumulates the smoothing phase angles f_{(2m)}(x) (times `reps`) for every
// grid point, plus perturbation noise when enabled, then applies them in one
// diagonal pass.  Diagonal phases commute, so folding the reps together is
// exact; the noise draws are still one per (factor, application, point).
void apply_smoothing_impl(State& state, const ObjectiveFunction& f,
                          const CentralDifferenceScheme& scheme, double delta,
                          std::uint64_t reps, const PerturbSpec& perturb, QueryLedger& ledger) {
    const GridSpec& spec = state.spec;
    if (f.dimension != spec.d)
        throw std::invalid_argument("apply_smoothing_oracle: dimension mismatch");
    const int m = scheme.m;
    const std::size_t total = state.amplitudes.size();
    const double drep = static_cast<double>(reps);

    std::vector<double> angles(total, 0.0);
    std::vector<double> x;
    std::vector<double> scaled(static_cast<size_t>(spec.d));
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<int> k = decode_index(spec, idx);
        x = grid_point(spec, k);
        double phase = 0.0;
        for (int ell = -m; ell <= m; ++ell) {
            for (int j = 0; j < spec.d; ++j) scaled[static_cast<size_t>(j)] = ell * x[static_cast<size_t>(j)];
            const double fx = f(scaled);
            if (std::abs(fx) > 0.5 + 1e-12)
                throw std::domain_error("apply_smoothing_oracle: |f| > 1/2 on the extended grid");
            phase += scheme.coeff_d(ell) * fx;
        }
        angles[idx] = drep * phase;
    }

    if (perturb.enabled) {
        // Each of the 2m fractional factors in each application contributes an
        // independent uniform error in [-delta/(2m), delta/(2m)] per point.
        std::mt19937_64 noise_rng(perturb.seed);
        std::uniform_real_distribution<double> noise(-delta / (2.0 * m), delta / (2.0 * m));
        for (std::size_t idx = 0; idx < total; ++idx) {
            double err = 0.0;
            const std::uint64_t draws = reps * static_cast<std::uint64_t>(2 * m);
            for (std::uint64_t t = 0; t < draws; ++t) err += noise(noise_rng);
            angles[idx] += err;
        }
    }

    for (std::size_t idx = 0; idx < total; ++idx)
        state.amplitudes[idx] *= Complex(std::cos(angles[idx]), std::sin(angles[idx]));

    const std::uint64_t per_app = query_cost(m, delta, ledger.cost_model);
    ledger.base_calls += per_app * reps;
    ledger.smoothing_calls += reps;
}

}  // namespace

void apply_smoothing_oracle(State& state, const ObjectiveFunction& f,
                            const CentralDifferenceScheme& scheme, double delta,
                            const PerturbSpec& perturb, QueryLedger& ledger) {
    apply_smoothing_impl(state, f, scheme, delta, 1, perturb, ledger);
}

void apply_smoothing_oracle_repeated(State& state, const ObjectiveFunction& f,
                                     const CentralDifferenceScheme& scheme, double delta,
                                     std::uint64_t reps, const PerturbSpec& perturb,
                                     QueryLedger& ledger) {
    apply_smoothing_impl(state, f, scheme, delta, reps, perturb, ledger);
}

}  // namespace qgrad

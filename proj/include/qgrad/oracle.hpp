#pragma once

#include <cstdint>
#include <optional>

#include "qgrad/objective.hpp"
#include "qgrad/scheme.hpp"
#include "qgrad/state.hpp"

namespace qgrad {

enum class CostModel { ExactSim, FracQuery };

// Exact count of simulated base-oracle invocations under a declared model.
struct QueryLedger {
    std::uint64_t base_calls = 0;
    std::uint64_t smoothing_calls = 0;
    CostModel cost_model = CostModel::ExactSim;
};

// Base calls per smoothing-oracle application:
// ExactSim -> 2m + 1; FracQuery -> 2m ceil(log2(2m/delta)) + 1.
std::uint64_t query_cost(int m, double delta, CostModel model);

// Multiplies the amplitude at each grid point x by e^{i xi f(x)}.
// Rejects |f(x)| > 1/2. `base_cost` is the ledger increment for this call.
void apply_fractional_phase(State& state, const ObjectiveFunction& f, double xi,
                            QueryLedger& ledger, std::uint64_t base_cost = 1);

struct PerturbSpec {
    bool enabled = false;
    std::uint64_t seed = 0;
};

// Applies the phase e^{i f_{(2m)}(x)} by composing 2m fractional factors with
// powers a_l at the rescaled points l x plus one plain factor (l = 0). With
// perturbation enabled each fractional factor picks up an independent phase
// error uniform in [-delta/(2m), delta/(2m)] per grid point, so the composed
// map deviates from the ideal by operator norm <= delta.
void apply_smoothing_oracle(State& state, const ObjectiveFunction& f,
                            const CentralDifferenceScheme& scheme, double delta,
                            const PerturbSpec& perturb, QueryLedger& ledger);

// Repeated application: phase S f_{(2m)}(x) in one pass (diagonal phases
// commute), with per-application noise draws when perturbed. The ledger counts
// all `reps` applications.
void apply_smoothing_oracle_repeated(State& state, const ObjectiveFunction& f,
                                     const CentralDifferenceScheme& scheme, double delta,
                                     std::uint64_t reps, const PerturbSpec& perturb,
                                     QueryLedger& ledger);

}  // namespace qgrad

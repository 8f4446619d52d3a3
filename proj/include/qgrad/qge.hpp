#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qgrad/oracle.hpp"

namespace qgrad {

// User-chosen parameters of the gradient estimation algorithm.
// p may be infinity (std::numeric_limits<double>::infinity()).
struct AlgorithmParams {
    double sigma = 0.5;
    double c = 1.0;
    double p = 2.0;
    int d = 1;
    double eps = 0.1;
};

// The concrete parameter schedule computed from AlgorithmParams.
struct DerivedConstants {
    double eps_prime = 0.0;
    int m = 0;
    double r = 0.0;
    std::uint64_t S = 0;
    int n = 0;
    int N = 0;
    double delta = 0.0;
    bool sigma_clamped = false;  // declared sigma < 1/2 was raised to 1/2
};

DerivedConstants derive_constants(const AlgorithmParams& params);

struct QgeOptions {
    bool perturb = false;
    bool use_mean = false;  // literal algorithm text; default follows the proof (median)
    CostModel cost_model = CostModel::ExactSim;
};

struct RunResult {
    std::vector<double> estimate;
    QueryLedger ledger;
    std::vector<std::vector<double>> per_loop_estimates;
    std::uint64_t seed = 0;
};

// One pass of the inner loop: uniform superposition, S smoothing-oracle
// applications, inverse QFT on all axes, one sample; returns (2 pi / (S r)) h.
std::vector<double> run_inner_loop(const ObjectiveFunction& f, const DerivedConstants& dc,
                                   const GridSpec& spec, const CentralDifferenceScheme& scheme,
                                   std::mt19937_64& rng, QueryLedger& ledger,
                                   const QgeOptions& opts = {});

// N inner loops with seeds mixed from the master seed; the estimate is the
// coordinate-wise median (or mean when opts.use_mean).
RunResult run_qge(const ObjectiveFunction& f, const AlgorithmParams& params, std::uint64_t seed,
                  const QgeOptions& opts = {});

struct SuccessEstimate {
    int trials = 0;
    int successes = 0;
    double fraction = 0.0;
    double wilson_low = 0.0;
    double wilson_high = 1.0;
};

// Repeated run_qge; success means ||estimate - grad f(0)||_p <= eps.
SuccessEstimate estimate_success_probability(const ObjectiveFunction& f,
                                             const AlgorithmParams& params, int trials,
                                             std::uint64_t seed, const QgeOptions& opts = {});

// d = 1 shortcut: exact per-loop probability mass of |g - grad f(0)| <= eps',
// integrated from the outcome distribution instead of sampled.
double exact_inner_loop_success(const ObjectiveFunction& f, const AlgorithmParams& params);

// Classical forward-difference baseline with step r = 4 eps / (c^2 2^sigma);
// returns the estimate and the number of function evaluations (d + 1).
std::pair<std::vector<double>, int> naive_gradient(const ObjectiveFunction& f, double eps,
                                                   double c, double sigma);

// Majority boosting: returns a sample g such that a strict majority of samples
// lies within 2 eps of g in l^p, or the zero vector if none qualifies. If a
// strict majority lies within eps of an unknown target, the result is within
// 3 eps of that target.
std::vector<double> boost_samples(const std::vector<std::vector<double>>& samples, double eps,
                                  double p);

// Exact l^inf variant via per-coordinate interval stabbing.
std::vector<double> boost_samples_linf_exact(const std::vector<std::vector<double>>& samples,
                                             double eps);

double lp_norm(std::span<const double> v, double p);

// Wilson score interval at 95% confidence.
std::pair<double, double> wilson_interval(int successes, int trials);

}  // namespace qgrad

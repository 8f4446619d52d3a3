#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qgrad/objective.hpp"
#include "qgrad/state.hpp"

namespace qgrad {

// c d^{3/2} / (876 eps); requires eps in (0, c/146).
double lower_bound_p1(int d, double c, double eps);

struct LowerBoundReport {
    int d = 0;
    double c = 0.0;
    double eps = 0.0;
    double p = 1.0;
    double P = 1.0;
    int N_boost = 1;
    double bound_value = 0.0;
    bool p_one_guarded = false;  // P = 1 edge case: N formula gives 0, guarded to 1
};

// c d^{1/2 + 1/p} / (1752 N eps) with N = ceil(18 (1-P) / (P - 1/2)^2);
// requires eps in (0, c / (292 d^{1-1/p})) and P in (1/2, 1].
LowerBoundReport lower_bound_general(int d, double c, double eps, double p, double P);

// Hybrid-method bound for diagonal oracles: the maximization over unit states
// reduces exactly to a maximization over grid points, giving
// sqrt(N / (9 max_x sum_j |e^{i f0(x)} - e^{i fj(x)}|^2)).
// Returns +infinity when all peripherals coincide with f0 on the grid.
double hybrid_bound(const ObjectiveFunction& f0,
                    const std::vector<ObjectiveFunction>& peripherals, const GridSpec& grid);

// max over sampled x of sum_j |f_{b*}(x) - f_{b^(j)}(x)|^2 where b^(j) flips
// coordinate j; always <= (146 eps / (c d))^2.
double oracle_distance_sup(const std::vector<int>& bstar, double c, double eps, int d,
                           const std::vector<std::vector<double>>& samples);

struct MomentCheck {
    double empirical = 0.0;
    double std_error = 0.0;
    double bound = 0.0;
    bool pass = false;
};

// Monte Carlo estimate of E[(sum_j x_j)^{2k}] with x_j i.i.d. from the grid
// marginal {(t + 1/2)/2^n : t in [-2^{n-1}, 2^{n-1})}, checked against the
// geometric-average bound [2 (d/2)^k k!]^q [(d/2)^{2k}]^{1-q}.
MomentCheck moment_bound_check(int d, int k, double q, int trials, int n_grid,
                               std::uint64_t seed);

double moment_bound_value(int d, int k, double q);

// A gradient estimator to be surveyed: maps a test-function objective and a
// seed to an estimate vector.
using GradientEstimator =
    std::function<std::vector<double>(const ObjectiveFunction&, std::uint64_t)>;

struct MarkingSurvey {
    int d = 0;
    int vertices_surveyed = 0;
    // fraction of surveyed vertices marked by each coordinate
    std::vector<double> per_coordinate_fraction;
    double marked_vertex_fraction = 0.0;  // marked by at least one coordinate
    double marked_edge_fraction = 0.0;    // of all d 2^{d-1} cube edges
};

// Samples Hamming-cube vertices (full cube for d <= 4, random beyond) and for
// each coordinate j estimates P[|A(f_b)_j - grad f_b(0)_j| <= 72 eps / d] over
// repeated estimator runs; a vertex is marked by j when that estimate is
// >= 2/3, and an edge is marked when both endpoints are marked by the edge's
// direction.
MarkingSurvey empirical_marking_survey(const GradientEstimator& estimator, int d, double c,
                                       double eps, int trials_per_vertex, int vertex_budget,
                                       std::uint64_t seed);

}  // namespace qgrad

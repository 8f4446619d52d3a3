#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qgrad {

// Axis-aligned open box; an absent box means all of R^d.
struct DomainBox {
    std::vector<double> lo;
    std::vector<double> hi;
    bool contains(std::span<const double> x) const;
};

// A black-box objective together with its declared smoothness parameters.
// `partial`, when present, is a closed-form partial derivative evaluator
// taking a multi-index (sequence of 0-based coordinate indices) and a point.
struct ObjectiveFunction {
    std::string name;
    int dimension = 1;
    double declared_c = 1.0;
    double declared_sigma = 0.0;
    std::function<double(std::span<const double>)> evaluate;
    std::optional<DomainBox> domain;
    std::optional<std::vector<double>> reference_gradient_at_origin;
    std::function<double(std::span<const int>, std::span<const double>)> partial;
    // Set for catalog rows whose smoothness class rests on numerical evidence
    // rather than proof; the membership check then allows ratio <= 1.05.
    bool numerical_evidence = false;

    double operator()(std::span<const double> x) const { return evaluate(x); }
};

// Member of the adversarial family: sum_j (73 eps b_j)/(c d) sin(c x_j)
// prod_{k != j} cos(c x_k). Gradient at the origin is (73 eps / d) b.
struct TestFunctionInstance {
    int d = 1;
    double c = 1.0;
    double eps = 0.001;
    std::vector<int> b;  // entries in {-1, +1}
};

double test_function_eval(const TestFunctionInstance& inst, std::span<const double> x);
double test_function_partial(const TestFunctionInstance& inst, std::span<const int> alpha,
                             std::span<const double> x);
std::vector<double> gradient_at_origin(const TestFunctionInstance& inst);
ObjectiveFunction make_objective(const TestFunctionInstance& inst);

// The seven 1-D catalog entries with their declared (c-scale, sigma, domain).
std::vector<ObjectiveFunction> catalog(double c = 1.0);
const ObjectiveFunction& catalog_lookup(const std::vector<ObjectiveFunction>& cat,
                                        const std::string& name);

struct GevreyEntry {
    std::vector<int> alpha;      // multi-index, 0-based coordinates
    std::vector<double> point;
    double value = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
    bool unreliable = false;     // finite-difference error estimate too large
};

struct GevreyReport {
    std::vector<GevreyEntry> entries;
    double max_ratio = 0.0;
    bool pass = false;
    bool any_unreliable = false;
};

// Checks |partial_alpha f(x)| <= (1/2) c^k (k!)^sigma over sampled multi-indices
// and points. Orders 0..2 are enumerated exhaustively; higher orders are
// sampled (50 random multi-indices per order). Functions without a closed-form
// `partial` are limited to order <= 4 via central finite differences.
GevreyReport gevrey_check(const ObjectiveFunction& f, int max_order,
                          std::span<const std::vector<double>> sample_points,
                          std::uint64_t seed, double tolerance = 1e-9);

}  // namespace qgrad

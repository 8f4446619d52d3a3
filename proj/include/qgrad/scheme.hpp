#pragma once

#include <span>
#include <vector>

#include "qgrad/objective.hpp"
#include "qgrad/rational.hpp"

namespace qgrad {

struct GridSpec;

// Central difference scheme of order 2m: exact coefficients a_l for
// l in {-m, ..., m}, with a mirrored double-precision cache for hot paths.
struct CentralDifferenceScheme {
    int m = 0;
    std::vector<Rational> coefficients;  // index l + m
    std::vector<double> float_cache;

    const Rational& coeff(int ell) const { return coefficients[static_cast<size_t>(ell + m)]; }
    double coeff_d(int ell) const { return float_cache[static_cast<size_t>(ell + m)]; }
};

// Closed form: a_0 = 1, a_l = (-1)^{l+1} (m!)^2 / (l (m+l)! (m-l)!) otherwise.
CentralDifferenceScheme make_scheme(int m);

// sum_l a_l l^k, exact (convention 0^0 = 1).
Rational moment_sum(const CentralDifferenceScheme& scheme, int k);

// f_{(2m)}(x) = sum_l a_l f(l x), float coefficients.
double smoothing_eval(const ObjectiveFunction& f, const CentralDifferenceScheme& scheme,
                      std::span<const double> x);

// Mean over the full grid of |f_{(2m)}(x) - f(0) - grad f(0) . x|^2.
// Requires f.reference_gradient_at_origin; compensated summation.
double linearity_defect(const ObjectiveFunction& f, const CentralDifferenceScheme& scheme,
                        const GridSpec& grid);

}  // namespace qgrad

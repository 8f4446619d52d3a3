#include "qgrad/scheme.hpp"

#include <cmath>
#include <stdexcept>

#include "qgrad/grid.hpp"

namespace qgrad {

CentralDifferenceScheme make_scheme(int m) {
    if (m < 1) throw std::invalid_argument("make_scheme: m must be >= 1");
    CentralDifferenceScheme scheme;
    scheme.m = m;
    scheme.coefficients.resize(static_cast<size_t>(2 * m + 1));
    const BigInt mfact_sq = factorial(static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(m));
    for (int ell = -m; ell <= m; ++ell) {
        Rational a;
        if (ell == 0) {
            a = 1;
        } else {
            BigInt denom = BigInt(ell) * factorial(static_cast<unsigned>(m + ell)) *
                           factorial(static_cast<unsigned>(m - ell));
            a = Rational(mfact_sq) / denom;
            if ((ell + 1) % 2 != 0) a = -a;  // sign (-1)^{l+1}
        }
        scheme.coefficients[static_cast<size_t>(ell + m)] = a;
    }
    scheme.float_cache.resize(scheme.coefficients.size());
    for (size_t i = 0; i < scheme.coefficients.size(); ++i)
        scheme.float_cache[i] = to_double(scheme.coefficients[i]);
    return scheme;
}

Rational moment_sum(const CentralDifferenceScheme& scheme, int k) {
    if (k < 0) throw std::invalid_argument("moment_sum: k must be >= 0");
    Rational sum = 0;
    for (int ell = -scheme.m; ell <= scheme.m; ++ell) {
        Rational lk = rational_pow(Rational(ell), static_cast<unsigned>(k));
        if (k == 0) lk = 1;  // 0^0 = 1 convention, pow already yields 1 except l = 0
        if (ell == 0 && k > 0) lk = 0;
        sum += scheme.coeff(ell) * lk;
    }
    return sum;
}

double smoothing_eval(const ObjectiveFunction& f, const CentralDifferenceScheme& scheme,
                      std::span<const double> x) {
    std::vector<double> scaled(x.size());
    double acc = 0.0;
    for (int ell = -scheme.m; ell <= scheme.m; ++ell) {
        for (size_t j = 0; j < x.size(); ++j) scaled[j] = ell * x[j];
        acc += scheme.coeff_d(ell) * f(scaled);
    }
    return acc;
}

double linearity_defect(const ObjectiveFunction& f, const CentralDifferenceScheme& scheme,
                        const GridSpec& grid) {
    if (!f.reference_gradient_at_origin)
        throw std::invalid_argument("linearity_defect: reference gradient required");
    if (grid.d != f.dimension)
        throw std::invalid_argument("linearity_defect: grid/function dimension mismatch");
    check_memory_guard(grid);
    const std::vector<double>& g = *f.reference_gradient_at_origin;
    const std::vector<double> origin(static_cast<size_t>(grid.d), 0.0);
    const double f0 = f(origin);

    // Kahan compensated accumulation: the defect can be tiny relative to the
    // number of grid points.
    double sum = 0.0, comp = 0.0;
    const std::size_t total = grid.total_points();
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<int> k = decode_index(grid, idx);
        std::vector<double> x = grid_point(grid, k);
        double lin = f0;
        for (int j = 0; j < grid.d; ++j) lin += g[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
        const double resid = smoothing_eval(f, scheme, x) - lin;
        const double term = resid * resid;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum / static_cast<double>(total);
}

}  // namespace qgrad

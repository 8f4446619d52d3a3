#include "qgrad/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qgrad {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

double deriv_sin(int a, double t) { return std::sin(t + a * kPi / 2.0); }
double deriv_cos(int a, double t) { return std::cos(t + a * kPi / 2.0); }
}  // namespace

bool DomainBox::contains(std::span<const double> x) const {
    for (size_t j = 0; j < x.size(); ++j)
        if (!(x[j] > lo[j] && x[j] < hi[j])) return false;
    return true;
}

double test_function_eval(const TestFunctionInstance& inst, std::span<const double> x) {
    const double amp = 73.0 * inst.eps / (inst.c * inst.d);
    double sum = 0.0;
    for (int j = 0; j < inst.d; ++j) {
        double term = amp * inst.b[static_cast<size_t>(j)] * std::sin(inst.c * x[static_cast<size_t>(j)]);
        for (int k = 0; k < inst.d; ++k)
            if (k != j) term *= std::cos(inst.c * x[static_cast<size_t>(k)]);
        sum += term;
    }
    return sum;
}

double test_function_partial(const TestFunctionInstance& inst, std::span<const int> alpha,
                             std::span<const double> x) {
    // Multiplicity of each coordinate in the multi-index.
    std::vector<int> mult(static_cast<size_t>(inst.d), 0);
    for (int a : alpha) {
        if (a < 0 || a >= inst.d)
            throw std::out_of_range("test_function_partial: multi-index coordinate out of range");
        ++mult[static_cast<size_t>(a)];
    }
    const double amp = 73.0 * inst.eps / (inst.c * inst.d);
    const double cpow = std::pow(inst.c, static_cast<double>(alpha.size()));
    double sum = 0.0;
    for (int j = 0; j < inst.d; ++j) {
        double term = amp * cpow * inst.b[static_cast<size_t>(j)] *
                      deriv_sin(mult[static_cast<size_t>(j)], inst.c * x[static_cast<size_t>(j)]);
        for (int k = 0; k < inst.d; ++k)
            if (k != j)
                term *= deriv_cos(mult[static_cast<size_t>(k)], inst.c * x[static_cast<size_t>(k)]);
        sum += term;
    }
    return sum;
}

std::vector<double> gradient_at_origin(const TestFunctionInstance& inst) {
    std::vector<double> g(static_cast<size_t>(inst.d));
    for (int j = 0; j < inst.d; ++j)
        g[static_cast<size_t>(j)] = 73.0 * inst.eps / inst.d * inst.b[static_cast<size_t>(j)];
    return g;
}

ObjectiveFunction make_objective(const TestFunctionInstance& inst) {
    if (static_cast<int>(inst.b.size()) != inst.d)
        throw std::invalid_argument("make_objective: sign vector length must equal d");
    for (int s : inst.b)
        if (s != 1 && s != -1) throw std::invalid_argument("make_objective: b entries must be +-1");
    ObjectiveFunction f;
    f.name = "test-function";
    f.dimension = inst.d;
    f.declared_c = inst.c;
    f.declared_sigma = 0.0;
    f.evaluate = [inst](std::span<const double> x) { return test_function_eval(inst, x); };
    f.partial = [inst](std::span<const int> alpha, std::span<const double> x) {
        return test_function_partial(inst, alpha, x);
    };
    f.reference_gradient_at_origin = gradient_at_origin(inst);
    return f;
}

std::vector<ObjectiveFunction> catalog(double c) {
    // The seven 1-D rows, each with the smallest sigma for which membership
    // holds on its widest domain. Asterisked rows carry the numerical-evidence
    // flag and no closed-form partial (finite differences only).
    std::vector<ObjectiveFunction> cat;
    if (!(c > 0.0)) throw std::invalid_argument("catalog: c must be positive");

    {
        ObjectiveFunction f;
        f.name = "half-sine";
        f.dimension = 1;
        f.declared_c = c;
        f.declared_sigma = 0.0;
        f.evaluate = [c](std::span<const double> x) { return 0.5 * std::sin(c * x[0]); };
        f.partial = [c](std::span<const int> alpha, std::span<const double> x) {
            return 0.5 * std::pow(c, static_cast<double>(alpha.size())) *
                   deriv_sin(static_cast<int>(alpha.size()), c * x[0]);
        };
        f.reference_gradient_at_origin = std::vector<double>{0.5 * c};
        cat.push_back(std::move(f));
    }
    {
        ObjectiveFunction f;
        f.name = "half-cosine";
        f.dimension = 1;
        f.declared_c = c;
        f.declared_sigma = 0.0;
        f.evaluate = [c](std::span<const double> x) { return 0.5 * std::cos(c * x[0]); };
        f.partial = [c](std::span<const int> alpha, std::span<const double> x) {
            return 0.5 * std::pow(c, static_cast<double>(alpha.size())) *
                   deriv_cos(static_cast<int>(alpha.size()), c * x[0]);
        };
        f.reference_gradient_at_origin = std::vector<double>{0.0};
        cat.push_back(std::move(f));
    }
    {
        ObjectiveFunction f;
        f.name = "shifted-exponential";
        f.dimension = 1;
        f.declared_c = c;
        f.declared_sigma = 0.0;
        f.domain = DomainBox{{-1.0}, {kInf}};
        f.evaluate = [c](std::span<const double> x) { return 0.5 * std::exp(-c * (x[0] + 1.0)); };
        f.partial = [c](std::span<const int> alpha, std::span<const double> x) {
            const auto k = alpha.size();
            return 0.5 * std::pow(-c, static_cast<double>(k)) * std::exp(-c * (x[0] + 1.0));
        };
        f.reference_gradient_at_origin = std::vector<double>{-0.5 * c * std::exp(-c)};
        cat.push_back(std::move(f));
    }
    {
        ObjectiveFunction f;
        f.name = "gaussian";
        f.dimension = 1;
        f.declared_c = c;
        f.declared_sigma = 0.5;
        f.numerical_evidence = true;
        f.evaluate = [c](std::span<const double> x) {
            return 0.5 * std::exp(-0.5 * (c * x[0]) * (c * x[0]));
        };
        f.reference_gradient_at_origin = std::vector<double>{0.0};
        cat.push_back(std::move(f));
    }
    {
        ObjectiveFunction f;
        f.name = "lorentzian";
        f.dimension = 1;
        f.declared_c = c;
        f.declared_sigma = 1.0;
        f.numerical_evidence = true;
        f.evaluate = [c](std::span<const double> x) {
            return 1.0 / (2.0 * (1.0 + (c * x[0]) * (c * x[0])));
        };
        f.reference_gradient_at_origin = std::vector<double>{0.0};
        cat.push_back(std::move(f));
    }
    {
        ObjectiveFunction f;
        f.name = "arctan";
        f.dimension = 1;
        f.declared_c = c;
        f.declared_sigma = 1.0;
        f.numerical_evidence = true;
        // |(1/2) arctan(cx)| crosses 1/2 at |x| = tan(1)/c, so the order-0
        // bound only holds on a window around the origin; sampling stays there.
        f.domain = DomainBox{{-std::tan(1.0) / c}, {std::tan(1.0) / c}};
        f.evaluate = [c](std::span<const double> x) { return 0.5 * std::atan(c * x[0]); };
        f.reference_gradient_at_origin = std::vector<double>{0.5 * c};
        cat.push_back(std::move(f));
    }
    {
        ObjectiveFunction f;
        f.name = "logistic";
        f.dimension = 1;
        f.declared_c = c;
        f.declared_sigma = 1.0;
        f.numerical_evidence = true;
        f.evaluate = [c](std::span<const double> x) {
            return 1.0 / (2.0 * (1.0 + std::exp(-c * x[0])));
        };
        f.reference_gradient_at_origin = std::vector<double>{c / 8.0};
        cat.push_back(std::move(f));
    }
    return cat;
}

const ObjectiveFunction& catalog_lookup(const std::vector<ObjectiveFunction>& cat,
                                        const std::string& name) {
    for (const auto& f : cat)
        if (f.name == name) return f;
    throw std::out_of_range("catalog_lookup: no entry named " + name);
}

namespace {

// Central finite-difference stencils, offsets scaled by h, for orders 1..4.
struct Stencil {
    std::vector<int> offsets;
    std::vector<double> weights;  // divide by h^order
};

const Stencil& stencil_for(int order) {
    static const Stencil s1{{-1, 1}, {-0.5, 0.5}};
    static const Stencil s2{{-1, 0, 1}, {1.0, -2.0, 1.0}};
    static const Stencil s3{{-2, -1, 1, 2}, {-0.5, 1.0, -1.0, 0.5}};
    static const Stencil s4{{-2, -1, 0, 1, 2}, {1.0, -4.0, 6.0, -4.0, 1.0}};
    switch (order) {
        case 1: return s1;
        case 2: return s2;
        case 3: return s3;
        case 4: return s4;
        default: throw std::invalid_argument("finite differences support orders 1..4 only");
    }
}

// Tensor-product finite difference: per-coordinate central stencils applied
// recursively. `mult` holds the derivative order requested per coordinate.
double fd_partial(const ObjectiveFunction& f, const std::vector<int>& mult,
                  std::vector<double>& x, size_t coord, double h) {
    while (coord < mult.size() && mult[coord] == 0) ++coord;
    if (coord == mult.size()) return f(x);
    const Stencil& st = stencil_for(mult[coord]);
    std::vector<int> rest = mult;
    rest[coord] = 0;
    const double x0 = x[coord];
    double acc = 0.0;
    for (size_t i = 0; i < st.offsets.size(); ++i) {
        x[coord] = x0 + st.offsets[i] * h;
        acc += st.weights[i] * fd_partial(f, rest, x, coord + 1, h);
    }
    x[coord] = x0;
    return acc / std::pow(h, mult[coord]);
}

struct PartialResult {
    double value = 0.0;
    double error_estimate = 0.0;  // zero in closed-form mode
};

PartialResult evaluate_partial(const ObjectiveFunction& f, std::span<const int> alpha,
                               std::span<const double> x) {
    if (f.partial) return {f.partial(alpha, x), 0.0};
    const int k = static_cast<int>(alpha.size());
    std::vector<double> xv(x.begin(), x.end());
    if (k == 0) return {f(xv), 0.0};
    std::vector<int> mult(static_cast<size_t>(f.dimension), 0);
    for (int a : alpha) ++mult[static_cast<size_t>(a)];
    const double eps_mach = std::numeric_limits<double>::epsilon();
    const double h = std::pow(eps_mach, 1.0 / (k + 2)) / f.declared_c;
    const double value = fd_partial(f, mult, xv, 0, h);
    // Error model: O(h^2) truncation against the next-order scale of the
    // function, plus rounding amplified by the stencil weights over h^k.
    double weight_mass = 1.0;
    for (int m : mult)
        if (m > 0) {
            const Stencil& st = stencil_for(m);
            double w = 0.0;
            for (double c : st.weights) w += std::abs(c);
            weight_mass *= w;
        }
    const double scale = std::pow(f.declared_c, k + 2);
    const double err = scale * h * h + eps_mach * weight_mass / std::pow(h, k);
    return {value, err};
}

void enumerate_alphas(int d, int order, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == order) {
        out.push_back(cur);
        return;
    }
    // Non-decreasing coordinates: partial derivatives commute.
    const int start = cur.empty() ? 0 : cur.back();
    for (int j = start; j < d; ++j) {
        cur.push_back(j);
        enumerate_alphas(d, order, cur, out);
        cur.pop_back();
    }
}

}  // namespace

GevreyReport gevrey_check(const ObjectiveFunction& f, int max_order,
                          std::span<const std::vector<double>> sample_points,
                          std::uint64_t seed, double tolerance) {
    if (!f.partial && max_order > 4)
        throw std::invalid_argument(
            "gevrey_check: finite-difference mode is limited to max_order <= 4");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(0, f.dimension - 1);

    GevreyReport report;
    const double pass_ceiling = f.numerical_evidence ? 1.05 : 1.0 + tolerance;
    double lgfact = 0.0;  // log(k!)
    for (int k = 0; k <= max_order; ++k) {
        if (k >= 2) lgfact += std::log(static_cast<double>(k));
        const double bound =
            0.5 * std::pow(f.declared_c, k) * std::exp(f.declared_sigma * lgfact);
        std::vector<std::vector<int>> alphas;
        if (k <= 2) {
            std::vector<int> cur;
            enumerate_alphas(f.dimension, k, cur, alphas);
        } else {
            for (int t = 0; t < 50; ++t) {
                std::vector<int> a(static_cast<size_t>(k));
                for (int& v : a) v = coord(rng);
                std::sort(a.begin(), a.end());
                alphas.push_back(std::move(a));
            }
        }
        for (const auto& alpha : alphas) {
            for (const auto& x : sample_points) {
                if (f.domain && !f.domain->contains(x)) continue;
                PartialResult pr = evaluate_partial(f, alpha, x);
                GevreyEntry e;
                e.alpha = alpha;
                e.point = x;
                e.value = pr.value;
                e.bound = bound;
                e.ratio = std::abs(pr.value) / bound;
                e.unreliable = pr.error_estimate > 0.1 * bound;
                report.max_ratio = std::max(report.max_ratio, e.ratio);
                report.any_unreliable = report.any_unreliable || e.unreliable;
                report.entries.push_back(std::move(e));
            }
        }
    }
    report.pass = report.max_ratio <= pass_ceiling;
    return report;
}

}  // namespace qgrad

#include "qgrad/state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgrad {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// In-place radix-2 FFT on a power-of-two-length line; sign is the exponent
// sign in e^{sign * 2 pi i u v / P}. No normalization.
void fft_line(std::vector<Complex>& a, int sign) {
    const size_t P = a.size();
    for (size_t i = 1, j = 0; i < P; ++i) {
        size_t bit = P >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= P; len <<= 1) {
        const double ang = sign * kTwoPi / static_cast<double>(len);
        const Complex wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < P; i += len) {
            Complex w(1.0, 0.0);
            for (size_t t = 0; t < len / 2; ++t) {
                Complex u = a[i + t];
                Complex v = a[i + t + len / 2] * w;
                a[i + t] = u + v;
                a[i + t + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// Signed-index transform of one gathered line. `sign` = -1 for the inverse
// QFT kernel e^{-2 pi i k h / 2^n}, +1 for its adjoint.
void transform_line_fast(std::vector<Complex>& line, int n, int sign) {
    const size_t P = line.size();
    for (size_t u = 0; u < P; u += 2) {
        // (-1)^u pre-twiddle shifts the signed input index to unsigned.
        line[u + 1] = -line[u + 1];
    }
    fft_line(line, sign);
    const double scale = 1.0 / std::sqrt(static_cast<double>(P));
    // Extra global factor e^{-sign * 2 pi i 2^{2n-2} / 2^n}: -1 when n = 1,
    // +1 for every n >= 2.
    const double global = (n == 1) ? -scale : scale;
    for (size_t v = 0; v < P; ++v) {
        double s = (v % 2 == 0) ? global : -global;
        line[v] *= s;
    }
}

void transform_line_dense(std::vector<Complex>& line, int n, int sign) {
    const int P = static_cast<int>(line.size());
    const int H = P / 2;
    const double scale = 1.0 / std::sqrt(static_cast<double>(P));
    std::vector<Complex> out(static_cast<size_t>(P), Complex(0.0, 0.0));
    for (int v = 0; v < P; ++v) {
        const int h = v - H;
        for (int u = 0; u < P; ++u) {
            const int k = u - H;
            const double ang = sign * kTwoPi * static_cast<double>(k) * h / P;
            out[static_cast<size_t>(v)] +=
                Complex(std::cos(ang), std::sin(ang)) * line[static_cast<size_t>(u)];
        }
        out[static_cast<size_t>(v)] *= scale;
    }
    line = std::move(out);
    (void)n;
}

void transform_axis(State& state, int axis, int sign, bool dense) {
    const GridSpec& spec = state.spec;
    if (axis < 0 || axis >= spec.d) throw std::out_of_range("transform_axis: bad axis");
    const size_t P = static_cast<size_t>(spec.points_per_axis());
    // Row-major with axis 0 slowest: elements along `axis` are spaced by the
    // product of the faster axes' extents.
    size_t stride = 1;
    for (int j = spec.d - 1; j > axis; --j) stride *= P;
    const size_t block = stride * P;
    const size_t total = state.amplitudes.size();
    std::vector<Complex> line(P);
    for (size_t base = 0; base < total; base += block) {
        for (size_t off = 0; off < stride; ++off) {
            for (size_t t = 0; t < P; ++t) line[t] = state.amplitudes[base + off + t * stride];
            if (dense)
                transform_line_dense(line, spec.n, sign);
            else
                transform_line_fast(line, spec.n, sign);
            for (size_t t = 0; t < P; ++t) state.amplitudes[base + off + t * stride] = line[t];
        }
    }
}

}  // namespace

double State::norm() const {
    double s = 0.0;
    for (const Complex& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

State uniform_superposition(const GridSpec& spec) {
    check_memory_guard(spec);
    State state;
    state.spec = spec;
    const std::size_t total = spec.total_points();
    state.amplitudes.assign(total, Complex(1.0 / std::sqrt(static_cast<double>(total)), 0.0));
    return state;
}

void inverse_qft_all_axes(State& state) {
    for (int j = 0; j < state.spec.d; ++j) transform_axis(state, j, -1, false);
}

void inverse_qft_all_axes_dense(State& state) {
    for (int j = 0; j < state.spec.d; ++j) transform_axis(state, j, -1, true);
}

void forward_qft_all_axes(State& state) {
    for (int j = 0; j < state.spec.d; ++j) transform_axis(state, j, +1, false);
}

void inverse_qft_axis(State& state, int axis, bool dense) {
    transform_axis(state, axis, -1, dense);
}

std::vector<double> outcome_distribution(const State& state) {
    std::vector<double> p(state.amplitudes.size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = std::norm(state.amplitudes[i]);
    return p;
}

std::vector<int> sample_outcome(const State& state, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double u = unif(rng);
    double acc = 0.0;
    size_t chosen = state.amplitudes.size() - 1;
    for (size_t i = 0; i < state.amplitudes.size(); ++i) {
        acc += std::norm(state.amplitudes[i]);
        if (u < acc) {
            chosen = i;
            break;
        }
    }
    return decode_index(state.spec, chosen);
}

double qft_peak_probability(int n, double a) {
    if (n < 4) throw std::invalid_argument("qft_peak_probability: requires n >= 4");
    if (std::abs(a) > kTwoPi / 3.0 + 1e-15)
        throw std::invalid_argument("qft_peak_probability: requires |a| <= 2 pi / 3");
    GridSpec spec{1, n, 1.0};
    State state;
    state.spec = spec;
    const int P = spec.points_per_axis();
    const int H = P / 2;
    const double amp = 1.0 / std::sqrt(static_cast<double>(P));
    state.amplitudes.resize(static_cast<size_t>(P));
    for (int k = -H; k < H; ++k)
        state.amplitudes[static_cast<size_t>(k + H)] =
            amp * Complex(std::cos(a * k), std::sin(a * k));
    inverse_qft_all_axes(state);
    const double target = P * a / kTwoPi;
    double prob = 0.0;
    for (int b = -H; b < H; ++b)
        if (std::abs(b - target) <= 4.0) prob += std::norm(state.amplitudes[static_cast<size_t>(b + H)]);
    return prob;
}

}  // namespace qgrad

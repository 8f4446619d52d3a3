#pragma once

#include <complex>
#include <random>
#include <vector>

#include "qgrad/grid.hpp"

namespace qgrad {

using Complex = std::complex<double>;

// Dense statevector over the grid, indexed row-major by the tuple of signed
// per-axis indices (axis 0 slowest).
struct State {
    GridSpec spec;
    std::vector<Complex> amplitudes;

    double norm() const;
};

State uniform_superposition(const GridSpec& spec);

// Per-axis inverse QFT with signed indices: kernel 2^{-n/2} e^{-2 pi i k h / 2^n}.
// Fast path (FFT with index-shift twiddles) for larger axes, dense otherwise.
void inverse_qft_all_axes(State& state);
// Dense reference implementation (per-axis matrix application).
void inverse_qft_all_axes_dense(State& state);
// Adjoint of the inverse transform (forward QFT); used to verify unitarity.
void forward_qft_all_axes(State& state);
// Transform a single axis only.
void inverse_qft_axis(State& state, int axis, bool dense);

// Squared magnitudes, indexed like the amplitudes.
std::vector<double> outcome_distribution(const State& state);

// Draws a signed index tuple from the outcome distribution; deterministic
// given the generator state.
std::vector<int> sample_outcome(const State& state, std::mt19937_64& rng);

// Exact probability that a single-axis phase state e^{i a k} measures an
// outcome b with |b - 2^n a / (2 pi)| <= 4 after the inverse QFT.
// Requires n >= 4 and |a| <= 2 pi / 3.
double qft_peak_probability(int n, double a);

}  // namespace qgrad

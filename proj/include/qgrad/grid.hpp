#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace qgrad {

// Thrown when a requested statevector exceeds the qubit cap.
struct MemoryGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Total-qubit cap n*d; default 24, overridable via QGRAD_MEMORY_GUARD.
int memory_guard();

// Symmetric evaluation grid: 2^n points per axis, side length r.
// x_k = (r/2^n) (k + 1/2) for k in {-2^{n-1}, ..., 2^{n-1}-1}^d.
struct GridSpec {
    int d = 1;
    int n = 1;
    double r = 1.0;

    int points_per_axis() const { return 1 << n; }
    std::size_t total_points() const { return std::size_t{1} << (static_cast<std::size_t>(n) * d); }
    int half() const { return 1 << (n - 1); }
};

void check_memory_guard(const GridSpec& spec);

std::vector<double> grid_point(const GridSpec& spec, std::span<const int> k);

// Row-major flat index; axis 0 is the slowest. Unsigned per-axis index
// u = k + 2^{n-1}.
std::size_t flat_index(const GridSpec& spec, std::span<const int> k);
std::vector<int> decode_index(const GridSpec& spec, std::size_t flat);

}  // namespace qgrad

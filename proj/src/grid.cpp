#include "qgrad/grid.hpp"

#include <cstdlib>
#include <string>

namespace qgrad {

int memory_guard() {
    if (const char* env = std::getenv("QGRAD_MEMORY_GUARD")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 24;
}

void check_memory_guard(const GridSpec& spec) {
    const long long nd = static_cast<long long>(spec.n) * spec.d;
    const int guard = memory_guard();
    if (spec.n < 1 || spec.d < 1)
        throw std::invalid_argument("grid requires n >= 1 and d >= 1");
    if (nd > guard)
        throw MemoryGuardError("statevector needs n*d = " + std::to_string(nd) +
                               " qubits, exceeding the memory guard of " +
                               std::to_string(guard));
}

std::vector<double> grid_point(const GridSpec& spec, std::span<const int> k) {
    if (static_cast<int>(k.size()) != spec.d)
        throw std::invalid_argument("grid_point: index dimension mismatch");
    const int half = spec.half();
    std::vector<double> x(spec.d);
    const double scale = spec.r / spec.points_per_axis();
    for (int j = 0; j < spec.d; ++j) {
        if (k[j] < -half || k[j] > half - 1)
            throw std::out_of_range("grid_point: axis index out of range");
        x[j] = scale * (k[j] + 0.5);
    }
    return x;
}

std::size_t flat_index(const GridSpec& spec, std::span<const int> k) {
    const int half = spec.half();
    std::size_t idx = 0;
    for (int j = 0; j < spec.d; ++j)
        idx = (idx << spec.n) | static_cast<std::size_t>(k[j] + half);
    return idx;
}

std::vector<int> decode_index(const GridSpec& spec, std::size_t flat) {
    const int half = spec.half();
    const std::size_t mask = (std::size_t{1} << spec.n) - 1;
    std::vector<int> k(spec.d);
    for (int j = spec.d - 1; j >= 0; --j) {
        k[j] = static_cast<int>(flat & mask) - half;
        flat >>= spec.n;
    }
    return k;
}

}  // namespace qgrad

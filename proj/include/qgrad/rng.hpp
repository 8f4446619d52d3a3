#pragma once

#include <cstdint>

namespace qgrad {

// splitmix64-style mixing; derives stream i from a master seed.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t i) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace qgrad

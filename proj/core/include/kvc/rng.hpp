#pragma once

#include <cstdint>
#include <random>

namespace kvc {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1). Hand-rolled so streams are identical across
/// standard library implementations.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [lo, hi], inclusive.
inline int uniform_int(Rng& rng, int lo, int hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng() % span);
}

}  // namespace kvc

#pragma once

#include <cstdint>

namespace heatlab {

// splitmix64: all randomness in the project flows from one 64-bit seed
// through counter-based substreams, so partitioned and serial runs of the
// same experiment draw identical variates.
inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t split_seed(uint64_t seed, uint64_t index) {
    return mix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
}

struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        return mix64(state);
    }

    // uniform in [0, n), multiply-shift reduction
    uint32_t next_below(uint32_t n) {
        return static_cast<uint32_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // uniform in [0, 1)
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [-1, 1]
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }
};

} // namespace heatlab

#pragma once

#include <cstdint>

namespace pubgood::detail {

// SplitMix64 finalizer. Good enough avalanche for Monte Carlo streams.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Counter-based stream: the draw for (seed, trial, agent) is a pure function
// of its key, so any partition of trials across workers sees the same values.
inline std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t trial, std::uint64_t agent) {
    return splitmix64(splitmix64(splitmix64(seed) ^ trial) ^ (agent * 0xD1B54A32D192ED03ULL));
}

// Uniform in [0,1) with 53 random bits.
inline double to_unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double unit_draw(std::uint64_t seed, std::uint64_t trial, std::uint64_t agent) {
    return to_unit(counter_draw(seed, trial, agent));
}

}  // namespace pubgood::detail

// rng.hpp — Pinned random-number generation.
//
// Reproducibility contract: all sampling uses std::mt19937_64 (bit-stable
// across platforms by the C++ standard), never std::*_distribution (whose
// streams are implementation-defined). Uniform doubles come from the top 53
// bits of the raw output. Substreams are seeded from successive outputs of a
// SplitMix64 sequence over the master seed, so stream k is independent of how
// many draws earlier streams consumed.

#pragma once

#include <cstdint>
#include <random>

namespace spinbath {

// One SplitMix64 step: advances state and returns the next output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Seed for substream `index` of a master seed: the (index+1)-th SplitMix64
// output.
inline std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t state = master_seed;
    std::uint64_t out = 0;
    for (std::uint64_t i = 0; i <= index; ++i) out = splitmix64(state);
    return out;
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, lo + width).
inline double uniform_in(std::mt19937_64& engine, double lo, double width) {
    return lo + uniform01(engine) * width;
}

// Uniform integer in [1, hi] by rejection-free scaling of the 53-bit draw.
// hi must be far below 2^53 for the bias to be negligible; callers here use
// hi <= 2^32.
inline std::uint64_t uniform_index1(std::mt19937_64& engine, std::uint64_t hi) {
    return 1 + static_cast<std::uint64_t>(uniform01(engine) * static_cast<double>(hi));
}

}  // namespace spinbath

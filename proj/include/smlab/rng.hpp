#pragma once

#include <cstdint>

namespace smlab {

// SplitMix64 (Steele, Lea & Flood 2014). Chosen as the project-wide
// generator because the state is a single u64, streams are cheap to
// split, and the sequence is identical on every platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53 random bits
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Independent stream k of a base seed. Work items (Monte Carlo samples,
// starting points) index their own stream, so results do not depend on
// scheduling or worker count.
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t k) {
    return SplitMix64(mix64(seed ^ (0x9E3779B97F4A7C15ULL * (k + 1))));
}

}  // namespace smlab

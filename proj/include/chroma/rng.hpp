#pragma once

#include <cstdint>

namespace chroma {

// SplitMix64 (Steele/Lea/Flood). Fixed here as the project-wide PRNG so
// random graphs and derived seeds reproduce bit-exactly on every platform.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit mantissa.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound). bound = 0 returns 0.
    std::uint64_t next_below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

inline std::uint64_t mix64(std::uint64_t x) {
    SplitMix64 s(x);
    return s.next();
}

// Documented derivation for per-instance seeds: fold words into the master
// seed one SplitMix64 scramble at a time. Stable across runs and shards.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                                 std::uint64_t c) {
    return mix64(mix64(mix64(mix64(master) ^ a) ^ b) ^ c);
}

}  // namespace chroma

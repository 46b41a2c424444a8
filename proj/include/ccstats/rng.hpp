#pragma once

#include "ccstats/bigint.hpp"

#include <cstdint>

namespace ccstats {

/// SplitMix64. Counter-based streams: every (seed, stream index) pair yields an
/// independent deterministic sequence, identical on every platform, so sampled
/// output never depends on thread scheduling.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound >= 1. Rejection sampling, no modulo bias.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform BigInt in [0, bound), bound >= 1. Draws fixed-width bit blocks
    /// one past the bit length of bound-1 and rejects out-of-range values.
    BigInt uniform_bigint_below(const BigInt& bound) {
        if (bound <= 1) return 0;
        const unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
        const unsigned words = (bits + 63) / 64;
        while (true) {
            BigInt v = 0;
            for (unsigned i = 0; i < words; ++i) v = (v << 64) | BigInt(next());
            v &= (BigInt(1) << bits) - 1;
            if (v < bound) return v;
        }
    }

private:
    std::uint64_t state_;
};

/// Derives the stream for (seed, index); a scrambled mix so that nearby
/// indices do not share low-entropy states.
inline SplitMix64 rng_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    mixer.next();
    return SplitMix64(mixer.next());
}

}  // namespace ccstats

// Deterministic random number generation for sampling-based checks.
//
// std::mt19937 is portable but the standard distributions are not, so we
// use a SplitMix64 stream and derive bounded integers by rejection. Every
// sampled check derives its stream from (master seed, case parameters), so
// results are independent of iteration order.

#pragma once

#include <cstdint>

namespace lstc {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound) via rejection; bound must be positive.
    std::uint64_t next_below(std::uint64_t bound)
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold)
                return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// Mixes extra words into a seed so per-case streams are decorrelated.
inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value)
{
    SplitMix64 mix(seed ^ (value + 0x9e3779b97f4a7c15ULL));
    return mix.next();
}

}  // namespace lstc

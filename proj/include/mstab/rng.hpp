#pragma once

#include <cstdint>

namespace mstab {

// SplitMix64. Fully specified sequence, so seeded results are identical
// across compilers and platforms (std::uniform_int_distribution is not).
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }
};

// Derives an independent stream for sub-task `index` of a master seed.
inline SplitMix64 split_stream(std::uint64_t master, std::uint64_t index) {
    SplitMix64 mixer(master ^ (0xA0761D6478BD642FULL * (index + 1)));
    return SplitMix64(mixer.next());
}

} // namespace mstab

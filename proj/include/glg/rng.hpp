#pragma once

#include <cstdint>

namespace glg {

/// SplitMix64 generator. Fully specified here so that seeded runs are
/// bit-identical across platforms and standard-library versions (the
/// distributions in <random> are not portable).
///
/// Constants are the standard SplitMix64 ones (Steele, Lea, Flood 2014):
/// increment 0x9E3779B97F4A7C15, multipliers 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// The SplitMix64 finalizer as a standalone mixing function.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from a base seed and two indices.
/// Used by the experiment sweeps so that sample i at parameter m gets the
/// same graph no matter how work is split across threads.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = mix64(base ^ (a * 0xC2B2AE3D27D4EB4FULL));
    return mix64(h ^ (b * 0x165667B19E3779F9ULL));
}

/// Uniform draw from [0, bound) by rejection; avoids the modulo bias of
/// `next() % bound`. bound must be nonzero.
inline std::uint64_t bounded(SplitMix64& rng, std::uint64_t bound) {
    // Largest multiple of bound that fits in 64 bits.
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng.next();
    } while (x >= limit);
    return x % bound;
}

} // namespace glg

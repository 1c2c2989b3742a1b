#ifndef WARING_RNG_HPP
#define WARING_RNG_HPP

#include <cstdint>

#include "waring/rational.hpp"

namespace waring {

/// SplitMix64 finalizer. Bytes in: one little-endian u64; bytes out: one u64.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Stream seed for item `index` under `master`:
///   H(master, index) = mix64(master ^ mix64(index)).
/// Depends only on the two integers, so per-sample streams do not depend
/// on evaluation order or worker count.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ mix64(index));
}

/// xoshiro256** seeded through SplitMix64. Fully specified, so the stream
/// is identical on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform integer in [lo, hi] by rejection; exact and portable.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// k / 2^bits with k uniform in [-2^bits, 2^bits].
    Rational uniform_dyadic(unsigned bits = 20);

    /// Same as uniform_dyadic but never zero.
    Rational nonzero_dyadic(unsigned bits = 20);

private:
    std::uint64_t s_[4];
};

}  // namespace waring

#endif  // WARING_RNG_HPP

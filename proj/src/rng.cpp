#include "waring/rng.hpp"

#include <stdexcept>

namespace waring {

namespace {
constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t z = seed;
    for (auto& word : s_) {
        word = mix64(z);
        z += 0x9E3779B97F4A7C15ULL;
    }
}

std::uint64_t Rng::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
}

Rational Rng::uniform_dyadic(unsigned bits) {
    const std::int64_t scale = std::int64_t{1} << bits;
    Rational q(Integer(static_cast<long>(uniform_int(-scale, scale))), Integer(static_cast<long>(scale)));
    q.canonicalize();
    return q;
}

Rational Rng::nonzero_dyadic(unsigned bits) {
    for (;;) {
        Rational q = uniform_dyadic(bits);
        if (q != 0) return q;
    }
}

}  // namespace waring

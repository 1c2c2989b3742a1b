#ifndef WARING_RATIONAL_HPP
#define WARING_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace waring {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q"; the result is canonicalized. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: lowest terms, sign on the numerator, "p" for integers.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline Rational abs_value(const Rational& q) { return abs(q); }

/// Least common multiple of all denominators (1 for an empty range).
Integer common_denominator(const std::vector<Rational>& values);

/// Scales the vector to integers with content 1. The sign of the first
/// nonzero entry is preserved. All-zero input gives all zeros.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& values);

Rational binomial(unsigned n, unsigned k);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace waring

#endif  // WARING_RATIONAL_HPP

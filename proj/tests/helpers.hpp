// Small constructors shared by the unit tests.
#pragma once

#include <initializer_list>
#include <vector>

#include "waring/forms.hpp"

namespace th {

using waring::BinaryForm;
using waring::Rational;

inline Rational q(const char* text) { return waring::parse_rational(text); }

inline BinaryForm mono(std::initializer_list<long> p) {
    std::vector<Rational> v;
    for (long c : p) v.emplace_back(c);
    return BinaryForm::from_monomial(std::move(v));
}

// prod (x - r y)
inline BinaryForm from_roots(const std::vector<Rational>& roots) {
    BinaryForm f = BinaryForm::from_monomial({Rational(1)});
    for (const auto& r : roots) f = f * BinaryForm::linear(1, -r);
    return f;
}

inline BinaryForm from_roots(std::initializer_list<long> roots) {
    std::vector<Rational> v;
    for (long r : roots) v.emplace_back(r);
    return from_roots(v);
}

// x^2 + y^2
inline BinaryForm circle() { return mono({1, 0, 1}); }

}  // namespace th

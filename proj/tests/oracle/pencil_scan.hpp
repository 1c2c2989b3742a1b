// Brute-force scan of a pencil {cos(a) g1 + sin(a) g2} for hyperbolic members.
//
// Each sample is screened with a long double Sturm count; a screen hit is
// rechecked exactly on the rational image of the sample, so only exact
// hyperbolic members are ever reported.
#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "waring/forms.hpp"

namespace oracle {

namespace detail {

using LD = long double;

inline void trim(std::vector<LD>& p, LD scale) {
    while (!p.empty() && std::fabs(p.back()) <= 1e-13L * scale) p.pop_back();
}

inline std::vector<LD> remainder(std::vector<LD> a, const std::vector<LD>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        LD q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= q * b[j];
        a.pop_back();
    }
    return a;
}

inline int sign_changes(const std::vector<int>& s) {
    int n = 0, last = 0;
    for (int v : s) {
        if (v == 0) continue;
        if (last != 0 && v != last) ++n;
        last = v;
    }
    return n;
}

// Floating Sturm count of the real roots of p (ascending coefficients).
inline int float_real_roots(std::vector<LD> p) {
    LD scale = 0;
    for (LD c : p) scale = std::max(scale, std::fabs(c));
    if (scale == 0) return -1;
    for (LD& c : p) c /= scale;
    trim(p, 1);
    if (p.size() < 2) return 0;
    std::vector<std::vector<LD>> chain{p};
    std::vector<LD> d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<LD>(i));
    chain.push_back(d);
    while (chain.back().size() > 1) {
        std::vector<LD> r = remainder(chain[chain.size() - 2], chain.back());
        LD m = 0;
        for (LD c : chain.back()) m = std::max(m, std::fabs(c));
        trim(r, m);
        if (r.empty()) break;
        for (LD& c : r) c = -c;
        chain.push_back(r);
    }
    std::vector<int> neg, pos;
    for (const auto& q : chain) {
        int s = q.back() > 0 ? 1 : -1;
        pos.push_back(s);
        neg.push_back((q.size() - 1) % 2 ? -s : s);
    }
    return sign_changes(neg) - sign_changes(pos);
}

}  // namespace detail

struct ScanResult {
    int screened_hits = 0;                  // float screen said hyperbolic
    std::optional<waring::BinaryForm> hit;  // first exactly confirmed member
};

/// Scans `samples` angles over [0, pi). Stops at the first exact hit.
inline ScanResult scan_pencil(const waring::BinaryForm& g1, const waring::BinaryForm& g2, int samples) {
    const int r = g1.degree();
    std::vector<detail::LD> a, b;
    for (const auto& q : g1.monomial()) a.push_back(q.get_d());
    for (const auto& q : g2.monomial()) b.push_back(q.get_d());
    ScanResult out;
    for (int k = 0; k < samples; ++k) {
        const double angle = M_PI * (k + 0.5) / samples;
        const double c = std::cos(angle), s = std::sin(angle);
        std::vector<detail::LD> p(a.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = c * a[i] + s * b[i];
        // Degree drop means a root at infinity; the count then needs r - 1
        // affine real roots.
        const int need = std::fabs(p.back()) < 1e-13L ? r - 1 : r;
        if (detail::float_real_roots(p) < need) continue;
        ++out.screened_hits;
        waring::BinaryForm exact = waring::Rational(c) * g1 + waring::Rational(s) * g2;
        if (!exact.is_zero() && waring::is_hyperbolic(exact)) {
            out.hit = exact;
            return out;
        }
    }
    return out;
}

}  // namespace oracle

#include "waring/upoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace waring {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int power) {
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int Poly::sign_at(const Rational& x) const { return sgn(eval(x)); }

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    Poly out = *this;
    const Rational lc = leading();
    for (auto& c : out.coeffs_) c /= lc;
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
}

Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> v = p.coeffs_;
    for (auto& c : v) c *= s;
    return Poly(std::move(v));
}

void Poly::divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = num.coeffs_;
    const int dd = den.degree();
    std::vector<Rational> q(std::max(0, num.degree() - dd + 1));
    const Rational& lc = den.leading();
    for (int k = num.degree(); k >= dd; --k) {
        const Rational c = r[static_cast<std::size_t>(k)] / lc;
        if (c == 0) continue;
        q[static_cast<std::size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(k - dd + j)] -= c * den.coeffs_[static_cast<std::size_t>(j)];
    }
    quot = Poly(std::move(q));
    rem = Poly(std::move(r));
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a.monic(), y = b.monic();
    while (!y.is_zero()) {
        Poly q, r;
        Poly::divmod(x, y, q, r);
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.monic();
    Poly g = gcd(p, p.derivative());
    if (g.degree() == 0) return p.monic();
    Poly q, r;
    Poly::divmod(p, g, q, r);
    return q.monic();
}

// ---------------------------------------------------------------- integer helpers

namespace {

using IPoly = std::vector<Integer>;  // ascending, trimmed

void trim(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IPoly to_primitive(const Poly& p) { return primitive_integer_vector(p.coeffs()); }

Poly to_poly(const IPoly& p) {
    std::vector<Rational> v(p.begin(), p.end());
    return Poly(std::move(v));
}

void make_primitive_positive_scale(IPoly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IPoly derivative(const IPoly& p) {
    IPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

// Remainder of |lc(b)|^k * a modulo b for some k >= 0; the multiplier is
// positive so the sign structure needed by Sturm's theorem is preserved.
IPoly positive_pseudo_remainder(IPoly a, const IPoly& b) {
    const std::size_t db = b.size() - 1;
    Integer lc = abs(b.back());
    const bool negative_lc = b.back() < 0;
    while (a.size() >= b.size()) {
        // a <- |lc| * a - sign(lc) * a_top * x^(deg a - deg b) * b
        const Integer top = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lc;
        for (std::size_t j = 0; j <= db; ++j) {
            Integer t = top * b[j];
            if (negative_lc) a[shift + j] += t;
            else a[shift + j] -= t;
        }
        trim(a);
    }
    make_primitive_positive_scale(a);
    return a;
}

int sign_of_ipoly_at(const IPoly& p, const Rational& x) {
    if (p.empty()) return 0;
    const Integer& a = x.get_num();
    const Integer& b = x.get_den();
    Integer v = p.back();
    Integer bp = 1;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        bp *= b;
        v = v * a + p[i] * bp;
    }
    return sgn(v);
}

std::vector<IPoly> build_chain(const IPoly& p) {
    std::vector<IPoly> chain;
    chain.push_back(p);
    IPoly d = derivative(p);
    if (d.empty()) return chain;
    make_primitive_positive_scale(d);
    chain.push_back(d);
    for (;;) {
        const IPoly& prev = chain[chain.size() - 2];
        const IPoly& cur = chain.back();
        if (cur.size() <= 1) break;
        IPoly r = positive_pseudo_remainder(prev, cur);
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

// ---------------------------------------------------------------- SturmChain

SturmChain::SturmChain(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm: zero polynomial");
    IPoly ip = to_primitive(p);
    chain_ = build_chain(ip);
    if (chain_.back().size() > 1) {
        // Nonconstant last element is gcd(p, p'); rebuild on the squarefree part.
        Poly q, r;
        Poly::divmod(to_poly(ip), to_poly(chain_.back()), q, r);
        ip = to_primitive(q);
        chain_ = build_chain(ip);
    }
    base_ = to_poly(ip);
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& q : chain_) s.push_back(sign_of_ipoly_at(q, x));
    return count_variations(s);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> s;
    for (const auto& q : chain_) s.push_back(q.empty() ? 0 : sgn(q.back()));
    return count_variations(s);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> s;
    for (const auto& q : chain_) {
        if (q.empty()) {
            s.push_back(0);
            continue;
        }
        int sg = sgn(q.back());
        if ((q.size() - 1) % 2 == 1) sg = -sg;
        s.push_back(sg);
    }
    return count_variations(s);
}

int SturmChain::count_half_open(const Rational& a, const Rational& b) const {
    if (b <= a) return 0;
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_closed(const Rational& a, const Rational& b) const {
    if (b < a) return 0;
    int n = count_half_open(a, b);
    if (base_.sign_at(a) == 0) ++n;
    return n;
}

int SturmChain::count_open(const Rational& a, const Rational& b) const {
    if (b <= a) return 0;
    int n = count_half_open(a, b);
    if (base_.sign_at(b) == 0) --n;
    return n;
}

int sturm_count(const Poly& p) { return SturmChain(p).count_all(); }

int sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
    return SturmChain(p).count_closed(lo, hi);
}

// ---------------------------------------------------------------- isolation

Rational cauchy_bound(const Poly& p) {
    if (p.degree() < 1) return 1;
    Rational m = 0;
    const Rational lc = abs(p.leading());
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeffs()[static_cast<std::size_t>(i)]) / lc));
    return m + 1;
}

namespace {

// Expand an exactly known root into an isolating interval whose
// endpoints are not roots.
RootInterval around_exact(const SturmChain& sc, const Rational& root, Rational delta) {
    const Poly& p = sc.base();
    for (;;) {
        Rational lo = root - delta, hi = root + delta;
        if (p.sign_at(lo) != 0 && p.sign_at(hi) != 0 && sc.count_open(lo, hi) == 1)
            return RootInterval{lo, hi, root};
        delta /= 2;
    }
}

// (a, b] holds exactly one root; produce a proper isolating interval.
RootInterval finish_interval(const SturmChain& sc, Rational a, Rational b) {
    const Poly& p = sc.base();
    if (p.sign_at(b) == 0) return around_exact(sc, b, (b - a) / 2);
    while (p.sign_at(a) == 0) {
        Rational m = (a + b) / 2;
        if (p.sign_at(m) == 0) return around_exact(sc, m, std::min(Rational(m - a), Rational(b - m)) / 2);
        if (sc.count_open(a, m) == 1) b = m;
        else a = m;
    }
    return RootInterval{a, b, std::nullopt};
}

void bisect(const SturmChain& sc, const Rational& a, const Rational& b, int count, std::vector<RootInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back(finish_interval(sc, a, b));
        return;
    }
    Rational m = (a + b) / 2;
    int left = sc.count_half_open(a, m);
    bisect(sc, a, m, left, out);
    bisect(sc, m, b, count - left, out);
}

void shrink(const Poly& sqf, RootInterval& iv) {
    if (iv.exact) {
        Rational delta = (iv.hi - iv.lo) / 4;
        iv.lo = *iv.exact - delta;
        iv.hi = *iv.exact + delta;
        return;
    }
    Rational m = iv.midpoint();
    int sm = sqf.sign_at(m);
    if (sm == 0) {
        Rational delta = (iv.hi - iv.lo) / 4;
        iv.exact = m;
        iv.lo = m - delta;
        iv.hi = m + delta;
        return;
    }
    if (sqf.sign_at(iv.lo) != sm) iv.hi = m;
    else iv.lo = m;
}

}  // namespace

void refine_root(const Poly& sqf, RootInterval& iv, const Rational& width) {
    while (iv.width() > width) shrink(sqf, iv);
}

std::vector<RootInterval> isolate_real_roots(const Poly& p, Poly* squarefree_base) {
    SturmChain sc(p);
    if (squarefree_base) *squarefree_base = sc.base();
    std::vector<RootInterval> out;
    if (sc.base().degree() < 1) return out;
    Rational bound = 1;
    const Rational cb = cauchy_bound(sc.base());
    while (bound < cb) bound *= 2;
    bisect(sc, -bound, bound, sc.count_half_open(-bound, bound), out);
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    // Exact-root expansion can overlap a neighbour; shrink both until apart.
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
        while (out[i].hi > out[i + 1].lo) {
            shrink(sc.base(), out[i]);
            shrink(sc.base(), out[i + 1]);
        }
    }
    return out;
}

}  // namespace waring

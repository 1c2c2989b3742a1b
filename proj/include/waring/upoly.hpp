#ifndef WARING_UPOLY_HPP
#define WARING_UPOLY_HPP

#include <optional>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

/// Dense univariate polynomial over Q, coefficients in ascending order and
/// trimmed (the zero polynomial has no coefficients).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> ascending);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, int power);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const;
    const Rational& leading() const { return coeffs_.back(); }

    Rational eval(const Rational& x) const;
    /// Sign of p(x); -1, 0 or 1.
    int sign_at(const Rational& x) const;

    Poly derivative() const;
    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division; throws on a zero divisor.
    static void divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// p / gcd(p, p'), made monic.
Poly squarefree_part(const Poly& p);

/// Integer-coefficient polynomial used by the Sturm machinery. Signed
/// remainders are kept primitive; positive rescaling never changes a sign
/// variation count.
class SturmChain {
public:
    /// Builds the chain of the squarefree part of p. Throws on p = 0.
    explicit SturmChain(const Poly& p);

    /// Number of sign variations at x (zeros skipped).
    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    /// Distinct real roots on the whole line.
    int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }
    /// Distinct real roots in the half-open interval (a, b].
    int count_half_open(const Rational& a, const Rational& b) const;
    /// Distinct real roots in the closed interval [a, b].
    int count_closed(const Rational& a, const Rational& b) const;
    /// Distinct real roots in the open interval (a, b).
    int count_open(const Rational& a, const Rational& b) const;

    /// The squarefree polynomial the chain was built from (primitive, integer).
    const Poly& base() const { return base_; }

private:
    std::vector<std::vector<Integer>> chain_;
    Poly base_;
};

/// Distinct real roots of p (nonzero), optionally restricted to [lo, hi].
int sturm_count(const Poly& p);
int sturm_count(const Poly& p, const Rational& lo, const Rational& hi);

/// Isolating interval: an open interval (lo, hi) with lo < hi whose
/// endpoints are not roots and which contains exactly one root. When the
/// root was hit exactly during bisection it is recorded in `exact`.
struct RootInterval {
    Rational lo;
    Rational hi;
    std::optional<Rational> exact;

    Rational midpoint() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }
};

/// Cauchy bound 1 + max |c_i / c_n|; all complex roots lie strictly inside.
Rational cauchy_bound(const Poly& p);

/// Disjoint isolating intervals for all distinct real roots, sorted
/// ascending. Throws on p = 0.
/// When `squarefree_base` is given it receives the squarefree polynomial the
/// intervals isolate (usable with refine_root).
std::vector<RootInterval> isolate_real_roots(const Poly& p, Poly* squarefree_base = nullptr);

/// Shrinks an isolating interval of the squarefree polynomial `sqf` by
/// bisection until its width is at most `width`.
void refine_root(const Poly& sqf, RootInterval& iv, const Rational& width);

}  // namespace waring

#endif  // WARING_UPOLY_HPP

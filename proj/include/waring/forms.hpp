#ifndef WARING_FORMS_HPP
#define WARING_FORMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waring/rational.hpp"
#include "waring/upoly.hpp"

namespace waring {

enum class Basis { monomial, normalized };

/// Homogeneous polynomial f(x, y) of degree d over Q.
///
/// Two coefficient views are kept in sync:
///   monomial    p_i : f = sum_i p_i x^i y^(d-i)
///   normalized  a_i : f = sum_i C(d,i) a_i x^i y^(d-i),   p_i = C(d,i) a_i
/// The normalized view is canonical; catalecticant rows read off it
/// directly. For a pure power (alpha x + beta y)^d, a_i = alpha^i beta^(d-i).
class BinaryForm {
public:
    /// The zero form of degree 0.
    BinaryForm() : normalized_{Rational(0)}, monomial_{Rational(0)} {}

    /// Throws std::invalid_argument when coeffs.size() != degree + 1 or
    /// degree < 0. All-zero input is accepted and flagged by is_zero().
    static BinaryForm make(int degree, std::vector<Rational> coeffs, Basis basis);
    static BinaryForm from_normalized(std::vector<Rational> a);
    static BinaryForm from_monomial(std::vector<Rational> p);

    /// (alpha x + beta y)^d.
    static BinaryForm pure_power(const Rational& alpha, const Rational& beta, int d);
    /// x_coeff * x + y_coeff * y.
    static BinaryForm linear(const Rational& x_coeff, const Rational& y_coeff);
    /// y^(degree - deg u) * u(x/y) * y^(deg u); requires deg u <= degree.
    static BinaryForm homogenize(const Poly& u, int degree);

    int degree() const { return static_cast<int>(normalized_.size()) - 1; }
    bool is_zero() const;

    const std::vector<Rational>& normalized() const { return normalized_; }
    const std::vector<Rational>& monomial() const { return monomial_; }
    const Rational& normalized_coeff(int i) const { return normalized_[static_cast<std::size_t>(i)]; }
    const Rational& monomial_coeff(int i) const { return monomial_[static_cast<std::size_t>(i)]; }

    /// u(x) = f(x, 1).
    Poly dehomogenize() const;
    /// Multiplicity of the projective root (1:0), i.e. the power of y dividing f.
    int infinity_multiplicity() const;

    Rational evaluate(const Rational& x, const Rational& y) const;

    BinaryForm derivative_x() const;
    BinaryForm derivative_y() const;

    /// max |p_i| over the monomial view.
    Rational max_abs_monomial() const;
    /// Same projective point, scaled so that max |p_i| = 1.
    BinaryForm scaled_to_unit_max() const;

    /// True when both forms have equal degree and are nonzero multiples of
    /// each other.
    bool proportional_to(const BinaryForm& other) const;

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
    /// Product of forms (degrees add).
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const Rational& s, const BinaryForm& f);
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.normalized_ == b.normalized_; }

    std::string to_string() const;

private:
    std::vector<Rational> normalized_;
    std::vector<Rational> monomial_;
};

/// Distinct real projective roots of f (including (1:0)). Throws on f = 0.
int sturm_count(const BinaryForm& f);
/// Distinct real roots (x:1) with x in the closed interval [lo, hi].
int sturm_count(const BinaryForm& f, const Rational& lo, const Rational& hi);

struct FormRootIsolation {
    std::vector<RootInterval> affine;  // roots (x:1), isolating intervals for x
    bool at_infinity = false;          // (1:0) is a root

    std::size_t count() const { return affine.size() + (at_infinity ? 1 : 0); }
};

/// One isolating interval per distinct real projective root. Throws on f = 0.
FormRootIsolation isolate_real_roots(const BinaryForm& f);

/// f has d distinct real projective roots. Throws on f = 0.
bool is_hyperbolic(const BinaryForm& f);

/// No repeated projective root. Throws on f = 0.
bool is_squarefree(const BinaryForm& f);

/// Homogeneous resultant with formal degrees m = deg f, n = deg g:
/// determinant of the (m+n)x(m+n) Sylvester matrix whose first n rows hold
/// the monomial coefficients of f and whose last m rows hold those of g,
/// each row ordered from x^deg down to y^deg and shifted one column per row.
/// Res(x - y, x + y) = 2. Throws on a zero argument.
Rational resultant(const BinaryForm& f, const BinaryForm& g);

/// disc(f) = (-1)^(d(d-1)/2) Res(f_x, f_y) / d^(d-2) for d >= 2, 1 for d <= 1.
/// For a x^2 + b x y + c y^2 this is b^2 - 4ac. Zero exactly when f has a
/// repeated projective root, including a double root at (1:0).
Rational discriminant(const BinaryForm& f);

/// Greatest common divisor as a binary form (monic in the affine part).
BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b);

enum class Distribution {
    uniform_rational,   // monomial p_i = k / 2^bits, k uniform in [-2^bits, 2^bits]
    gauss_approx,       // monomial p_i = sum of 12 such uniforms
    uniform_normalized  // normalized a_i = k / 2^bits
};

std::string to_string(Distribution d);
Distribution parse_distribution(const std::string& name);

/// Deterministic in (degree, dist, seed, bits).
BinaryForm random_form(int degree, Distribution dist, std::uint64_t seed, unsigned bits = 20);

/// Real projective point, canonical representative (alpha, 1) or (1, 0).
class ProjectivePoint {
public:
    /// Throws when both coordinates are zero.
    ProjectivePoint(const Rational& alpha, const Rational& beta);
    static ProjectivePoint affine(const Rational& x) { return {x, 1}; }
    static ProjectivePoint infinity() { return {1, 0}; }

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    bool is_infinity() const { return beta_ == 0; }

    /// beta x - alpha y (y for the point at infinity): the linear form
    /// vanishing at this point.
    BinaryForm vanishing_form() const;
    /// alpha x + beta y: the linear form whose d-th power is the Veronese
    /// image of this point.
    BinaryForm power_base() const { return BinaryForm::linear(alpha_, beta_); }

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

private:
    Rational alpha_;
    Rational beta_;
};

/// Squarefree real form encoding a conjugation-stable point set on the
/// rational normal curve: its real roots plus its conjugate root pairs.
struct PointSetForm {
    BinaryForm form;
    int real_root_count = 0;
    /// Factor bookkeeping; only present when built by make_pointset.
    std::vector<ProjectivePoint> real_roots;
    std::vector<std::pair<Rational, Rational>> quadratics;  // x^2 + b x y + c y^2
    bool factored = false;

    int degree() const { return form.degree(); }
    int quadratic_count() const { return (degree() - real_root_count) / 2; }

    /// Validates squarefreeness; throws std::invalid_argument otherwise.
    static PointSetForm from_form(BinaryForm w);
};

/// Product of the vanishing forms of `real_roots` and the quadratics
/// x^2 + b x y + c y^2. Throws on repeated roots or b^2 - 4c >= 0.
PointSetForm make_pointset(const std::vector<ProjectivePoint>& real_roots,
                           const std::vector<std::pair<Rational, Rational>>& quadratics);

}  // namespace waring

#endif  // WARING_FORMS_HPP

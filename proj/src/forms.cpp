#include "waring/forms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "waring/matrix.hpp"
#include "waring/rng.hpp"

namespace waring {

namespace {

void require_nonzero(const BinaryForm& f, const char* what) {
    if (f.is_zero()) throw std::invalid_argument(std::string(what) + ": zero form");
}

}  // namespace

// ---------------------------------------------------------------- BinaryForm

BinaryForm BinaryForm::make(int degree, std::vector<Rational> coeffs, Basis basis) {
    if (degree < 0) throw std::invalid_argument("make_form: negative degree");
    if (coeffs.size() != static_cast<std::size_t>(degree) + 1)
        throw std::invalid_argument("make_form: expected " + std::to_string(degree + 1) + " coefficients, got " +
                                    std::to_string(coeffs.size()));
    return basis == Basis::monomial ? from_monomial(std::move(coeffs)) : from_normalized(std::move(coeffs));
}

BinaryForm BinaryForm::from_normalized(std::vector<Rational> a) {
    if (a.empty()) throw std::invalid_argument("form needs at least one coefficient");
    BinaryForm f;
    const auto d = static_cast<unsigned>(a.size() - 1);
    f.monomial_.resize(a.size());
    for (unsigned i = 0; i <= d; ++i) f.monomial_[i] = a[i] * binomial(d, i);
    f.normalized_ = std::move(a);
    return f;
}

BinaryForm BinaryForm::from_monomial(std::vector<Rational> p) {
    if (p.empty()) throw std::invalid_argument("form needs at least one coefficient");
    BinaryForm f;
    const auto d = static_cast<unsigned>(p.size() - 1);
    f.normalized_.resize(p.size());
    for (unsigned i = 0; i <= d; ++i) f.normalized_[i] = p[i] / binomial(d, i);
    f.monomial_ = std::move(p);
    return f;
}

BinaryForm BinaryForm::pure_power(const Rational& alpha, const Rational& beta, int d) {
    std::vector<Rational> a(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) a[static_cast<std::size_t>(i)] = pow(alpha, static_cast<unsigned>(i)) * pow(beta, static_cast<unsigned>(d - i));
    return from_normalized(std::move(a));
}

BinaryForm BinaryForm::linear(const Rational& x_coeff, const Rational& y_coeff) {
    return from_monomial({y_coeff, x_coeff});
}

BinaryForm BinaryForm::homogenize(const Poly& u, int degree) {
    if (u.degree() > degree) throw std::invalid_argument("homogenize: degree too small");
    std::vector<Rational> p(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= u.degree(); ++i) p[static_cast<std::size_t>(i)] = u.coeff(i);
    return from_monomial(std::move(p));
}

bool BinaryForm::is_zero() const {
    return std::all_of(normalized_.begin(), normalized_.end(), [](const Rational& q) { return q == 0; });
}

Poly BinaryForm::dehomogenize() const { return Poly(monomial_); }

int BinaryForm::infinity_multiplicity() const {
    require_nonzero(*this, "infinity_multiplicity");
    int m = 0;
    for (auto it = monomial_.rbegin(); it != monomial_.rend() && *it == 0; ++it) ++m;
    return m;
}

Rational BinaryForm::evaluate(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    const int d = degree();
    for (int i = 0; i <= d; ++i)
        if (monomial_[static_cast<std::size_t>(i)] != 0)
            acc += monomial_[static_cast<std::size_t>(i)] * pow(x, static_cast<unsigned>(i)) * pow(y, static_cast<unsigned>(d - i));
    return acc;
}

BinaryForm BinaryForm::derivative_x() const {
    const int d = degree();
    if (d == 0) return {};
    std::vector<Rational> q(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) q[static_cast<std::size_t>(j)] = monomial_[static_cast<std::size_t>(j + 1)] * (j + 1);
    return from_monomial(std::move(q));
}

BinaryForm BinaryForm::derivative_y() const {
    const int d = degree();
    if (d == 0) return {};
    std::vector<Rational> q(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) q[static_cast<std::size_t>(j)] = monomial_[static_cast<std::size_t>(j)] * (d - j);
    return from_monomial(std::move(q));
}

Rational BinaryForm::max_abs_monomial() const {
    Rational m = 0;
    for (const auto& p : monomial_) m = std::max(m, Rational(abs(p)));
    return m;
}

BinaryForm BinaryForm::scaled_to_unit_max() const {
    require_nonzero(*this, "scaled_to_unit_max");
    return Rational(1 / max_abs_monomial()) * *this;
}

bool BinaryForm::proportional_to(const BinaryForm& other) const {
    if (degree() != other.degree() || is_zero() || other.is_zero()) return false;
    std::size_t k = 0;
    while (normalized_[k] == 0) ++k;
    if (other.normalized_[k] == 0) return false;
    const Rational ratio = other.normalized_[k] / normalized_[k];
    for (std::size_t i = 0; i < normalized_.size(); ++i)
        if (normalized_[i] * ratio != other.normalized_[i]) return false;
    return true;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("form sum: degree mismatch");
    std::vector<Rational> v(a.normalized_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.normalized_[i] + b.normalized_[i];
    return BinaryForm::from_normalized(std::move(v));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + Rational(-1) * b; }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    std::vector<Rational> p(a.monomial_.size() + b.monomial_.size() - 1);
    for (std::size_t i = 0; i < a.monomial_.size(); ++i) {
        if (a.monomial_[i] == 0) continue;
        for (std::size_t j = 0; j < b.monomial_.size(); ++j) p[i + j] += a.monomial_[i] * b.monomial_[j];
    }
    return BinaryForm::from_monomial(std::move(p));
}

BinaryForm operator*(const Rational& s, const BinaryForm& f) {
    std::vector<Rational> v = f.normalized_;
    for (auto& q : v) q *= s;
    return BinaryForm::from_normalized(std::move(v));
}

std::string BinaryForm::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    const int d = degree();
    bool first = true;
    for (int i = d; i >= 0; --i) {
        const Rational& c = monomial_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> parts;
        if (mag != 1 || d == 0) parts.push_back(waring::to_string(mag));
        if (i > 0) parts.push_back(i > 1 ? "x^" + std::to_string(i) : "x");
        if (d - i > 0) parts.push_back(d - i > 1 ? "y^" + std::to_string(d - i) : "y");
        for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "*" : "") << parts[k];
    }
    return os.str();
}

// ---------------------------------------------------------------- root counting

int sturm_count(const BinaryForm& f) {
    const int m = f.infinity_multiplicity();
    const Poly u = f.dehomogenize();
    const int affine = u.degree() >= 1 ? SturmChain(u).count_all() : 0;
    return affine + (m > 0 ? 1 : 0);
}

int sturm_count(const BinaryForm& f, const Rational& lo, const Rational& hi) {
    require_nonzero(f, "sturm_count");
    const Poly u = f.dehomogenize();
    if (u.degree() < 1) return 0;
    return SturmChain(u).count_closed(lo, hi);
}

FormRootIsolation isolate_real_roots(const BinaryForm& f) {
    FormRootIsolation out;
    out.at_infinity = f.infinity_multiplicity() > 0;
    const Poly u = f.dehomogenize();
    if (u.degree() >= 1) out.affine = isolate_real_roots(u);
    return out;
}

bool is_hyperbolic(const BinaryForm& f) {
    const int d = f.degree();
    const int m = f.infinity_multiplicity();
    if (d == 0 || m > 1) return false;
    const Poly u = f.dehomogenize();
    if (u.degree() < 1) return m == d;
    // d distinct roots of a degree-d form are automatically simple.
    return SturmChain(u).count_all() + m == d;
}

bool is_squarefree(const BinaryForm& f) {
    if (f.infinity_multiplicity() > 1) return false;
    const Poly u = f.dehomogenize();
    if (u.degree() < 1) return true;
    return gcd(u, u.derivative()).degree() == 0;
}

Rational resultant(const BinaryForm& f, const BinaryForm& g) {
    require_nonzero(f, "resultant");
    require_nonzero(g, "resultant");
    const auto m = static_cast<std::size_t>(f.degree());
    const auto n = static_cast<std::size_t>(g.degree());
    ExactMatrix s(m + n, m + n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s.at(i, i + k) = f.monomial_coeff(static_cast<int>(m - k));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s.at(n + i, i + k) = g.monomial_coeff(static_cast<int>(n - k));
    return determinant(s);
}

Rational discriminant(const BinaryForm& f) {
    require_nonzero(f, "discriminant");
    const int d = f.degree();
    if (d <= 1) return 1;
    const BinaryForm fx = f.derivative_x(), fy = f.derivative_y();
    // c x^d or c y^d: a d-fold root
    if (fx.is_zero() || fy.is_zero()) return 0;
    Rational r = resultant(fx, fy);
    r /= pow(Rational(d), static_cast<unsigned>(d - 2));
    if ((d * (d - 1) / 2) % 2 == 1) r = -r;
    return r;
}

BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b) {
    const int m = std::min(a.infinity_multiplicity(), b.infinity_multiplicity());
    Poly g = gcd(a.dehomogenize(), b.dehomogenize());
    BinaryForm out = BinaryForm::homogenize(g, g.degree());
    for (int i = 0; i < m; ++i) out = out * BinaryForm::linear(0, 1);
    return out;
}

// ---------------------------------------------------------------- sampling

std::string to_string(Distribution d) {
    switch (d) {
        case Distribution::uniform_rational: return "uniform_rational";
        case Distribution::gauss_approx: return "gauss_approx";
        case Distribution::uniform_normalized: return "uniform_normalized";
    }
    return "unknown";
}

Distribution parse_distribution(const std::string& name) {
    if (name == "uniform_rational") return Distribution::uniform_rational;
    if (name == "gauss_approx") return Distribution::gauss_approx;
    if (name == "uniform_normalized") return Distribution::uniform_normalized;
    throw std::invalid_argument("unknown distribution: " + name);
}

BinaryForm random_form(int degree, Distribution dist, std::uint64_t seed, unsigned bits) {
    if (degree < 1) throw std::invalid_argument("random_form: degree must be >= 1");
    Rng rng(seed);
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& q : c) {
        if (dist == Distribution::gauss_approx) {
            q = 0;
            for (int k = 0; k < 12; ++k) q += rng.uniform_dyadic(bits);
        } else {
            q = rng.uniform_dyadic(bits);
        }
    }
    return dist == Distribution::uniform_normalized ? BinaryForm::from_normalized(std::move(c))
                                                    : BinaryForm::from_monomial(std::move(c));
}

// ---------------------------------------------------------------- point sets

ProjectivePoint::ProjectivePoint(const Rational& alpha, const Rational& beta) {
    if (alpha == 0 && beta == 0) throw std::invalid_argument("projective point (0:0)");
    if (beta != 0) {
        alpha_ = alpha / beta;
        beta_ = 1;
    } else {
        alpha_ = 1;
        beta_ = 0;
    }
}

BinaryForm ProjectivePoint::vanishing_form() const {
    if (is_infinity()) return BinaryForm::linear(0, 1);
    return BinaryForm::linear(beta_, -alpha_);
}

PointSetForm PointSetForm::from_form(BinaryForm w) {
    if (w.is_zero()) throw std::invalid_argument("point set: zero form");
    if (!is_squarefree(w)) throw std::invalid_argument("point set: form is not squarefree");
    PointSetForm ps;
    ps.real_root_count = w.degree() == 0 ? 0 : sturm_count(w);
    ps.form = std::move(w);
    return ps;
}

PointSetForm make_pointset(const std::vector<ProjectivePoint>& real_roots,
                           const std::vector<std::pair<Rational, Rational>>& quadratics) {
    for (std::size_t i = 0; i < real_roots.size(); ++i)
        for (std::size_t j = i + 1; j < real_roots.size(); ++j)
            if (real_roots[i] == real_roots[j]) throw std::invalid_argument("make_pointset: repeated root");
    BinaryForm w = BinaryForm::from_monomial({Rational(1)});
    for (const auto& p : real_roots) w = w * p.vanishing_form();
    for (const auto& [b, c] : quadratics) {
        if (b * b - 4 * c >= 0) throw std::invalid_argument("make_pointset: reducible quadratic factor");
        w = w * BinaryForm::from_monomial({c, b, Rational(1)});
    }
    if (w.degree() > 0 && !is_squarefree(w)) throw std::invalid_argument("make_pointset: repeated quadratic factor");
    PointSetForm ps;
    ps.form = std::move(w);
    ps.real_root_count = static_cast<int>(real_roots.size());
    ps.real_roots = real_roots;
    ps.quadratics = quadratics;
    ps.factored = true;
    return ps;
}

}  // namespace waring

#include <cmath>
#include <stdexcept>
#include <utility>

#include "waring/apolarity.hpp"
#include "waring/rank.hpp"

namespace waring {

namespace {

BigFloat power(const BigFloat& base, int e) {
    BigFloat r(1L, base.precision());
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

BigFloat max_abs(const std::vector<BigFloat>& v, int prec) {
    BigFloat m(prec);
    for (const auto& x : v)
        if (x.abs() > m) m = x.abs();
    return m;
}

// Solves the (d+1) x r system column-by-column with partial pivoting and
// returns the coefficients. Rows left over after elimination are ignored;
// the caller measures the residual on the full system.
std::vector<BigFloat> solve_overdetermined(std::vector<std::vector<BigFloat>> a, std::vector<BigFloat> b, int prec) {
    const std::size_t rows = a.size();
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    std::vector<std::size_t> pivot_row(cols);
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t best = top;
        for (std::size_t r = top + 1; r < rows; ++r)
            if (a[r][c].abs() > a[best][c].abs()) best = r;
        if (a[best][c].is_zero()) throw std::runtime_error("decompose: singular Vandermonde system");
        std::swap(a[top], a[best]);
        std::swap(b[top], b[best]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == top || a[r][c].is_zero()) continue;
            BigFloat factor = a[r][c] / a[top][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[top][k];
            b[r] -= factor * b[top];
        }
        pivot_row[c] = top++;
    }
    std::vector<BigFloat> x(cols, BigFloat(prec));
    for (std::size_t c = 0; c < cols; ++c) x[c] = b[pivot_row[c]] / a[pivot_row[c]][c];
    return x;
}

}  // namespace

Decomposition decompose(const BinaryForm& f, const BinaryForm& witness, int precision_bits) {
    if (f.is_zero() || witness.is_zero()) throw std::invalid_argument("decompose: zero form");
    if (precision_bits < 16) throw std::invalid_argument("decompose: precision below 16 bits");
    const int d = f.degree();
    if (witness.degree() > d) throw std::invalid_argument("decompose: witness degree exceeds form degree");
    if (!contract(witness, f).is_zero()) throw std::invalid_argument("decompose: witness is not apolar to the form");
    if (!is_hyperbolic(witness)) throw std::invalid_argument("decompose: witness is not hyperbolic");

    FormRootIsolation iso = isolate_real_roots(witness);
    const Poly sqf = squarefree_part(witness.dehomogenize());

    const std::vector<Rational>& p = f.monomial();
    for (int attempt = 0; attempt <= 3; ++attempt) {
        const int prec = precision_bits + 32 * (attempt + 1);
        const Rational width = Rational(1) / pow(Rational(2), static_cast<unsigned>(precision_bits + 16 * attempt));

        std::vector<std::pair<BigFloat, BigFloat>> points;
        for (auto& iv : iso.affine) {
            if (!iv.exact) refine_root(sqf, iv, width);
            const Rational x = iv.exact ? *iv.exact : iv.midpoint();
            points.emplace_back(BigFloat(x, prec), BigFloat(1L, prec));
        }
        if (iso.at_infinity) points.emplace_back(BigFloat(1L, prec), BigFloat(0L, prec));

        // Column i holds the monomial coefficients of (alpha_i x + beta_i y)^d.
        std::vector<std::vector<BigFloat>> a(static_cast<std::size_t>(d) + 1);
        std::vector<BigFloat> rhs;
        for (int j = 0; j <= d; ++j) {
            BigFloat binom(binomial(static_cast<unsigned>(d), static_cast<unsigned>(j)), prec);
            for (const auto& [alpha, beta] : points) a[j].push_back(binom * power(alpha, j) * power(beta, d - j));
            rhs.emplace_back(p[static_cast<std::size_t>(j)], prec);
        }
        std::vector<BigFloat> c = solve_overdetermined(a, rhs, prec);

        std::vector<BigFloat> diff;
        for (int j = 0; j <= d; ++j) {
            BigFloat s = rhs[j];
            for (std::size_t i = 0; i < c.size(); ++i) s -= c[i] * a[j][i];
            diff.push_back(s);
        }
        BigFloat residual = max_abs(diff, prec);
        BigFloat tolerance = max_abs(rhs, prec);
        BigFloat scale(prec);
        mpfr_set_si_2exp(const_cast<mpfr_ptr>(scale.get()), 1, -precision_bits / 2, MPFR_RNDN);
        tolerance = tolerance * scale;

        if (!(residual > tolerance)) {
            Decomposition out{{}, residual, precision_bits, attempt};
            for (std::size_t i = 0; i < c.size(); ++i)
                out.terms.push_back({c[i], points[i].first, points[i].second});
            return out;
        }
    }
    throw std::runtime_error("decompose: residual above tolerance after 3 refinements");
}

}  // namespace waring

// Independent numeric real-root counter used as a test oracle.
//
// Aberth-Ehrlich simultaneous iteration, first in double precision and then
// polished at ~100 bits with Boost.Multiprecision over MPFR. Shares no code
// with the exact engine; coefficients enter as exact rationals and are
// rounded once.
#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "waring/rational.hpp"

namespace oracle {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<31>>;

struct Complex {
    Real re, im;
};

inline Complex add(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex sub(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex mul(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex div(const Complex& a, const Complex& b) {
    Real den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

inline Real to_real(const waring::Rational& q) {
    Real num(q.get_num().get_str()), den(q.get_den().get_str());
    return num / den;
}

namespace detail {

// Horner evaluation of p and p' (ascending coefficients).
template <typename C, typename Coef>
void eval_with_derivative(const std::vector<Coef>& p, const C& z, C& value, C& deriv, C zero) {
    value = zero;
    deriv = zero;
    for (std::size_t i = p.size(); i-- > 0;) {
        deriv = deriv * z + value;
        value = value * z + C(p[i]);
    }
}

inline std::vector<std::complex<double>> aberth_double(const std::vector<double>& p) {
    using C = std::complex<double>;
    const std::size_t n = p.size() - 1;
    double radius = 0;
    for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(p[i] / p[n]));
    radius = 1 + radius;
    std::vector<C> z(n);
    for (std::size_t k = 0; k < n; ++k) z[k] = std::polar(radius * 0.5, 2 * M_PI * (k + 0.25) / n + 0.4);
    for (int iter = 0; iter < 500; ++iter) {
        double change = 0;
        for (std::size_t k = 0; k < n; ++k) {
            C v, dv;
            eval_with_derivative(p, z[k], v, dv, C(0));
            if (v == C(0)) continue;
            C ratio = v / dv;
            C s(0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) s += C(1) / (z[k] - z[j]);
            C step = ratio / (C(1) - ratio * s);
            z[k] -= step;
            change = std::max(change, std::abs(step) / (1 + std::abs(z[k])));
        }
        if (change < 1e-15) break;
    }
    return z;
}

}  // namespace detail

/// All complex roots of p (ascending rational coefficients, nonzero
/// leading coefficient) to roughly 100 bits.
inline std::vector<Complex> roots(const std::vector<waring::Rational>& coeffs) {
    const std::size_t n = coeffs.size() - 1;
    std::vector<Real> p;
    std::vector<double> pd;
    for (const auto& c : coeffs) {
        p.push_back(to_real(c));
        pd.push_back(c.get_d());
    }
    auto start = detail::aberth_double(pd);
    std::vector<Complex> z;
    for (const auto& s : start) z.push_back({Real(s.real()), Real(s.imag())});

    const Real tol = Real(1) / pow(Real(2), 96);
    for (int iter = 0; iter < 200; ++iter) {
        Real change = 0;
        for (std::size_t k = 0; k < n; ++k) {
            Complex v{0, 0}, dv{0, 0};
            for (std::size_t i = p.size(); i-- > 0;) {
                dv = add(mul(dv, z[k]), v);
                v = add(mul(v, z[k]), Complex{p[i], 0});
            }
            if (v.re == 0 && v.im == 0) continue;
            Complex ratio = div(v, dv);
            Complex s{0, 0};
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) s = add(s, div(Complex{1, 0}, sub(z[k], z[j])));
            Complex step = div(ratio, sub(Complex{1, 0}, mul(ratio, s)));
            z[k] = sub(z[k], step);
            Real size = sqrt(step.re * step.re + step.im * step.im) / (1 + sqrt(z[k].re * z[k].re + z[k].im * z[k].im));
            if (size > change) change = size;
        }
        if (change < tol) break;
    }
    return z;
}

/// Number of real roots: roots whose imaginary part is below 2^-60 relative
/// to their size. Meant for squarefree inputs.
inline int real_root_count(const std::vector<waring::Rational>& coeffs) {
    int count = 0;
    const Real eps = Real(1) / pow(Real(2), 60);
    for (const auto& z : roots(coeffs))
        if (abs(z.im) < eps * (1 + abs(z.re))) ++count;
    return count;
}

}  // namespace oracle

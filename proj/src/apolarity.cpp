#include "waring/apolarity.hpp"

#include <stdexcept>
#include <string>

namespace waring {

FormSubspace::FormSubspace(int degree, std::vector<BinaryForm> basis) : degree_(degree), basis_(std::move(basis)) {
    for (const auto& b : basis_)
        if (b.degree() != degree_) throw std::invalid_argument("FormSubspace: basis element of wrong degree");
    if (basis_.empty()) return;
    ExactMatrix m(basis_.size(), static_cast<std::size_t>(degree_) + 1);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (int k = 0; k <= degree_; ++k) m.at(i, static_cast<std::size_t>(k)) = basis_[i].monomial_coeff(k);
    if (rank(m) != basis_.size()) throw std::invalid_argument("FormSubspace: basis is linearly dependent");
}

bool FormSubspace::contains(const BinaryForm& f) const {
    if (f.degree() != degree_) return false;
    if (f.is_zero()) return true;
    ExactMatrix m(basis_.size() + 1, static_cast<std::size_t>(degree_) + 1);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (int k = 0; k <= degree_; ++k) m.at(i, static_cast<std::size_t>(k)) = basis_[i].monomial_coeff(k);
    for (int k = 0; k <= degree_; ++k) m.at(basis_.size(), static_cast<std::size_t>(k)) = f.monomial_coeff(k);
    return rank(m) == basis_.size();
}

BinaryForm FormSubspace::combination(const std::vector<Rational>& coeffs) const {
    if (coeffs.size() != basis_.size()) throw std::invalid_argument("combination: coefficient count mismatch");
    std::vector<Rational> p(static_cast<std::size_t>(degree_) + 1);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (int k = 0; k <= degree_; ++k) p[static_cast<std::size_t>(k)] += coeffs[i] * basis_[i].monomial_coeff(k);
    }
    return BinaryForm::from_monomial(std::move(p));
}

ExactMatrix catalecticant(const BinaryForm& f, int r) {
    const int d = f.degree();
    if (f.is_zero()) throw std::invalid_argument("catalecticant: zero form");
    if (r < 1 || r > d) throw std::invalid_argument("catalecticant: r = " + std::to_string(r) + " out of range [1, " + std::to_string(d) + "]");
    ExactMatrix m(static_cast<std::size_t>(d - r + 1), static_cast<std::size_t>(r + 1));
    for (int j = 0; j <= d - r; ++j)
        for (int k = 0; k <= r; ++k) m.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = f.normalized_coeff(j + k);
    return m;
}

FormSubspace kernel(const ExactMatrix& m) {
    if (m.cols() == 0) throw std::invalid_argument("kernel: empty matrix");
    std::vector<BinaryForm> basis;
    for (auto& v : kernel_basis(m)) basis.push_back(BinaryForm::from_monomial(std::move(v)));
    return {static_cast<int>(m.cols()) - 1, std::move(basis)};
}

BinaryForm contract(const BinaryForm& h, const BinaryForm& f) {
    const int r = h.degree();
    const int d = f.degree();
    if (r > d) throw std::invalid_argument("contract: degree of h exceeds degree of f");
    std::vector<Rational> c(static_cast<std::size_t>(d - r) + 1);
    for (int k = 0; k <= r; ++k) {
        const Rational& b = h.monomial_coeff(k);
        if (b == 0) continue;
        for (int j = 0; j <= d - r; ++j) c[static_cast<std::size_t>(j)] += b * f.normalized_coeff(j + k);
    }
    return BinaryForm::from_normalized(std::move(c));
}

ExactMatrix annihilator_rows(const BinaryForm& w, int d) {
    const int r = w.degree();
    if (r > d) throw std::invalid_argument("annihilator: deg w exceeds d");
    ExactMatrix m(static_cast<std::size_t>(d - r + 1), static_cast<std::size_t>(d + 1));
    for (int j = 0; j <= d - r; ++j)
        for (int k = 0; k <= r; ++k) m.at(static_cast<std::size_t>(j), static_cast<std::size_t>(j + k)) = w.monomial_coeff(k);
    return m;
}

FormSubspace annihilator_space(const PointSetForm& w, int d) {
    if (w.form.is_zero() || !is_squarefree(w.form)) throw std::invalid_argument("annihilator_space: w must be squarefree");
    std::vector<BinaryForm> basis;
    for (auto& v : kernel_basis(annihilator_rows(w.form, d))) basis.push_back(BinaryForm::from_normalized(std::move(v)));
    return {d, std::move(basis)};
}

FormSubspace apolar_kernel(const BinaryForm& f, int r) { return kernel(catalecticant(f, r)); }

}  // namespace waring

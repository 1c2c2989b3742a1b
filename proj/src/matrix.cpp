#include "waring/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace waring {

std::vector<Rational> ExactMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void ExactMatrix::append_rows(const ExactMatrix& other) {
    if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
    if (other.cols_ != cols_) throw std::invalid_argument("append_rows: column mismatch");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

Echelon bareiss_echelon(const ExactMatrix& m) {
    Echelon e;
    e.rows.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        Integer l = common_denominator(r);
        e.row_scale *= l;
        auto& out = e.rows[i];
        out.reserve(m.cols());
        for (const auto& q : r) out.push_back(q.get_num() * (l / q.get_den()));
    }
    auto& a = e.rows;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            ++e.row_swaps;
        }
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

std::size_t rank(const ExactMatrix& m) { return bareiss_echelon(m).rank(); }

Rational determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    if (m.rows() == 0) return 1;
    Echelon e = bareiss_echelon(m);
    if (e.rank() < m.rows()) return 0;
    Rational det(e.rows.back().back());
    if (e.row_swaps % 2 == 1) det = -det;
    return det / e.row_scale;
}

std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m) {
    Echelon e = bareiss_echelon(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(n);
        x[f] = 1;
        for (std::size_t i = e.rank(); i-- > 0;) {
            const std::size_t pc = e.pivot_cols[i];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < n; ++j)
                if (x[j] != 0) s += Rational(e.rows[i][j]) * x[j];
            x[pc] = -s / Rational(e.rows[i][pc]);
        }
        auto ints = primitive_integer_vector(x);
        basis.emplace_back(ints.begin(), ints.end());
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const ExactMatrix& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    ExactMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    for (const auto& v : kernel_basis(aug)) {
        if (v.back() == 0) continue;
        std::vector<Rational> x(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) x[j] = -v[j] / v.back();
        return x;
    }
    return std::nullopt;
}

}  // namespace waring

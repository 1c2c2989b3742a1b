#ifndef WARING_MATRIX_HPP
#define WARING_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const;

    /// Appends the rows of `other` (column counts must agree).
    void append_rows(const ExactMatrix& other);

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Fraction-free row echelon form of a matrix whose rows were scaled to
/// integers. Pivot search takes the first nonzero entry at or below the
/// current row, columns left to right, so the result is deterministic.
struct Echelon {
    std::vector<std::vector<Integer>> rows;
    std::vector<std::size_t> pivot_cols;
    int row_swaps = 0;
    Rational row_scale = 1;  // product of the per-row integer scale factors

    std::size_t rank() const { return pivot_cols.size(); }
};

Echelon bareiss_echelon(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Determinant of a square matrix (1 for the empty matrix).
Rational determinant(const ExactMatrix& m);

/// Basis of the right kernel. One vector per free column (ascending), each
/// scaled to a primitive integer vector.
std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m);

/// A solution of m x = b, if one exists.
std::optional<std::vector<Rational>> solve(const ExactMatrix& m, const std::vector<Rational>& b);

}  // namespace waring

#endif  // WARING_MATRIX_HPP

#ifndef WARING_APOLARITY_HPP
#define WARING_APOLARITY_HPP

#include <vector>

#include "waring/forms.hpp"
#include "waring/matrix.hpp"

namespace waring {

/// Exact linear subspace of degree-r binary forms, given by a basis.
class FormSubspace {
public:
    /// Throws if a basis element has the wrong degree or the basis is
    /// linearly dependent.
    FormSubspace(int degree, std::vector<BinaryForm> basis);

    int degree() const { return degree_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BinaryForm>& basis() const { return basis_; }

    /// Exact membership (zero form included).
    bool contains(const BinaryForm& f) const;

    /// sum_k coeffs[k] * basis[k].
    BinaryForm combination(const std::vector<Rational>& coeffs) const;

private:
    int degree_;
    std::vector<BinaryForm> basis_;
};

/// (d-r+1) x (r+1) Hankel matrix with entry (j, k) = a_{j+k}, a the
/// normalized coefficients of f. Throws unless 1 <= r <= d and f != 0.
ExactMatrix catalecticant(const BinaryForm& f, int r);

/// Right kernel of a catalecticant-shaped matrix; each kernel vector b is
/// read as the degree-(cols-1) form sum_k b_k x^k y^(r-k) (monomial view).
FormSubspace kernel(const ExactMatrix& m);

/// Apolar contraction of a degree-d form by a degree-r form:
///   c_j = sum_k b_k a_{j+k},  j = 0..d-r,
/// b the monomial coefficients of h and a the normalized coefficients of f.
/// The result is returned in the normalized view. With L = alpha x + beta y,
/// contract(h, L^d) = h(alpha, beta) L^(d-r), so h annihilates every
/// combination of powers of linear forms whose points are roots of h.
/// Throws when deg h > deg f.
BinaryForm contract(const BinaryForm& h, const BinaryForm& f);

/// All degree-d forms annihilated by w; dimension equals deg w.
/// Throws if w is not squarefree or deg w > d.
FormSubspace annihilator_space(const PointSetForm& w, int d);

/// Linear conditions contract(w, f) = 0 on the normalized coefficients of f.
ExactMatrix annihilator_rows(const BinaryForm& w, int d);

/// kernel(catalecticant(f, r)).
FormSubspace apolar_kernel(const BinaryForm& f, int r);

}  // namespace waring

#endif  // WARING_APOLARITY_HPP

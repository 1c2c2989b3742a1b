#ifndef WARING_HYPDECIDE_HPP
#define WARING_HYPDECIDE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waring/apolarity.hpp"
#include "waring/forms.hpp"

namespace waring {

/// Does a subspace of degree-r forms contain a hyperbolic element?
struct HypDecision {
    enum class Verdict { exists, not_exists, unknown };
    enum class Exactness { exact, search_only };

    Verdict verdict = Verdict::unknown;
    std::optional<BinaryForm> witness;  // present iff verdict == exists
    int trials_used = 0;
    Exactness exactness = Exactness::exact;

    bool exists() const { return verdict == Verdict::exists; }
    bool not_exists() const { return verdict == Verdict::not_exists; }
};

std::string to_string(HypDecision::Verdict v);

inline constexpr int kDefaultSearchTrials = 200;

/// Exact: EXISTS(g) iff g is hyperbolic. Throws on g = 0.
HypDecision decide_dim1(const BinaryForm& g);

/// Exact decision on the pencil {g1 + t g2} together with g2 (t = infinity).
///
/// The hyperbolic locus of the pencil is open, and its boundary lies among
/// the real roots of D(t) l(t), where D is the discriminant of g1 + t g2 and
/// l its x^r coefficient. One rational sample is tested per open interval
/// between consecutive roots, plus t = 0 (first), every root found exactly,
/// and t = infinity. Throws on dependent inputs or a degree mismatch.
HypDecision decide_dim2(const BinaryForm& g1, const BinaryForm& g2);

/// D(t): discriminant of g1 + t g2 as a polynomial in t (exact interpolation).
Poly pencil_discriminant(const BinaryForm& g1, const BinaryForm& g2);

/// Sample parameters tested by decide_dim2, in test order (t = infinity
/// excluded).
std::vector<Rational> pencil_samples(const BinaryForm& g1, const BinaryForm& g2);

/// Seeded randomized search. Basis elements are tried first; each further
/// trial runs decide_dim2 on the pencil spanned by two random combinations
/// with integer coefficients in [-64, 64]. Never
/// returns NOT_EXISTS. Throws on a zero-dimensional space.
HypDecision search_witness(const FormSubspace& space, int trials, std::uint64_t seed);

/// dim 0 -> NOT_EXISTS, dim 1 -> decide_dim1, dim 2 -> decide_dim2,
/// dim >= 3 -> search_witness.
HypDecision decide(const FormSubspace& space, int trials, std::uint64_t seed);

}  // namespace waring

#endif  // WARING_HYPDECIDE_HPP

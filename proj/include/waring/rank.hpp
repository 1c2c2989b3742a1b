#ifndef WARING_RANK_HPP
#define WARING_RANK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waring/bigfloat.hpp"
#include "waring/forms.hpp"
#include "waring/hypdecide.hpp"

namespace waring {

/// Sylvester data behind the complex rank.
struct ComplexRankEvidence {
    int first_kernel_degree = 0;  // r0: least r with a nonzero apolar kernel
    int kernel_dim = 0;           // dim of that kernel
    std::optional<BinaryForm> squarefree_witness;
};

/// One machine-checkable fact about the real rank of f.
struct RankEvidence {
    enum class Kind {
        kernel_trivial,           // apolar_kernel(f, degree) = 0          lo >= degree + 1
        not_exists,               // exact decision, no hyperbolic form    lo >= degree + 1
        hyperbolic_apolar,        // witness apolar to f and hyperbolic    hi <= degree
        hyperbolic_self,          // f hyperbolic                          lo = hi = d
        squarefree_nonhyperbolic, // f squarefree, not hyperbolic, d >= 3  hi <= d - 1
        contraction_hyperbolic,   // contract(linear, f) hyperbolic        lo >= d - 1
        complex_rank_bound        // Rsr >= Csr                            lo >= Csr
    };

    Kind kind = Kind::kernel_trivial;
    int degree = 0;                    // r for kernel/decision/witness kinds, Csr for complex_rank_bound
    int kernel_dim = 0;                // not_exists: dimension decided
    std::optional<BinaryForm> witness; // hyperbolic_apolar
    std::optional<BinaryForm> linear;  // contraction_hyperbolic: the contracting linear form
    std::optional<BinaryForm> image;   // contraction_hyperbolic: contract(linear, f)

    /// Lower bound on Rsr implied by this item, or 0.
    int lower_bound(int d) const;
    /// Upper bound on Rsr implied by this item, or d + 1 when none.
    int upper_bound(int d) const;
    /// Evidence that rests on a cited theorem rather than a witness or an
    /// exact kernel computation.
    bool theorem_backed() const;
};

std::string to_string(RankEvidence::Kind k);
RankEvidence::Kind parse_evidence_kind(const std::string& name);

struct RankCertificate {
    int degree = 0;
    int complex_rank = 0;
    ComplexRankEvidence complex_evidence;
    int real_lo = 0;
    int real_hi = 0;
    std::vector<RankEvidence> evidence;
    bool exact = false;
    /// Which procedure produced it ("bracket", "classify_d5", ...).
    std::string route;
    /// Set when a degree-specific classifier met unexpected kernel
    /// dimensions and fell back to the general bracket engine.
    bool nongeneric_stratum = false;

    /// "n" for exact results, "[lo,hi]" otherwise.
    std::string label() const;
};

/// Csr via Sylvester's dichotomy: r0 if the first nonzero apolar kernel
/// contains a squarefree form, else d - r0 + 2. Throws on f = 0 or d < 1.
int complex_rank(const BinaryForm& f, ComplexRankEvidence* evidence = nullptr, std::uint64_t seed = 0);

/// General real-rank bracket: walks r = 1, 2, ... running the exact or
/// search decision on each apolar kernel, plus the rank-d rule. Throws on a
/// zero or non-squarefree form.
RankCertificate real_rank_bracket(const BinaryForm& f, int trials = kDefaultSearchTrials, std::uint64_t seed = 0);

/// Exact classification of a generic quintic: 3, 4 or 5.
RankCertificate classify_d5(const BinaryForm& f, int trials = kDefaultSearchTrials, std::uint64_t seed = 0);

/// Exact classification of a generic sextic via the dim-2 pencil decision: 4, 5 or 6.
RankCertificate classify_d6(const BinaryForm& f, int trials = kDefaultSearchTrials, std::uint64_t seed = 0);

/// Septics: exact 4, 5 or 7, otherwise the bracket [5, 6].
RankCertificate bracket_d7(const BinaryForm& f, int trials = kDefaultSearchTrials, std::uint64_t seed = 0);

/// Degree dispatch used by the census: d5/d6/d7 procedures, the general
/// bracket engine elsewhere.
RankCertificate classify(const BinaryForm& f, int trials = kDefaultSearchTrials, std::uint64_t seed = 0);

/// Certificate assembled from externally produced evidence: the complex
/// rank and its bound are added, then the bracket is derived from the items.
RankCertificate make_certificate(const BinaryForm& f, std::vector<RankEvidence> evidence, std::string route);

/// If contract(linear, f) is hyperbolic of degree d - 1, records the
/// lower bound Rsr(f) >= d - 1 and tightens the certificate. Returns
/// whether the bound applied.
bool attach_contraction_bound(RankCertificate& cert, const BinaryForm& f, const BinaryForm& linear);

/// Re-derives every evidence item from scratch. Returns the name of the
/// first failing check, or nullopt when the certificate holds.
std::optional<std::string> verify_certificate(const BinaryForm& f, const RankCertificate& cert);

struct DecompositionTerm {
    BigFloat coefficient;
    BigFloat alpha;  // term is coefficient * (alpha x + beta y)^d
    BigFloat beta;
};

struct Decomposition {
    std::vector<DecompositionTerm> terms;
    BigFloat residual;  // max |monomial coefficient| of f - sum of terms
    int precision_bits = 0;
    int refinements = 0;
};

/// Numerical decomposition of f along the real roots of a hyperbolic apolar
/// form. Throws std::invalid_argument when the witness is not apolar or not
/// hyperbolic, std::runtime_error when the residual stays above
/// 2^(-precision_bits/2) * max|p_i| after 3 refinements.
Decomposition decompose(const BinaryForm& f, const BinaryForm& witness, int precision_bits = 128);

/// Lemma-style uniqueness check on two decomposition supports: true iff
/// A and B agree up to scale or their union has at least d + 2 points.
bool check_union_bound(const PointSetForm& a, const PointSetForm& b, int d);

}  // namespace waring

#endif  // WARING_RANK_HPP

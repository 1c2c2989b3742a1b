#ifndef WARING_WITNESSES_HPP
#define WARING_WITNESSES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "waring/forms.hpp"
#include "waring/rank.hpp"

namespace waring {

enum class Provenance { hyperbolic_d, generic_span, intersection, dminus1_family };

std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& name);

struct HypothesisCheck {
    std::string name;
    bool value = false;

    friend bool operator==(const HypothesisCheck&, const HypothesisCheck&) = default;
};

/// Everything needed to rebuild the form and re-run its checks.
struct WitnessParams {
    std::uint64_t seed = 0;
    std::vector<Rational> roots;         // hyperbolic_d: affine roots of the form
    std::optional<BinaryForm> w;         // intersection
    std::optional<BinaryForm> s;         // generic_span, intersection
    std::vector<Rational> combination;   // generic_span: coordinates in the annihilator basis
    std::optional<BinaryForm> f;         // dminus1: hyperbolic form of degree d - 1
    std::vector<Rational> points;        // dminus1: t_i with L_i = x + t_i y
    std::vector<Rational> coefficients;  // dminus1: c_i
    std::optional<Rational> c;           // dminus1: coefficient of y^d
    std::optional<Rational> T;           // dminus1: monotonicity radius of u
    std::optional<Rational> eta_hat;     // dminus1: bound on |u| over [-T, T]
};

struct WitnessForm {
    BinaryForm form;
    Provenance provenance = Provenance::hyperbolic_d;
    int certified_complex_rank = 0;
    int certified_real_rank = 0;
    RankCertificate certificate;
    std::vector<HypothesisCheck> checks;
    WitnessParams params;
};

/// Thrown when a construction hypothesis fails; what() names the check.
class HypothesisFailure : public std::runtime_error {
public:
    explicit HypothesisFailure(const std::string& check)
        : std::runtime_error("hypothesis check failed: " + check), check_(check) {}
    const std::string& check() const { return check_; }

private:
    std::string check_;
};

/// Product of d distinct seeded linear forms x - rho y. Rsr = d.
WitnessForm witness_hyperbolic(int d, std::uint64_t seed);
WitnessForm witness_hyperbolic(const std::vector<Rational>& roots);

/// d = 2m + 1: random element of the annihilator space of a hyperbolic s of
/// degree m + 1, so Csr = Rsr = m + 1. With no s given one is drawn.
WitnessForm witness_generic_span(int d, std::uint64_t seed, const std::optional<BinaryForm>& s = std::nullopt);

/// d = 2m + 1: the point of <W> meeting <S>, certified (Csr, Rsr) = (m+1, m+2).
/// Unset w, s take the defaults from default_intersection_w/s.
WitnessForm witness_intersection(int d, const std::optional<BinaryForm>& w = std::nullopt,
                                 const std::optional<BinaryForm>& s = std::nullopt);
BinaryForm default_intersection_w(int d);
BinaryForm default_intersection_s(int d);

/// g = sum c_i L_i^d + c y^d over a rank-(d-1) hyperbolic f, Rsr(g) = d - 1.
WitnessForm witness_dminus1(int d, std::uint64_t seed, int search_trials = 50);

/// Recomputes the hypothesis checks of a witness from its form and params.
std::vector<HypothesisCheck> evaluate_checks(Provenance p, const BinaryForm& form, const WitnessParams& params);

/// Audit from the witness alone: checks, certificate evidence and the
/// certified ranks. Returns the first failing check name.
std::optional<std::string> verify_witness(const WitnessForm& w);

}  // namespace waring

#endif  // WARING_WITNESSES_HPP

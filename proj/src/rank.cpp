#include "waring/rank.hpp"

#include <algorithm>
#include <stdexcept>

#include "waring/apolarity.hpp"
#include "waring/rng.hpp"

namespace waring {

// ---------------------------------------------------------------- evidence

std::string to_string(RankEvidence::Kind k) {
    using K = RankEvidence::Kind;
    switch (k) {
        case K::kernel_trivial: return "kernel_trivial";
        case K::not_exists: return "not_exists";
        case K::hyperbolic_apolar: return "hyperbolic_apolar";
        case K::hyperbolic_self: return "hyperbolic_self";
        case K::squarefree_nonhyperbolic: return "squarefree_nonhyperbolic";
        case K::contraction_hyperbolic: return "contraction_hyperbolic";
        case K::complex_rank_bound: return "complex_rank_bound";
    }
    return "unknown";
}

RankEvidence::Kind parse_evidence_kind(const std::string& name) {
    using K = RankEvidence::Kind;
    for (K k : {K::kernel_trivial, K::not_exists, K::hyperbolic_apolar, K::hyperbolic_self, K::squarefree_nonhyperbolic,
                K::contraction_hyperbolic, K::complex_rank_bound})
        if (to_string(k) == name) return k;
    throw std::invalid_argument("unknown evidence kind: " + name);
}

int RankEvidence::lower_bound(int d) const {
    switch (kind) {
        case Kind::kernel_trivial:
        case Kind::not_exists: return degree + 1;
        case Kind::hyperbolic_self: return d;
        case Kind::contraction_hyperbolic: return d - 1;
        case Kind::complex_rank_bound: return degree;
        default: return 0;
    }
}

int RankEvidence::upper_bound(int d) const {
    switch (kind) {
        case Kind::hyperbolic_apolar: return degree;
        case Kind::hyperbolic_self: return d;
        case Kind::squarefree_nonhyperbolic: return d - 1;
        default: return d + 1;
    }
}

bool RankEvidence::theorem_backed() const {
    return kind == Kind::hyperbolic_self || kind == Kind::squarefree_nonhyperbolic ||
           kind == Kind::contraction_hyperbolic || kind == Kind::complex_rank_bound;
}

std::string RankCertificate::label() const {
    if (exact) return std::to_string(real_lo);
    return "[" + std::to_string(real_lo) + "," + std::to_string(real_hi) + "]";
}

namespace {

RankEvidence simple(RankEvidence::Kind kind, int degree = 0, int dim = 0) {
    RankEvidence e;
    e.kind = kind;
    e.degree = degree;
    e.kernel_dim = dim;
    return e;
}

RankEvidence apolar_witness(int r, BinaryForm w) {
    RankEvidence e;
    e.kind = RankEvidence::Kind::hyperbolic_apolar;
    e.degree = r;
    e.witness = std::move(w);
    return e;
}

void bounds_from_evidence(int d, const std::vector<RankEvidence>& ev, int& lo, int& hi) {
    lo = 1;
    hi = d;
    for (const auto& e : ev) {
        lo = std::max(lo, e.lower_bound(d));
        hi = std::min(hi, e.upper_bound(d));
    }
}

void finalize(RankCertificate& cert) {
    bounds_from_evidence(cert.degree, cert.evidence, cert.real_lo, cert.real_hi);
    cert.exact = cert.real_lo == cert.real_hi;
}

void require_rankable(const BinaryForm& f, const char* what) {
    if (f.is_zero()) throw std::invalid_argument(std::string(what) + ": zero form");
    if (f.degree() < 1) throw std::invalid_argument(std::string(what) + ": degree must be >= 1");
    if (!is_squarefree(f)) throw std::invalid_argument(std::string(what) + ": form is not squarefree");
}

RankCertificate start_certificate(const BinaryForm& f, const char* route) {
    RankCertificate cert;
    cert.degree = f.degree();
    cert.route = route;
    cert.complex_rank = complex_rank(f, &cert.complex_evidence);
    cert.evidence.push_back(simple(RankEvidence::Kind::complex_rank_bound, cert.complex_rank));
    return cert;
}

void add_trivial_kernels(RankCertificate& cert, const BinaryForm& f, int up_to) {
    for (int r = 1; r <= up_to; ++r) {
        if (apolar_kernel(f, r).dim() != 0) throw std::logic_error("kernel unexpectedly nonzero");
        cert.evidence.push_back(simple(RankEvidence::Kind::kernel_trivial, r));
    }
}

void add_rank_d_rule(RankCertificate& cert, const BinaryForm& f) {
    if (is_hyperbolic(f)) cert.evidence.push_back(simple(RankEvidence::Kind::hyperbolic_self));
    else if (f.degree() >= 3) cert.evidence.push_back(simple(RankEvidence::Kind::squarefree_nonhyperbolic));
}

RankCertificate fallback(const BinaryForm& f, int trials, std::uint64_t seed, const std::string& route) {
    RankCertificate cert = real_rank_bracket(f, trials, seed);
    cert.route = route + "/fallback";
    cert.nongeneric_stratum = true;
    return cert;
}

}  // namespace

// ---------------------------------------------------------------- complex rank

int complex_rank(const BinaryForm& f, ComplexRankEvidence* evidence, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("complex_rank: zero form");
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("complex_rank: degree must be >= 1");
    for (int r = 1; r <= d; ++r) {
        FormSubspace k = apolar_kernel(f, r);
        if (k.dim() == 0) continue;
        std::optional<BinaryForm> witness;
        if (k.dim() == 1) {
            if (is_squarefree(k.basis()[0])) witness = k.basis()[0];
        } else {
            BinaryForm common = k.basis()[0];
            for (const auto& b : k.basis()) common = form_gcd(common, b);
            // A repeated common factor is inherited by every element.
            if (is_squarefree(common)) {
                for (const auto& b : k.basis())
                    if (!witness && is_squarefree(b)) witness = b;
                Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
                std::vector<Rational> c(static_cast<std::size_t>(k.dim()));
                for (int attempt = 0; attempt < 64 && !witness; ++attempt) {
                    for (auto& q : c) q = rng.uniform_dyadic(20);
                    BinaryForm g = k.combination(c);
                    if (!g.is_zero() && is_squarefree(g)) witness = g;
                }
            }
        }
        const int rank = witness ? r : d - r + 2;
        if (evidence) {
            evidence->first_kernel_degree = r;
            evidence->kernel_dim = k.dim();
            evidence->squarefree_witness = witness;
        }
        return rank;
    }
    throw std::logic_error("complex_rank: no nonzero apolar kernel up to degree d");
}

// ---------------------------------------------------------------- real rank

RankCertificate real_rank_bracket(const BinaryForm& f, int trials, std::uint64_t seed) {
    require_rankable(f, "real_rank_bracket");
    RankCertificate cert = start_certificate(f, "bracket");
    add_rank_d_rule(cert, f);
    finalize(cert);
    for (int r = 1; r < cert.real_hi && cert.real_lo < cert.real_hi; ++r) {
        FormSubspace k = apolar_kernel(f, r);
        if (k.dim() == 0) {
            cert.evidence.push_back(simple(RankEvidence::Kind::kernel_trivial, r));
        } else {
            HypDecision dec = decide(k, trials, derive_seed(seed, static_cast<std::uint64_t>(r)));
            if (dec.exists()) {
                cert.evidence.push_back(apolar_witness(r, *dec.witness));
            } else if (dec.not_exists()) {
                cert.evidence.push_back(simple(RankEvidence::Kind::not_exists, r, k.dim()));
            }
        }
        finalize(cert);
    }
    // Only d = 2 gets here without an item backing the upper bound.
    const bool backed = std::any_of(cert.evidence.begin(), cert.evidence.end(),
                                    [&](const RankEvidence& e) { return e.upper_bound(cert.degree) <= cert.real_hi; });
    if (!backed) {
        const int r = cert.real_hi;
        HypDecision dec = decide(apolar_kernel(f, r), trials, derive_seed(seed, static_cast<std::uint64_t>(r)));
        if (dec.exists()) cert.evidence.push_back(apolar_witness(r, *dec.witness));
        finalize(cert);
    }
    return cert;
}

RankCertificate classify_d5(const BinaryForm& f, int trials, std::uint64_t seed) {
    if (f.degree() != 5) throw std::invalid_argument("classify_d5: degree must be 5");
    require_rankable(f, "classify_d5");
    FormSubspace k2 = apolar_kernel(f, 2);
    FormSubspace k3 = apolar_kernel(f, 3);
    if (k2.dim() != 0 || k3.dim() != 1) return fallback(f, trials, seed, "classify_d5");
    RankCertificate cert = start_certificate(f, "classify_d5");
    add_trivial_kernels(cert, f, 2);
    HypDecision dec = decide_dim1(k3.basis()[0]);
    if (dec.exists()) {
        cert.evidence.push_back(apolar_witness(3, *dec.witness));
    } else {
        cert.evidence.push_back(simple(RankEvidence::Kind::not_exists, 3, 1));
        add_rank_d_rule(cert, f);
    }
    finalize(cert);
    return cert;
}

RankCertificate classify_d6(const BinaryForm& f, int trials, std::uint64_t seed) {
    if (f.degree() != 6) throw std::invalid_argument("classify_d6: degree must be 6");
    require_rankable(f, "classify_d6");
    FormSubspace k3 = apolar_kernel(f, 3);
    FormSubspace k4 = apolar_kernel(f, 4);
    if (k3.dim() != 0 || k4.dim() != 2) return fallback(f, trials, seed, "classify_d6");
    RankCertificate cert = start_certificate(f, "classify_d6");
    add_trivial_kernels(cert, f, 3);
    HypDecision dec = decide_dim2(k4.basis()[0], k4.basis()[1]);
    if (dec.exists()) {
        cert.evidence.push_back(apolar_witness(4, *dec.witness));
    } else {
        cert.evidence.push_back(simple(RankEvidence::Kind::not_exists, 4, 2));
        add_rank_d_rule(cert, f);
    }
    finalize(cert);
    return cert;
}

RankCertificate bracket_d7(const BinaryForm& f, int trials, std::uint64_t seed) {
    if (f.degree() != 7) throw std::invalid_argument("bracket_d7: degree must be 7");
    require_rankable(f, "bracket_d7");
    if (is_hyperbolic(f)) {
        RankCertificate cert = start_certificate(f, "bracket_d7");
        add_rank_d_rule(cert, f);
        finalize(cert);
        return cert;
    }
    FormSubspace k3 = apolar_kernel(f, 3);
    FormSubspace k4 = apolar_kernel(f, 4);
    FormSubspace k5 = apolar_kernel(f, 5);
    if (k3.dim() != 0 || k4.dim() != 1 || k5.dim() != 3) return fallback(f, trials, seed, "bracket_d7");
    RankCertificate cert = start_certificate(f, "bracket_d7");
    add_trivial_kernels(cert, f, 3);
    HypDecision dec4 = decide_dim1(k4.basis()[0]);
    if (dec4.exists()) {
        cert.evidence.push_back(apolar_witness(4, *dec4.witness));
    } else {
        cert.evidence.push_back(simple(RankEvidence::Kind::not_exists, 4, 1));
        HypDecision dec5 = search_witness(k5, trials, derive_seed(seed, 5));
        if (dec5.exists()) cert.evidence.push_back(apolar_witness(5, *dec5.witness));
        else add_rank_d_rule(cert, f);
    }
    finalize(cert);
    return cert;
}

RankCertificate classify(const BinaryForm& f, int trials, std::uint64_t seed) {
    switch (f.degree()) {
        case 5: return classify_d5(f, trials, seed);
        case 6: return classify_d6(f, trials, seed);
        case 7: return bracket_d7(f, trials, seed);
        default: return real_rank_bracket(f, trials, seed);
    }
}

RankCertificate make_certificate(const BinaryForm& f, std::vector<RankEvidence> evidence, std::string route) {
    require_rankable(f, "make_certificate");
    RankCertificate cert = start_certificate(f, "");
    cert.route = std::move(route);
    for (auto& e : evidence) cert.evidence.push_back(std::move(e));
    finalize(cert);
    return cert;
}

bool attach_contraction_bound(RankCertificate& cert, const BinaryForm& f, const BinaryForm& linear) {
    if (linear.degree() != 1 || linear.is_zero()) throw std::invalid_argument("contraction bound needs a nonzero linear form");
    BinaryForm image = contract(linear, f);
    if (image.is_zero() || !is_hyperbolic(image)) return false;
    RankEvidence e;
    e.kind = RankEvidence::Kind::contraction_hyperbolic;
    e.linear = linear;
    e.image = std::move(image);
    cert.evidence.push_back(std::move(e));
    finalize(cert);
    return true;
}

// ---------------------------------------------------------------- verification

std::optional<std::string> verify_certificate(const BinaryForm& f, const RankCertificate& cert) {
    using K = RankEvidence::Kind;
    if (f.is_zero() || f.degree() < 1) return "form_nonzero";
    const int d = f.degree();
    if (cert.degree != d) return "degree_matches";
    if (!is_squarefree(f)) return "form_squarefree";

    ComplexRankEvidence cev;
    const int csr = complex_rank(f, &cev);
    if (csr != cert.complex_rank) return "complex_rank";
    if (cert.complex_evidence.first_kernel_degree != cev.first_kernel_degree) return "complex_rank_kernel_degree";
    if (const auto& w = cert.complex_evidence.squarefree_witness) {
        if (w->degree() != cev.first_kernel_degree || !contract(*w, f).is_zero() || !is_squarefree(*w))
            return "complex_rank_witness";
    }

    for (const auto& e : cert.evidence) {
        const std::string tag = to_string(e.kind) + "_r" + std::to_string(e.degree);
        switch (e.kind) {
            case K::kernel_trivial:
                if (e.degree < 1 || e.degree > d || apolar_kernel(f, e.degree).dim() != 0) return tag;
                break;
            case K::not_exists: {
                if (e.degree < 1 || e.degree > d) return tag;
                FormSubspace k = apolar_kernel(f, e.degree);
                if (k.dim() != e.kernel_dim || k.dim() > 2) return tag;
                if (!decide(k, 0, 0).not_exists()) return tag;
                break;
            }
            case K::hyperbolic_apolar:
                if (!e.witness || e.witness->degree() != e.degree || e.degree > d) return tag;
                if (!contract(*e.witness, f).is_zero() || !is_hyperbolic(*e.witness)) return tag;
                break;
            case K::hyperbolic_self:
                if (!is_hyperbolic(f)) return "hyperbolic_self";
                break;
            case K::squarefree_nonhyperbolic:
                if (d < 3 || is_hyperbolic(f)) return "squarefree_nonhyperbolic";
                break;
            case K::contraction_hyperbolic:
                if (!e.linear || !e.image || e.linear->degree() != 1 || e.linear->is_zero()) return "contraction_hyperbolic";
                if (!(contract(*e.linear, f) == *e.image) || !is_hyperbolic(*e.image)) return "contraction_hyperbolic";
                break;
            case K::complex_rank_bound:
                if (e.degree != csr) return "complex_rank_bound";
                break;
        }
    }

    int lo = 0, hi = 0;
    bounds_from_evidence(d, cert.evidence, lo, hi);
    if (lo > hi) return "evidence_consistent";
    if (cert.real_lo != lo || cert.real_hi != hi) return "real_bounds";
    if (cert.exact != (lo == hi)) return "exact_flag";
    if (cert.complex_rank > cert.real_lo) return "complex_le_real";
    return std::nullopt;
}

// ---------------------------------------------------------------- supports

bool check_union_bound(const PointSetForm& a, const PointSetForm& b, int d) {
    if (a.form.proportional_to(b.form)) return true;
    const int lcm_degree = a.degree() + b.degree() - form_gcd(a.form, b.form).degree();
    return lcm_degree >= d + 2;
}

}  // namespace waring

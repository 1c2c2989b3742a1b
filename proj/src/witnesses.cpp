#include "waring/witnesses.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "waring/apolarity.hpp"
#include "waring/matrix.hpp"
#include "waring/rng.hpp"

namespace waring {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::hyperbolic_d: return "hyperbolic_d";
        case Provenance::generic_span: return "generic_span";
        case Provenance::intersection: return "intersection";
        case Provenance::dminus1_family: return "dminus1_family";
    }
    return "unknown";
}

Provenance parse_provenance(const std::string& name) {
    for (Provenance p : {Provenance::hyperbolic_d, Provenance::generic_span, Provenance::intersection,
                         Provenance::dminus1_family})
        if (to_string(p) == name) return p;
    throw std::invalid_argument("unknown provenance: " + name);
}

namespace {

BinaryForm one() { return BinaryForm::from_monomial({Rational(1)}); }

BinaryForm product_of_roots(const std::vector<Rational>& roots) {
    BinaryForm p = one();
    for (const auto& r : roots) p = p * ProjectivePoint::affine(r).vanishing_form();
    return p;
}

// `count` distinct values k / denom with k in [-range, range], sorted.
std::vector<Rational> distinct_rationals(Rng& rng, int count, std::int64_t range, long denom) {
    std::set<std::int64_t> picked;
    while (static_cast<int>(picked.size()) < count) picked.insert(rng.uniform_int(-range, range));
    std::vector<Rational> out;
    for (auto k : picked) {
        Rational q(static_cast<long>(k), denom);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

bool all_distinct(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

RankEvidence evidence(RankEvidence::Kind kind, int degree = 0, int dim = 0) {
    RankEvidence e;
    e.kind = kind;
    e.degree = degree;
    e.kernel_dim = dim;
    return e;
}

RankEvidence witness_evidence(int r, const BinaryForm& w) {
    RankEvidence e = evidence(RankEvidence::Kind::hyperbolic_apolar, r);
    e.witness = w;
    return e;
}

// Evaluates a check, treating any thrown error as a failed hypothesis.
void run(std::vector<HypothesisCheck>& out, const std::string& name, const std::function<bool()>& test) {
    bool value = false;
    try {
        value = test();
    } catch (const std::exception&) {
        value = false;
    }
    out.push_back({name, value});
}

std::optional<std::string> first_failure(const std::vector<HypothesisCheck>& checks) {
    for (const auto& c : checks)
        if (!c.value) return c.name;
    return std::nullopt;
}

bool kernels_trivial_up_to(const BinaryForm& f, int m) {
    for (int r = 1; r <= m; ++r)
        if (apolar_kernel(f, r).dim() != 0) return false;
    return true;
}

int half_degree(int d) {
    if (d < 5 || d % 2 == 0) throw std::invalid_argument("degree must be odd and at least 5");
    return (d - 1) / 2;
}

BinaryForm dminus1_base(const std::vector<Rational>& points, const std::vector<Rational>& coefficients, int degree) {
    BinaryForm sum = BinaryForm::from_monomial(std::vector<Rational>(static_cast<std::size_t>(degree) + 1));
    for (std::size_t i = 0; i < points.size(); ++i) sum = sum + coefficients[i] * BinaryForm::pure_power(1, points[i], degree);
    return sum;
}

Rational eta_bound(const Poly& u, const Rational& T) {
    Rational eta = 0, power = 1;
    for (const auto& a : u.coeffs()) {
        eta += abs(a) * power;
        power *= T;
    }
    return eta;
}

BinaryForm intersection_point(const BinaryForm& w, const BinaryForm& s, int d, std::size_t* kernel_dim) {
    ExactMatrix rows = annihilator_rows(w, d);
    rows.append_rows(annihilator_rows(s, d));
    auto kb = kernel_basis(rows);
    if (kernel_dim) *kernel_dim = kb.size();
    if (kb.empty()) return BinaryForm();
    return BinaryForm::from_normalized(kb[0]);
}

}  // namespace

// ---------------------------------------------------------------- checks

std::vector<HypothesisCheck> evaluate_checks(Provenance p, const BinaryForm& form, const WitnessParams& params) {
    std::vector<HypothesisCheck> out;
    const int d = form.degree();
    switch (p) {
        case Provenance::hyperbolic_d:
            run(out, "roots_distinct", [&] { return static_cast<int>(params.roots.size()) == d && all_distinct(params.roots); });
            run(out, "form_matches_roots", [&] { return product_of_roots(params.roots) == form; });
            run(out, "form_hyperbolic", [&] { return is_hyperbolic(form); });
            break;

        case Provenance::generic_span: {
            const int m = (d - 1) / 2;
            run(out, "form_matches_params", [&] {
                FormSubspace space = annihilator_space(PointSetForm::from_form(*params.s), d);
                return space.combination(params.combination) == form;
            });
            run(out, "kernels_trivial_below_m_plus_1", [&] { return kernels_trivial_up_to(form, m); });
            run(out, "s_apolar", [&] { return params.s->degree() == m + 1 && contract(*params.s, form).is_zero(); });
            run(out, "s_hyperbolic", [&] { return is_hyperbolic(*params.s); });
            break;
        }

        case Provenance::intersection: {
            const int m = (d - 1) / 2;
            run(out, "system_kernel_is_form", [&] {
                std::size_t dim = 0;
                BinaryForm q = intersection_point(*params.w, *params.s, d, &dim);
                return dim == 1 && q.proportional_to(form);
            });
            run(out, "kernels_trivial_below_m_plus_1", [&] { return kernels_trivial_up_to(form, m); });
            run(out, "kernel_m_plus_1_is_w", [&] {
                FormSubspace k = apolar_kernel(form, m + 1);
                return k.dim() == 1 && k.contains(*params.w) && is_squarefree(*params.w);
            });
            run(out, "w_not_hyperbolic", [&] { return params.w->degree() == m + 1 && !is_hyperbolic(*params.w); });
            run(out, "s_apolar", [&] { return params.s->degree() == m + 2 && contract(*params.s, form).is_zero(); });
            run(out, "s_hyperbolic", [&] { return is_hyperbolic(*params.s); });
            break;
        }

        case Provenance::dminus1_family: {
            const int n = d - 1;
            run(out, "f_hyperbolic", [&] { return params.f->degree() == n && is_hyperbolic(*params.f); });
            run(out, "decomposition_reproduces_f", [&] {
                if (static_cast<int>(params.points.size()) != n || params.coefficients.size() != params.points.size())
                    return false;
                if (!all_distinct(params.points)) return false;
                for (const auto& c : params.coefficients)
                    if (c == 0) return false;
                return dminus1_base(params.points, params.coefficients, n) == *params.f;
            });
            run(out, "form_matches_params", [&] {
                BinaryForm g = dminus1_base(params.points, params.coefficients, d) + *params.c * BinaryForm::pure_power(0, 1, d);
                return g == form;
            });
            run(out, "threshold_c_exceeds_eta", [&] {
                Poly u = dminus1_base(params.points, params.coefficients, d).dehomogenize();
                const Rational T = 1 + cauchy_bound(u.derivative());
                return T == *params.T && eta_bound(u, T) == *params.eta_hat && *params.c > *params.eta_hat;
            });
            run(out, "threshold_sturm_le_2", [&] { return sturm_count(form.dehomogenize()) <= 2; });
            run(out, "g_squarefree", [&] { return discriminant(form) != 0; });
            run(out, "g_not_hyperbolic", [&] { return !is_hyperbolic(form); });
            run(out, "contraction_by_x_is_f", [&] { return contract(BinaryForm::linear(1, 0), form) == *params.f; });
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------- constructors

WitnessForm witness_hyperbolic(const std::vector<Rational>& roots) {
    if (roots.size() < 3) throw std::invalid_argument("witness_hyperbolic: degree must be at least 3");
    if (!all_distinct(roots)) throw std::invalid_argument("witness_hyperbolic: roots must be distinct");
    WitnessForm out;
    out.provenance = Provenance::hyperbolic_d;
    out.form = product_of_roots(roots);
    out.params.roots = roots;
    out.checks = evaluate_checks(out.provenance, out.form, out.params);
    if (auto bad = first_failure(out.checks)) throw HypothesisFailure(*bad);
    out.certificate = real_rank_bracket(out.form);
    out.certificate.route = "witness_hyperbolic";
    out.certified_complex_rank = out.certificate.complex_rank;
    out.certified_real_rank = out.form.degree();
    return out;
}

WitnessForm witness_hyperbolic(int d, std::uint64_t seed) {
    if (d < 3) throw std::invalid_argument("witness_hyperbolic: degree must be at least 3");
    Rng rng(seed);
    WitnessForm out = witness_hyperbolic(distinct_rationals(rng, d, 64, 16));
    out.params.seed = seed;
    return out;
}

WitnessForm witness_generic_span(int d, std::uint64_t seed, const std::optional<BinaryForm>& s) {
    const int m = half_degree(d);
    if (s && s->degree() != m + 1) throw std::invalid_argument("witness_generic_span: s must have degree m + 1");
    std::string last_failure = "no_attempt";
    for (std::uint64_t attempt = 0; attempt < 10; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        WitnessForm out;
        out.provenance = Provenance::generic_span;
        out.params.seed = seed;
        out.params.s = s ? *s : product_of_roots(distinct_rationals(rng, m + 1, 16, 4));
        FormSubspace space = annihilator_space(PointSetForm::from_form(*out.params.s), d);
        for (int k = 0; k < space.dim(); ++k) out.params.combination.push_back(rng.nonzero_dyadic(8));
        out.form = space.combination(out.params.combination);
        if (out.form.is_zero() || !is_squarefree(out.form)) {
            last_failure = "form_squarefree";
            continue;
        }
        out.checks = evaluate_checks(out.provenance, out.form, out.params);
        if (auto bad = first_failure(out.checks)) {
            last_failure = *bad;
            continue;
        }
        std::vector<RankEvidence> ev;
        for (int r = 1; r <= m; ++r) ev.push_back(evidence(RankEvidence::Kind::kernel_trivial, r));
        ev.push_back(witness_evidence(m + 1, *out.params.s));
        out.certificate = make_certificate(out.form, std::move(ev), "witness_generic_span");
        out.certified_complex_rank = m + 1;
        out.certified_real_rank = m + 1;
        return out;
    }
    throw HypothesisFailure(last_failure);
}

BinaryForm default_intersection_w(int d) {
    const int m = half_degree(d);
    std::vector<Rational> roots{Rational(0)};
    for (int k = 0; static_cast<int>(roots.size()) < m - 1; ++k) roots.push_back(Rational(2 * k + 1, 2));
    roots.resize(static_cast<std::size_t>(m - 1));
    return make_pointset({}, {{Rational(0), Rational(1)}}).form * product_of_roots(roots);
}

BinaryForm default_intersection_s(int d) {
    const int m = half_degree(d);
    std::vector<Rational> roots;
    for (int k = 1; static_cast<int>(roots.size()) < m + 2; ++k) {
        roots.push_back(Rational(k));
        roots.push_back(Rational(-k));
    }
    roots.resize(static_cast<std::size_t>(m + 2));
    return product_of_roots(roots);
}

WitnessForm witness_intersection(int d, const std::optional<BinaryForm>& w_in, const std::optional<BinaryForm>& s_in) {
    const int m = half_degree(d);
    const BinaryForm w = w_in ? *w_in : default_intersection_w(d);
    const BinaryForm s = s_in ? *s_in : default_intersection_s(d);
    if (w.is_zero() || w.degree() != m + 1) throw std::invalid_argument("witness_intersection: w must have degree m + 1");
    if (s.is_zero() || s.degree() != m + 2) throw std::invalid_argument("witness_intersection: s must have degree m + 2");
    if (!is_squarefree(w) || !is_squarefree(s)) throw std::invalid_argument("witness_intersection: w and s must be squarefree");
    if (form_gcd(w, s).degree() != 0) throw std::invalid_argument("witness_intersection: w and s must be coprime");

    WitnessForm out;
    out.provenance = Provenance::intersection;
    out.params.w = w;
    out.params.s = s;
    std::size_t dim = 0;
    BinaryForm q = intersection_point(w, s, d, &dim);
    if (dim != 1) throw HypothesisFailure("system_kernel_is_form");
    out.form = q.scaled_to_unit_max();
    out.checks = evaluate_checks(out.provenance, out.form, out.params);
    if (auto bad = first_failure(out.checks)) throw HypothesisFailure(*bad);

    std::vector<RankEvidence> ev;
    for (int r = 1; r <= m; ++r) ev.push_back(evidence(RankEvidence::Kind::kernel_trivial, r));
    ev.push_back(evidence(RankEvidence::Kind::not_exists, m + 1, 1));
    ev.push_back(witness_evidence(m + 2, s));
    out.certificate = make_certificate(out.form, std::move(ev), "witness_intersection");
    out.certified_complex_rank = m + 1;
    out.certified_real_rank = m + 2;
    return out;
}

WitnessForm witness_dminus1(int d, std::uint64_t seed, int search_trials) {
    if (d < 5) throw std::invalid_argument("witness_dminus1: degree must be at least 5");
    const int n = d - 1;
    for (std::uint64_t attempt = 0; attempt < 50; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        const BinaryForm f = product_of_roots(distinct_rationals(rng, n, 32, 8));

        // n - 1 free points; the last one is linear in the apolarity condition.
        std::vector<Rational> t = distinct_rationals(rng, n - 1, 16, 4);
        BinaryForm partial = one();
        for (const auto& ti : t) partial = partial * ProjectivePoint(1, ti).vanishing_form();
        const Rational num = contract(BinaryForm::linear(0, 1) * partial, f).normalized_coeff(0);
        const Rational den = contract(BinaryForm::linear(1, 0) * partial, f).normalized_coeff(0);
        if (den == 0) continue;
        const Rational last = num / den;
        if (std::find(t.begin(), t.end(), last) != t.end()) continue;
        t.push_back(last);

        ExactMatrix m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n));
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < n; ++i) m.at(j, i) = pow(t[i], static_cast<unsigned>(n - j));
        auto c = solve(m, f.normalized());
        if (!c) continue;
        Rational total = 0;
        bool zero = false;
        for (const auto& ci : *c) {
            zero = zero || ci == 0;
            total += ci;
        }
        if (zero || total == 0) continue;

        const BinaryForm base = dminus1_base(t, *c, d);
        const Poly u = base.dehomogenize();
        const Rational T = 1 + cauchy_bound(u.derivative());
        const Rational eta = eta_bound(u, T);
        Rational shift = eta + 1;
        BinaryForm g = base + shift * BinaryForm::pure_power(0, 1, d);
        for (int bump = 0; bump < 100 && discriminant(g) == 0; ++bump) {
            shift += 1;
            g = base + shift * BinaryForm::pure_power(0, 1, d);
        }
        if (discriminant(g) == 0) continue;

        WitnessForm out;
        out.provenance = Provenance::dminus1_family;
        out.form = g;
        out.params.seed = seed;
        out.params.f = f;
        out.params.points = t;
        out.params.coefficients = *c;
        out.params.c = shift;
        out.params.T = T;
        out.params.eta_hat = eta;
        out.checks = evaluate_checks(out.provenance, out.form, out.params);
        if (auto bad = first_failure(out.checks)) throw HypothesisFailure(*bad);

        std::vector<RankEvidence> ev;
        RankEvidence proj = evidence(RankEvidence::Kind::contraction_hyperbolic);
        proj.linear = BinaryForm::linear(1, 0);
        proj.image = f;
        ev.push_back(std::move(proj));
        ev.push_back(evidence(RankEvidence::Kind::squarefree_nonhyperbolic));
        if (search_trials > 0) {
            HypDecision found = search_witness(apolar_kernel(g, n), search_trials, derive_seed(seed, 1000));
            if (found.exists()) ev.push_back(witness_evidence(n, *found.witness));
        }
        out.certificate = make_certificate(g, std::move(ev), "witness_dminus1");
        out.certified_complex_rank = out.certificate.complex_rank;
        out.certified_real_rank = n;
        return out;
    }
    throw HypothesisFailure("dminus1_construction_retries");
}

// ---------------------------------------------------------------- audit

std::optional<std::string> verify_witness(const WitnessForm& w) {
    if (w.form.is_zero()) return "form_nonzero";
    const int d = w.form.degree();
    auto fresh = evaluate_checks(w.provenance, w.form, w.params);
    if (auto bad = first_failure(fresh)) return *bad;
    if (fresh != w.checks) return "recorded_checks";
    if (auto bad = verify_certificate(w.form, w.certificate)) return "certificate:" + *bad;

    int want_complex = w.certificate.complex_rank;
    int want_real = 0;
    switch (w.provenance) {
        case Provenance::hyperbolic_d: want_real = d; break;
        case Provenance::generic_span: want_complex = want_real = (d - 1) / 2 + 1; break;
        case Provenance::intersection:
            want_complex = (d - 1) / 2 + 1;
            want_real = want_complex + 1;
            break;
        case Provenance::dminus1_family: want_real = d - 1; break;
    }
    const auto& cert = w.certificate;
    if (!cert.exact || cert.real_lo != want_real || cert.complex_rank != want_complex) return "certified_rank";
    if (w.certified_real_rank != want_real || w.certified_complex_rank != want_complex) return "certified_rank";
    return std::nullopt;
}

}  // namespace waring

#include "doctest.h"
#include "helpers.hpp"
#include "waring/census.hpp"
#include "waring/json_io.hpp"
#include "waring/witnesses.hpp"

using namespace waring;
using th::mono;

namespace {

void check_witness(const WitnessForm& w) {
    for (const auto& c : w.checks) CHECK_MESSAGE(c.value, c.name);
    CHECK(evaluate_checks(w.provenance, w.form, w.params) == w.checks);
    auto bad = verify_witness(w);
    CHECK_MESSAGE(!bad.has_value(), (bad ? *bad : std::string()));
    CHECK(w.certificate.exact);
    CHECK(w.certificate.real_lo == w.certified_real_rank);
    CHECK(w.certificate.complex_rank == w.certified_complex_rank);
    CHECK(w.certified_complex_rank <= w.certified_real_rank);
    // serialized form audits the same way
    WitnessForm back = witness_from_json(parse_json(witness_to_json(w).dump()));
    CHECK(back.form == w.form);
    CHECK_FALSE(verify_witness(back).has_value());
}

bool has_check(const WitnessForm& w, const std::string& name) {
    for (const auto& c : w.checks)
        if (c.name == name) return c.value;
    return false;
}

}  // namespace

TEST_CASE("witness_hyperbolic") {
    WitnessForm a = witness_hyperbolic({1, 2, 3, 4, 5});
    CHECK(a.certified_real_rank == 5);
    check_witness(a);

    WitnessForm b = witness_hyperbolic({0, 1, -1});
    CHECK(b.form.proportional_to(mono({0, -1, 0, 1})));
    CHECK(b.certified_real_rank == 3);
    CHECK(b.certified_complex_rank == 2);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        WitnessForm w = witness_hyperbolic(3 + static_cast<int>(seed % 6), seed);
        CHECK(is_hyperbolic(w.form));
        check_witness(w);
    }
    CHECK_THROWS_AS(witness_hyperbolic({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(witness_hyperbolic(2, 0), std::invalid_argument);
}

TEST_CASE("witness_generic_span") {
    WitnessForm a = witness_generic_span(5, 0, th::from_roots({1, 2, 3}));
    CHECK(a.certified_complex_rank == 3);
    CHECK(a.certified_real_rank == 3);
    check_witness(a);
    CHECK(classify_d5(a.form).label() == "3");

    WitnessForm b = witness_generic_span(7, 4);
    CHECK(b.certified_complex_rank == 4);
    CHECK(b.certified_real_rank == 4);
    check_witness(b);
    CHECK(bracket_d7(b.form).label() == "4");

    CHECK_THROWS_AS(witness_generic_span(6, 0), std::invalid_argument);
    CHECK_THROWS_AS(witness_generic_span(5, 0, th::from_roots({1, 2})), std::invalid_argument);
}

TEST_CASE("witness_intersection") {
    PointSetForm w = make_pointset({ProjectivePoint(0, 1)}, {{Rational(0), Rational(1)}});
    WitnessForm a = witness_intersection(5, w.form, th::from_roots({1, -1, 2, -2}));
    CHECK(a.certified_complex_rank == 3);
    CHECK(a.certified_real_rank == 4);
    CHECK(a.checks.size() == 6);
    CHECK(has_check(a, "w_not_hyperbolic"));
    check_witness(a);
    CHECK(classify_d5(a.form).label() == "4");

    BinaryForm w7 = th::from_roots({1, 2}) * th::circle();
    WitnessForm b = witness_intersection(7, w7, th::from_roots({-1, -2, -3, 3, 5}));
    CHECK(b.certified_complex_rank == 4);
    CHECK(b.certified_real_rank == 5);
    check_witness(b);

    for (int d : {5, 7, 9}) {
        WitnessForm q = witness_intersection(d);
        const int m = (d - 1) / 2;
        CHECK(q.certified_complex_rank == m + 1);
        CHECK(q.certified_real_rank == m + 2);
        check_witness(q);
    }

    CHECK_THROWS_AS(witness_intersection(6), std::invalid_argument);
    // hyperbolic w: the real rank drops, so the construction must refuse
    CHECK_THROWS_AS(witness_intersection(5, th::from_roots({4, 5, 6}), th::from_roots({1, -1, 2, -2})),
                    HypothesisFailure);
    CHECK_THROWS_AS(witness_intersection(5, th::from_roots({1, 5}) * BinaryForm::linear(1, 0), th::from_roots({1, -1, 2, -2})),
                    std::invalid_argument);
}

TEST_CASE("witness_dminus1") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        WitnessForm g = witness_dminus1(6, seed);
        CHECK(g.certified_real_rank == 5);
        CHECK(has_check(g, "threshold_sturm_le_2"));
        check_witness(g);
        CHECK(classify_d6(g.form).label() == "5");
    }
    WitnessForm g7 = witness_dminus1(7, 2);
    CHECK(g7.certified_real_rank == 6);
    check_witness(g7);

    // threshold sanity, recomputed here: u + c has at most two real roots
    WitnessForm g = witness_dminus1(5, 9);
    BinaryForm u = BinaryForm::from_monomial(std::vector<Rational>(6, Rational(0)));
    for (std::size_t i = 0; i < g.params.points.size(); ++i)
        u = u + g.params.coefficients[i] * BinaryForm::pure_power(1, g.params.points[i], 5);
    Poly shifted = u.dehomogenize() + Poly::constant(*g.params.c);
    CHECK(sturm_count(shifted) <= 2);
    CHECK(*g.params.c > *g.params.eta_hat);

    CHECK_THROWS_AS(witness_dminus1(4, 0), std::invalid_argument);
}

TEST_CASE("tampered witnesses are caught") {
    WitnessForm q = witness_intersection(5);
    WitnessForm edited = q;
    std::vector<Rational> p = edited.form.monomial();
    p[2] += 1;
    edited.form = BinaryForm::from_monomial(p);
    CHECK(verify_witness(edited).has_value());

    WitnessForm lied = q;
    lied.certified_real_rank = 3;
    CHECK(verify_witness(lied).has_value());

    WitnessForm flipped = q;
    flipped.checks[0].value = false;
    CHECK(verify_witness(flipped).has_value());
}

TEST_CASE("witness families are stable under small perturbation") {
    const Rational eps(1, 65536);
    CHECK(stability_probe(witness_hyperbolic(5, 1).form, witness_hyperbolic(5, 1).certificate, eps, 5, 1));
    WitnessForm q = witness_intersection(5);
    CHECK(stability_probe(q.form, q.certificate, eps, 5, 2));
    WitnessForm g = witness_dminus1(6, 1);
    CHECK(stability_probe(g.form, g.certificate, eps, 5, 3));
}

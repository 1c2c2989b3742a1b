#include "doctest.h"
#include "helpers.hpp"
#include "oracle/pencil_scan.hpp"
#include "waring/hypdecide.hpp"
#include "waring/rng.hpp"

using namespace waring;
using th::mono;

namespace {

using V = HypDecision::Verdict;

std::pair<BinaryForm, BinaryForm> random_pencil(int r, std::uint64_t seed) {
    BinaryForm g1 = random_form(r, Distribution::uniform_rational, derive_seed(seed, 1), 8);
    BinaryForm g2 = random_form(r, Distribution::uniform_rational, derive_seed(seed, 2), 8);
    return {g1, g2};
}

void check_sound(const HypDecision& h, const FormSubspace& space) {
    if (!h.exists()) {
        CHECK_FALSE(h.witness.has_value());
        return;
    }
    REQUIRE(h.witness.has_value());
    CHECK(space.contains(*h.witness));
    CHECK(is_hyperbolic(*h.witness));
}

}  // namespace

TEST_CASE("decide_dim1") {
    HypDecision a = decide_dim1(mono({0, -1, 0, 1}));
    CHECK(a.verdict == V::exists);
    CHECK(a.exactness == HypDecision::Exactness::exact);
    CHECK(*a.witness == mono({0, -1, 0, 1}));

    CHECK(decide_dim1(mono({0, 1, 0, 1})).verdict == V::not_exists);
    CHECK(decide_dim1(mono({0, 0, 1, 0})).verdict == V::not_exists);
    CHECK(decide_dim1(mono({0, 0, 1, 0})).exactness == HypDecision::Exactness::exact);
    CHECK_THROWS_AS(decide_dim1(mono({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("decide_dim2 examples") {
    BinaryForm g1 = th::from_roots({1, -1, 2, -2});
    HypDecision a = decide_dim2(g1, mono({1, 0, 0, 0, 1}));
    CHECK(a.verdict == V::exists);
    CHECK(*a.witness == g1);

    BinaryForm c2 = th::circle() * th::circle();
    BinaryForm cy = th::circle() * mono({1, 0, 0});
    HypDecision b = decide_dim2(c2, cy);
    CHECK(b.verdict == V::not_exists);
    CHECK(b.exactness == HypDecision::Exactness::exact);
    oracle::ScanResult scan = oracle::scan_pencil(c2, cy, 10000);
    CHECK_FALSE(scan.hit.has_value());
    for (int k = -5; k <= 5; ++k) {
        BinaryForm g = c2 + Rational(k) * cy;
        CHECK(form_gcd(g, th::circle()).degree() == 2);
    }

    CHECK_THROWS_AS(decide_dim2(g1, Rational(3) * g1), std::invalid_argument);
    CHECK_THROWS_AS(decide_dim2(g1, th::circle()), std::invalid_argument);
}

TEST_CASE("decide_dim2 tests t = infinity and degree drops") {
    // x^2 - y^2 sits at t = infinity.
    HypDecision a = decide_dim2(th::circle(), mono({-1, 0, 1}));
    REQUIRE(a.exists());
    CHECK(is_hyperbolic(*a.witness));

    // (1 - t) x^2 + t xy + y^2 drops degree at t = 1
    BinaryForm g1 = mono({1, 0, 1});
    BinaryForm g2 = mono({0, 1, -1});
    HypDecision b = decide_dim2(g1, g2);
    REQUIRE(b.exists());
    CHECK(FormSubspace(2, {g1, g2}).contains(*b.witness));
}

TEST_CASE("decide_dim2 agrees with a brute-force scan on random quartic pencils") {
    int exists = 0, not_exists = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto [g1, g2] = random_pencil(4, seed);
        HypDecision h = decide_dim2(g1, g2);
        check_sound(h, FormSubspace(4, {g1, g2}));
        CHECK(h.verdict != V::unknown);
        oracle::ScanResult scan = oracle::scan_pencil(g1, g2, 20000);
        if (scan.hit) CHECK(h.exists());
        if (h.not_exists()) CHECK_FALSE(scan.hit.has_value());
        (h.exists() ? exists : not_exists)++;
    }
    MESSAGE("exists " << exists << ", not_exists " << not_exists);
    CHECK(exists > 0);
    CHECK(not_exists > 0);
}

TEST_CASE("real root count is constant between consecutive roots of D l") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        auto [g1, g2] = random_pencil(4, seed);
        const int r = g1.degree();
        Poly ell({g1.monomial_coeff(r), g2.monomial_coeff(r)});
        Poly dl = pencil_discriminant(g1, g2) * ell;
        std::vector<RootInterval> roots = isolate_real_roots(dl);

        std::vector<std::pair<Rational, Rational>> gaps;
        const Rational far = 1000;
        if (roots.empty()) {
            gaps.push_back({-far, far});
        } else {
            gaps.push_back({roots.front().lo - far, roots.front().lo});
            for (std::size_t i = 0; i + 1 < roots.size(); ++i) gaps.push_back({roots[i].hi, roots[i + 1].lo});
            gaps.push_back({roots.back().hi, roots.back().hi + far});
        }
        for (const auto& [lo, hi] : gaps) {
            int count = -1;
            for (int k = 1; k <= 10; ++k) {
                Rational t = lo + (hi - lo) * Rational(k, 11);
                t.canonicalize();
                int c = sturm_count(g1 + t * g2);
                if (count < 0) count = c;
                CHECK(c == count);
            }
        }
    }
}

TEST_CASE("decide_dim2 when the degree drop sits at t = 0") {
    // x^4 coefficient of g1 is zero, and an isolating interval of D used to
    // end exactly at 0, leaving the gap next to it unsampled.
    BinaryForm g1 = BinaryForm::from_monomial({th::q("-607401241646181787"), th::q("21319957606046983"),
                          th::q("2565371206327225848"), th::q("2611593328049054879"), Rational(0)});
    BinaryForm g2 = BinaryForm::from_monomial({th::q("1173848401636188748"), th::q("-940782248378681305"),
                          th::q("-2064830342620985668"), Rational(0), th::q("2611593328049054879")});
    oracle::ScanResult scan = oracle::scan_pencil(g1, g2, 20000);
    REQUIRE(scan.hit.has_value());
    HypDecision h = decide_dim2(g1, g2);
    REQUIRE(h.exists());
    CHECK(is_hyperbolic(*h.witness));
    CHECK(FormSubspace(4, {g1, g2}).contains(*h.witness));
}

TEST_CASE("pencil_samples start at zero") {
    BinaryForm g1 = th::circle() * mono({-1, 0, 1});
    BinaryForm g2 = mono({0, 0, 1, 0, 0});
    std::vector<Rational> t = pencil_samples(g1, g2);
    REQUIRE_FALSE(t.empty());
    CHECK(t.front() == 0);
}

TEST_CASE("search_witness") {
    BinaryForm hyp = th::from_roots({1, 2, 3, 4});
    FormSubspace with_hyp(4, {hyp, th::circle() * th::circle()});
    HypDecision a = search_witness(with_hyp, 1, 0);
    CHECK(a.exists());
    CHECK(*a.witness == hyp);
    CHECK(a.trials_used <= 1);

    BinaryForm c = th::circle();
    FormSubspace divisible(4, {c * c, c * mono({0, 1, 0}), c * mono({1, 0, 0})});
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        HypDecision b = search_witness(divisible, 30, seed);
        CHECK(b.verdict == V::unknown);
        CHECK(b.exactness == HypDecision::Exactness::search_only);
    }
    CHECK_THROWS_AS(search_witness(FormSubspace(3, {}), 10, 0), std::invalid_argument);
}

TEST_CASE("search_witness on septic kernels at r = 5") {
    int hits = 0, total = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        BinaryForm f = random_form(7, Distribution::uniform_normalized, seed);
        FormSubspace k = apolar_kernel(f, 5);
        REQUIRE(k.dim() == 3);
        HypDecision h = search_witness(k, 100, seed);
        check_sound(h, k);
        CHECK(h.verdict != V::not_exists);
        ++total;
        if (h.exists()) ++hits;
    }
    MESSAGE("r=5 search hit rate " << hits << "/" << total);
    CHECK(hits > 0);
}

TEST_CASE("decide dispatch and determinism") {
    CHECK(decide(FormSubspace(3, {}), 10, 0).verdict == V::not_exists);
    HypDecision line = decide(FormSubspace(3, {mono({0, -1, 0, 1})}), 10, 0);
    CHECK(line.verdict == V::exists);
    CHECK(line.exactness == HypDecision::Exactness::exact);

    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        BinaryForm f = random_form(7, Distribution::uniform_normalized, seed + 50);
        FormSubspace k = apolar_kernel(f, 5);
        HypDecision a = decide(k, 20, seed), b = decide(k, 20, seed);
        CHECK(a.verdict != V::not_exists);
        CHECK(a.verdict == b.verdict);
        CHECK(a.trials_used == b.trials_used);
        CHECK(a.witness == b.witness);
    }
}

#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "waring/apolarity.hpp"
#include "waring/rng.hpp"

using namespace waring;
using th::mono;
using th::q;

namespace {

ExactMatrix matrix_of(std::initializer_list<std::initializer_list<Rational>> rows) {
    ExactMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (const auto& v : r) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

BinaryForm random_of_degree(int d, Rng& rng) {
    std::vector<Rational> p;
    for (int i = 0; i <= d; ++i) p.push_back(rng.uniform_dyadic(8));
    return BinaryForm::from_monomial(std::move(p));
}

}  // namespace

TEST_CASE("catalecticant") {
    CHECK(catalecticant(th::circle(), 1) == matrix_of({{1, 0}, {0, 1}}));
    CHECK(catalecticant(mono({0, 0, 1, 0}), 2) == matrix_of({{0, 0, q("1/3")}, {0, q("1/3"), 0}}));
    for (int r = 1; r <= 5; ++r) CHECK(rank(catalecticant(BinaryForm::pure_power(3, -2, 5), r)) == 1);
    CHECK_THROWS_AS(catalecticant(th::circle(), 3), std::invalid_argument);
    CHECK_THROWS_AS(catalecticant(th::circle(), 0), std::invalid_argument);
}

TEST_CASE("kernel") {
    CHECK(kernel(matrix_of({{1, 0}, {0, 1}})).dim() == 0);

    // (x - 2y)^3 = L^3 with L = x - 2y; the kernel line vanishes at (1 : -2).
    FormSubspace k = kernel(catalecticant(BinaryForm::pure_power(1, -2, 3), 1));
    REQUIRE(k.dim() == 1);
    CHECK(k.basis()[0].evaluate(1, -2) == 0);
    CHECK(k.basis()[0].proportional_to(BinaryForm::linear(2, 1)));

    FormSubspace k2 = kernel(catalecticant(mono({0, 0, 1, 0}), 2));
    REQUIRE(k2.dim() == 1);
    CHECK(k2.basis()[0].proportional_to(mono({1, 0, 0})));  // y^2
    CHECK_FALSE(is_squarefree(k2.basis()[0]));
}

TEST_CASE("contract") {
    // h(alpha, beta) = 0 kills (alpha x + beta y)^d
    CHECK(contract(BinaryForm::linear(2, 1), BinaryForm::pure_power(1, -2, 3)).is_zero());
    CHECK_FALSE(contract(BinaryForm::linear(1, -2), BinaryForm::pure_power(1, -2, 3)).is_zero());

    BinaryForm c = contract(mono({1, 0, 0}), mono({0, 0, 1, 0}));
    CHECK(c.degree() == 1);
    CHECK(c.is_zero());

    Rng rng(11);
    for (int t = 0; t < 10; ++t) {
        BinaryForm h = random_of_degree(4, rng), f = random_of_degree(4, rng);
        BinaryForm full = contract(h, f);
        CHECK(full.degree() == 0);
        Rational pairing = 0;
        for (int k = 0; k <= 4; ++k) pairing += h.monomial_coeff(k) * f.normalized_coeff(k);
        CHECK(full.normalized_coeff(0) == pairing);
        CHECK(pairing != 0);
    }
    CHECK_THROWS_AS(contract(mono({1, 0, 0, 0}), th::circle()), std::invalid_argument);
}

TEST_CASE("contract is bilinear") {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        BinaryForm h1 = random_of_degree(3, rng), h2 = random_of_degree(3, rng);
        BinaryForm f1 = random_of_degree(6, rng), f2 = random_of_degree(6, rng);
        Rational s = rng.uniform_dyadic(6), u = rng.uniform_dyadic(6);
        CHECK(contract(s * h1 + u * h2, f1) == s * contract(h1, f1) + u * contract(h2, f1));
        CHECK(contract(h1, s * f1 + u * f2) == s * contract(h1, f1) + u * contract(h1, f2));
    }
}

TEST_CASE("root correspondence pins the convention") {
    Rng rng(2024);
    for (int t = 0; t < 60; ++t) {
        const int s = 1 + static_cast<int>(rng.uniform_int(0, 4));
        const int d = std::max(s, 2) + static_cast<int>(rng.uniform_int(0, 8 - std::max(s, 2)));
        std::vector<Rational> pts;
        while (static_cast<int>(pts.size()) < s) {
            Rational a = Rational(rng.uniform_int(-20, 20)) / 4;
            if (std::find(pts.begin(), pts.end(), a) == pts.end()) pts.push_back(a);
        }
        // Include the point at infinity now and then.
        const bool with_inf = t % 5 == 0 && s < d;
        BinaryForm f = BinaryForm::from_monomial(std::vector<Rational>(static_cast<std::size_t>(d) + 1, Rational(0)));
        BinaryForm w = BinaryForm::from_monomial({Rational(1)});
        for (const auto& a : pts) {
            f = f + rng.nonzero_dyadic(6) * BinaryForm::pure_power(a, 1, d);
            w = w * ProjectivePoint(a, 1).vanishing_form();
        }
        if (with_inf) {
            f = f + rng.nonzero_dyadic(6) * BinaryForm::pure_power(1, 0, d);
            w = w * ProjectivePoint::infinity().vanishing_form();
        }
        CHECK(contract(w, f).is_zero());
        CHECK(apolar_kernel(f, w.degree()).contains(w));
    }
}

TEST_CASE("annihilator_space") {
    FormSubspace a = annihilator_space(PointSetForm::from_form(th::from_roots({1})), 3);
    REQUIRE(a.dim() == 1);
    CHECK(a.basis()[0].proportional_to(BinaryForm::pure_power(1, 1, 3)));

    FormSubspace b = annihilator_space(PointSetForm::from_form(th::from_roots({1, -1})), 4);
    CHECK(b.dim() == 2);
    CHECK(b.contains(BinaryForm::pure_power(1, 1, 4)));
    CHECK(b.contains(BinaryForm::pure_power(1, -1, 4)));

    FormSubspace c = annihilator_space(PointSetForm::from_form(mono({0, 1, 0, 1})), 5);
    CHECK(c.dim() == 3);
    CHECK(c.contains(BinaryForm::pure_power(0, 1, 5)));
    for (const auto& g : c.basis()) CHECK(contract(mono({0, 1, 0, 1}), g).is_zero());

    CHECK_THROWS_AS(annihilator_space(PointSetForm{th::from_roots({1, 1}), 1, {}, {}, false}, 4), std::invalid_argument);
    CHECK_THROWS_AS(annihilator_space(PointSetForm::from_form(th::from_roots({1, 2, 3})), 2), std::invalid_argument);
}

TEST_CASE("annihilator dimension equals deg w") {
    Rng rng(77);
    for (int t = 0; t < 40; ++t) {
        const int d = 3 + static_cast<int>(rng.uniform_int(0, 5));
        const int r = 1 + static_cast<int>(rng.uniform_int(0, d - 1));
        BinaryForm w = random_of_degree(r, rng);
        if (w.is_zero() || !is_squarefree(w)) continue;
        CHECK(annihilator_space(PointSetForm::from_form(w), d).dim() == r);
    }
}

TEST_CASE("apolar_kernel") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        BinaryForm f = random_form(5, Distribution::uniform_normalized, seed);
        CHECK(apolar_kernel(f, 2).dim() == 0);
        CHECK(apolar_kernel(f, 3).dim() == 1);
    }
    FormSubspace k = apolar_kernel(BinaryForm::pure_power(1, 1, 5), 3);
    CHECK(k.dim() == 3);
    for (const auto& h : k.basis()) CHECK(h.evaluate(1, 1) == 0);
}

TEST_CASE("generic kernel dimension is max(0, 2r - d)") {
    for (int d = 3; d <= 8; ++d)
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            BinaryForm f = random_form(d, Distribution::uniform_rational, seed + 100 * static_cast<std::uint64_t>(d));
            for (int r = 1; r <= d; ++r) CHECK(apolar_kernel(f, r).dim() == std::max(0, 2 * r - d));
        }
    // special forms only go up
    BinaryForm p = BinaryForm::pure_power(2, 3, 6) + BinaryForm::pure_power(1, -1, 6);
    for (int r = 1; r <= 6; ++r) CHECK(apolar_kernel(p, r).dim() >= std::max(0, 2 * r - 6));
}

TEST_CASE("FormSubspace") {
    FormSubspace s(2, {mono({1, 0, 0}), mono({0, 1, 0})});
    CHECK(s.contains(mono({3, -2, 0})));
    CHECK_FALSE(s.contains(mono({0, 0, 1})));
    CHECK(s.contains(mono({0, 0, 0})));
    CHECK(s.combination({2, 5}) == mono({2, 5, 0}));
    CHECK_THROWS_AS(FormSubspace(2, {mono({1, 0, 0}), mono({2, 0, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(FormSubspace(2, {mono({1, 0})}), std::invalid_argument);
}

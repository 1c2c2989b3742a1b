#include "waring/hypdecide.hpp"

#include <algorithm>
#include <stdexcept>

#include "waring/rng.hpp"

namespace waring {

std::string to_string(HypDecision::Verdict v) {
    switch (v) {
        case HypDecision::Verdict::exists: return "EXISTS";
        case HypDecision::Verdict::not_exists: return "NOT_EXISTS";
        case HypDecision::Verdict::unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

namespace {

HypDecision found(BinaryForm w, int trials, HypDecision::Exactness e) {
    HypDecision d;
    d.verdict = HypDecision::Verdict::exists;
    d.witness = std::move(w);
    d.trials_used = trials;
    d.exactness = e;
    return d;
}

HypDecision absent(int trials) {
    HypDecision d;
    d.verdict = HypDecision::Verdict::not_exists;
    d.trials_used = trials;
    d.exactness = HypDecision::Exactness::exact;
    return d;
}

// Newton form interpolation through (xs[i], ys[i]).
Poly interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
    const std::size_t n = xs.size();
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
    Poly p = Poly::constant(ys[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) p = p * Poly(std::vector<Rational>{-xs[i], Rational(1)}) + Poly::constant(ys[i]);
    return p;
}

void check_pencil(const BinaryForm& g1, const BinaryForm& g2) {
    if (g1.degree() != g2.degree()) throw std::invalid_argument("decide_dim2: degree mismatch");
    if (g1.is_zero() || g2.is_zero() || g1.proportional_to(g2))
        throw std::invalid_argument("decide_dim2: pencil generators are linearly dependent");
}

}  // namespace

HypDecision decide_dim1(const BinaryForm& g) {
    if (g.is_zero()) throw std::invalid_argument("decide_dim1: zero form");
    if (is_hyperbolic(g)) return found(g, 1, HypDecision::Exactness::exact);
    return absent(1);
}

Poly pencil_discriminant(const BinaryForm& g1, const BinaryForm& g2) {
    const int r = g1.degree();
    const int points = std::max(1, 2 * r - 1);
    std::vector<Rational> xs, ys;
    for (int k = 0; k < points; ++k) {
        Rational t(k);
        BinaryForm gt = g1 + t * g2;
        xs.push_back(t);
        // Zero elements only occur for dependent generators, rejected earlier.
        ys.push_back(discriminant(gt));
    }
    return interpolate(xs, ys);
}

std::vector<Rational> pencil_samples(const BinaryForm& g1, const BinaryForm& g2) {
    check_pencil(g1, g2);
    const int r = g1.degree();
    Poly disc = pencil_discriminant(g1, g2);

    // Boundary points: real roots of D, plus the root of the linear x^r
    // coefficient l(t) where the pencil meets the point at infinity. Isolating
    // them as one polynomial keeps every gap midpoint strictly between roots.
    const Rational& l0 = g1.monomial_coeff(r);
    const Rational& l1 = g2.monomial_coeff(r);
    Poly boundary = disc.is_zero() ? Poly({Rational(1)}) : disc;
    if (l1 != 0) boundary = boundary * Poly({l0, l1});
    std::vector<RootInterval> roots;
    if (boundary.degree() >= 1) roots = isolate_real_roots(boundary);

    std::vector<Rational> samples{Rational(0)};
    auto add = [&](const Rational& t) {
        if (std::find(samples.begin(), samples.end(), t) == samples.end()) samples.push_back(t);
    };
    if (!roots.empty()) {
        add(roots.front().lo - 1);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (roots[i].exact) add(*roots[i].exact);
            if (i + 1 < roots.size()) add((roots[i].hi + roots[i + 1].lo) / 2);
        }
        add(roots.back().hi + 1);
    }
    return samples;
}

HypDecision decide_dim2(const BinaryForm& g1, const BinaryForm& g2) {
    int tested = 0;
    for (const auto& t : pencil_samples(g1, g2)) {
        ++tested;
        BinaryForm gt = g1 + t * g2;
        if (is_hyperbolic(gt)) return found(std::move(gt), tested, HypDecision::Exactness::exact);
    }
    ++tested;
    if (is_hyperbolic(g2)) return found(g2, tested, HypDecision::Exactness::exact);
    return absent(tested);
}

namespace {
// Hyperbolicity is scale invariant, so small integer combinations of the
// (primitive integer) basis cover the projective space while keeping the
// exact arithmetic cheap.
constexpr std::int64_t kSearchRange = 64;
}  // namespace

HypDecision search_witness(const FormSubspace& space, int trials, std::uint64_t seed) {
    if (space.dim() == 0) throw std::invalid_argument("search_witness: empty subspace");
    const auto& basis = space.basis();

    int used = 0;
    for (const auto& b : basis) {
        if (used >= trials) break;
        ++used;
        if (is_hyperbolic(b)) return found(b, used, HypDecision::Exactness::search_only);
    }
    // Each trial decides a random pencil exactly: a line through the
    // projectivized space meets an open hyperbolic region far more often
    // than a random point does.
    Rng rng(seed);
    auto draw = [&] {
        std::vector<Rational> coeffs(basis.size());
        for (auto& c : coeffs) c = rng.uniform_int(-kSearchRange, kSearchRange);
        return space.combination(coeffs);
    };
    while (used < trials) {
        ++used;
        BinaryForm g1 = draw();
        BinaryForm g2 = draw();
        if (g1.is_zero() || g2.is_zero() || g1.proportional_to(g2)) continue;
        HypDecision line = decide_dim2(g1, g2);
        if (line.exists()) return found(std::move(*line.witness), used, HypDecision::Exactness::search_only);
    }
    HypDecision d;
    d.verdict = HypDecision::Verdict::unknown;
    d.trials_used = used;
    d.exactness = HypDecision::Exactness::search_only;
    return d;
}

HypDecision decide(const FormSubspace& space, int trials, std::uint64_t seed) {
    switch (space.dim()) {
        case 0: return absent(0);
        case 1: return decide_dim1(space.basis()[0]);
        case 2: return decide_dim2(space.basis()[0], space.basis()[1]);
        default: return search_witness(space, trials, seed);
    }
}

}  // namespace waring

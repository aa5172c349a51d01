#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "zxlat/saturation.hpp"
#include "zxlat/sigma_ideal.hpp"

using namespace zxlat;
using test::P;
using test::V;

namespace {

CoeffElem I(long v) { return CoeffElem::from_int(v); }
CoeffElem zeta(long a, long m) {
    Rat r(a, m);
    r.canonicalize();
    return CoeffElem::root_of_unity(r);
}
const CoeffElem LAMBDA = CoeffElem::generator("lambda");
const CoeffElem LAMBDA_X = CoeffElem::generator("lambda", LaurentQPoly::monomial(1, 1));

Presentation pres(std::size_t n, int family, std::vector<std::pair<ZxVec, CoeffElem>> gens) {
    Presentation p{n, family, {}};
    for (auto& [f, c] : gens) p.generators.push_back(make_binomial(f, c));
    return p;
}

Presentation unit_system(int family) {
    return pres(2, family,
                {{V({"2", "0"}), I(-1)}, {V({"x-1", "0"}), I(1)}, {V({"0", "2"}), I(-1)}, {V({"0", "x-1"}), I(-1)}});
}

std::vector<ZxVec> supports(const Presentation& p) {
    std::vector<ZxVec> s;
    for (const auto& g : p.generators) s.push_back(g.support);
    return s;
}

// Oracle: a genuine character on Z[x]^n given by its values on the unit vectors.
CoeffElem char_value(const std::vector<CoeffElem>& unit_values, const ZxVec& f, int family) {
    CoeffElem r = CoeffElem::one();
    for (std::size_t i = 0; i < f.size(); ++i) r = r * pow_by(unit_values[i], f[i], family);
    return r;
}

CoeffElem random_unit_value(std::mt19937& rng) {
    std::uniform_int_distribution<int> kind(0, 3), m(1, 4), e(-2, 2);
    switch (kind(rng)) {
    case 0: return CoeffElem::one();
    case 1: return zeta(m(rng) - 1, m(rng) + 1);
    case 2: return pow_int(I(2), e(rng)) * zeta(1, 2);
    default: return pow_int(LAMBDA, e(rng));
    }
}

// A proper presentation whose character extends to all of Z[x]^n.
Presentation random_presentation(std::mt19937& rng, std::size_t n, std::size_t gens, int family,
                                 std::vector<CoeffElem>* units = nullptr) {
    std::vector<CoeffElem> u;
    for (std::size_t i = 0; i < n; ++i) u.push_back(random_unit_value(rng));
    Presentation p{n, family, {}};
    for (const auto& f : test::random_lattice(rng, n, gens, 2, 3))
        p.generators.push_back(make_binomial(f, char_value(u, f, family)));
    if (units) *units = u;
    return p;
}

} // namespace

TEST_CASE("normalize") {
    // y1*y2^x - y1^x*y2
    auto r = normalize_terms({{I(1), V({"1", "x"})}, {I(-1), V({"x", "1"})}});
    CHECK(r.binomial.support == V({"1-x", "x-1"}));
    CHECK(r.binomial.coeff.is_one());
    // y1 and y1^x are distinct variables, so the monomials are coprime.
    CHECK(is_zero(r.cofactor));

    // y^2 + 1
    auto s = normalize(I(1), V({"2"}), I(1), V({"0"}));
    CHECK(s.binomial.support == V({"2"}));
    CHECK(s.binomial.coeff == I(-1));

    CHECK_THROWS_AS(normalize_terms({{I(1), V({"2"})}}), std::invalid_argument);
    CHECK_THROWS_AS(normalize(I(1), V({"2"}), I(-1), V({"2"})), std::invalid_argument);

    // The stored representative is normal.
    auto b = make_binomial(V({"x-1", "1-x"}), LAMBDA);
    CHECK(b.support == V({"1-x", "x-1"}));
    CHECK(b.coeff == inv(LAMBDA));
    CHECK_THROWS_AS(make_binomial(V({"0", "0"}), I(1)), std::invalid_argument);
}

TEST_CASE("is_proper") {
    CHECK(is_proper(pres(2, 1, {{V({"x", "0"}), I(1)}, {V({"2", "2"}), I(1)}, {V({"0", "x"}), I(1)}})).proper);
    CHECK(is_proper(pres(1, 1, {{V({"2"}), I(-1)}, {V({"1"}), zeta(1, 4)}})).proper);
    auto bad = is_proper(pres(1, 1, {{V({"2"}), I(-1)}, {V({"1"}), zeta(1, 8)}}));
    CHECK_FALSE(bad.proper);
    REQUIRE(bad.violating.has_value());
    CHECK(test::equal_up_to_sign(*bad.violating, V({"1", "-2"})));
}

TEST_CASE("char_set") {
    auto m1 = pres(2, 1, {{V({"x", "0"}), I(1)}, {V({"2", "2"}), I(1)}, {V({"0", "x"}), I(1)}});
    auto c1 = char_set(m1);
    REQUIRE(c1.generators.size() == 3);
    CHECK(supports(c1) == supports(m1));
    for (const auto& g : c1.generators) CHECK(g.coeff.is_one());

    auto c2 = char_set(pres(1, 1, {{V({"x"}), LAMBDA_X}}));
    REQUIRE(c2.generators.size() == 1);
    CHECK(c2.generators[0] == LaurentBinomial{V({"x"}), LAMBDA_X});

    auto c3 = char_set(pres(1, 1, {{V({"2"}), I(4)}, {V({"3"}), I(8)}}));
    REQUIRE(c3.generators.size() == 1);
    CHECK(c3.generators[0] == LaurentBinomial{V({"1"}), I(2)});

    CHECK_THROWS_AS(char_set(pres(1, 1, {{V({"2"}), I(-1)}, {V({"1"}), zeta(1, 8)}})), std::domain_error);
}

TEST_CASE("prem") {
    auto chain = pres(1, 1, {{V({"1"}), I(2)}});
    CHECK(prem({V({"3"}), I(8)}, chain).kind == PremResult::Kind::Zero);
    auto c = prem({V({"3"}), I(16)}, chain);
    CHECK(c.kind == PremResult::Kind::Constant);
    CHECK_FALSE(c.constant.is_one());

    auto a = char_set(pres(2, 1, {{V({"2", "0"}), I(1)}, {V({"0", "x"}), I(1)}}));
    LaurentBinomial reduced{V({"1", "1"}), I(3)};
    auto r = prem(reduced, a);
    REQUIRE(r.kind == PremResult::Kind::Binomial);
    CHECK(r.binomial == reduced);
}

TEST_CASE("ideal_member") {
    // The character y1 -> lambda, y2 -> 3 restricted to the columns of M1.
    auto p = pres(2, 1, {{V({"x", "0"}), LAMBDA_X}, {V({"2", "2"}), pow_int(LAMBDA, 2) * I(9)}, {V({"0", "x"}), I(3)}});
    REQUIRE(is_proper(p).proper);
    for (const auto& g : p.generators) CHECK(ideal_member(p, g));
    // Y^(x f1) - sigma(c1)
    CHECK(ideal_member(p, make_binomial(V({"x^2", "0"}), sigma_shift(LAMBDA_X, 1, 1))));
    CHECK_FALSE(ideal_member(p, make_binomial(V({"x", "0"}), LAMBDA_X * I(2))));
    CHECK_FALSE(ideal_member(p, make_binomial(V({"1", "0"}), LAMBDA)));
    CHECK(ideal_member(p, make_binomial(V({"2*x", "2*x"}), pow_int(LAMBDA_X, 2) * I(9))));
    CHECK_THROWS_AS(ideal_member(pres(1, 1, {{V({"2"}), I(-1)}, {V({"1"}), zeta(1, 8)}}), {V({"1"}), I(1)}),
                    std::domain_error);
}

TEST_CASE("is_regular_coherent") {
    auto m1 = pres(2, 1, {{V({"x", "0"}), I(1)}, {V({"2", "2"}), I(1)}, {V({"0", "x"}), I(1)}});
    CHECK(is_regular_coherent(char_set(m1)));
    CHECK_FALSE(is_regular_coherent(pres(2, 1, {{V({"2", "0"}), I(1)}, {V({"4", "0"}), I(1)}})));
    CHECK(is_regular_coherent(unit_system(1)));
}

TEST_CASE("classify") {
    auto a = classify(pres(2, 1, {{V({"1-x", "x-1"}), I(1)}}));
    CHECK(a.proper);
    CHECK(a.prime);
    CHECK(a.reflexive);
    CHECK_FALSE(a.toric);
    CHECK(a.dimension == 1);

    auto b = classify(pres(2, 1, {{V({"1", "0"}), I(1)}, {V({"0", "1"}), I(1)}}));
    CHECK((b.proper && b.prime && b.reflexive && b.perfect && b.toric));
    CHECK(b.dimension == 0);

    auto c = classify(pres(1, 1, {{V({"3"}), I(1)}}));
    CHECK(c.reflexive);
    CHECK_FALSE(c.prime);
    CHECK_FALSE(c.perfect);
    CHECK(c.dimension == 0);

    auto d = classify(pres(1, 1, {{V({"2"}), I(-1)}, {V({"1"}), zeta(1, 8)}}));
    CHECK_FALSE(d.proper);
}

TEST_CASE("reflexive_closure") {
    auto r = reflexive_closure(pres(1, 1, {{V({"x"}), LAMBDA_X}}));
    REQUIRE(r.generators.size() == 1);
    CHECK(r.generators[0] == LaurentBinomial{V({"1"}), LAMBDA});

    auto m1 = reflexive_closure(pres(2, 1, {{V({"x", "0"}), I(1)}, {V({"2", "2"}), I(1)}, {V({"0", "x"}), I(1)}}));
    CHECK(m1.generators == std::vector<LaurentBinomial>{{V({"1", "0"}), I(1)}, {V({"0", "1"}), I(1)}});

    auto sat = pres(2, 1, {{V({"1", "0"}), I(3)}, {V({"0", "1"}), LAMBDA}});
    CHECK(reflexive_closure(sat).generators == char_set(sat).generators);
    CHECK_THROWS_AS(reflexive_closure(pres(1, 1, {{V({"2"}), I(-1)}, {V({"1"}), zeta(1, 8)}})), std::domain_error);
}

TEST_CASE("dec_laurent") {
    CHECK(dec_laurent(unit_system(1)).empty());
    auto one = dec_laurent(pres(1, 1, {{V({"1"}), I(1)}}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].generators == std::vector<LaurentBinomial>{{V({"1"}), I(1)}});

    auto two = dec_laurent(pres(1, 1, {{V({"2"}), I(1)}}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].generators == std::vector<LaurentBinomial>{{V({"1"}), I(1)}});
    CHECK(two[1].generators == std::vector<LaurentBinomial>{{V({"1"}), I(-1)}});
}

TEST_CASE("perfect_closure") {
    auto p = perfect_closure(pres(1, 1, {{V({"3"}), I(1)}}));
    REQUIRE(p.has_value());
    CHECK(same_lattice(supports(*p), {V({"3"}), V({"x-1"})}, 1));
    for (const auto& g : p->generators) CHECK(g.coeff.is_one());
    CHECK(ideal_member(*p, make_binomial(V({"x-1"}), I(1))));

    auto perfect = pres(2, 1, {{V({"1", "0"}), I(2)}, {V({"0", "1"}), LAMBDA}});
    auto q = perfect_closure(perfect);
    REQUIRE(q.has_value());
    CHECK(q->generators == char_set(perfect).generators);

    CHECK_FALSE(perfect_closure(unit_system(1)).has_value());
}

TEST_CASE("laurent_lift") {
    LaurentBinomial b{V({"1-x", "x-1"}), I(1)};
    auto l = laurent_lift(b);
    CHECK(l.plus == V({"1", "x"}));
    CHECK(l.minus == V({"x", "1"}));
    CHECK(laurent_drop(l) == b);

    LaurentBinomial pos{V({"x+2", "3"}), LAMBDA};
    auto lp = laurent_lift(pos);
    CHECK(lp.plus == pos.support);
    CHECK(is_zero(lp.minus));

    auto chain = char_set(unit_system(1));
    auto lifted = laurent_lift(chain);
    REQUIRE(lifted.size() == chain.generators.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) CHECK(laurent_drop(lifted[i]) == chain.generators[i]);
}

TEST_CASE("dec_binomial_restricted") {
    RestrictedElement y1{true, 0, {}};
    RestrictedElement y2sq{false, 0, {V({"0", "2"}), V({"0", "0"}), I(1)}};
    auto comps = dec_binomial_restricted({RestrictedChain{2, 1, {y1, y2sq}}});
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps) CHECK(c.variables == std::vector<std::size_t>{0});
    CHECK(comps[0].chain == std::vector<NonLaurentBinomial>{{V({"0", "1"}), V({"0", "0"}), I(1)}});
    CHECK(comps[1].chain == std::vector<NonLaurentBinomial>{{V({"0", "1"}), V({"0", "0"}), I(-1)}});

    NonLaurentBinomial y1m1{V({"1"}), V({"0"}), I(1)};
    auto same = dec_binomial_restricted({RestrictedChain{1, 1, {{false, 0, y1m1}}}});
    REQUIRE(same.size() == 1);
    CHECK(same[0].variables.empty());
    CHECK(same[0].chain == std::vector<NonLaurentBinomial>{y1m1});

    RestrictedChain e31{2, 1, {}};
    for (const auto& b : laurent_lift(unit_system(1))) e31.elements.push_back({false, 0, b});
    CHECK(dec_binomial_restricted({e31}).empty());

    RestrictedChain bad{1, 1, {{false, 0, {V({"2"}), V({"0"}), I(1)}}, {false, 0, {V({"4"}), V({"0"}), I(1)}}}};
    CHECK_THROWS_AS(dec_binomial_restricted({bad}), std::invalid_argument);
}

TEST_CASE("property: characteristic sets and remainders") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 60; ++trial) {
        const int family = trial % 2 ? -1 : 1;
        const std::size_t n = 1 + trial % 2;
        std::vector<CoeffElem> units;
        auto p = random_presentation(rng, n, 1 + trial % 3, family, &units);
        REQUIRE(is_proper(p).proper);
        auto chain = char_set(p);
        CHECK(is_regular_coherent(chain));
        for (const auto& g : p.generators) CHECK(prem(g, chain).kind == PremResult::Kind::Zero);

        // Random binomials: membership agrees with the global character oracle.
        Ghnf lat = groebner(supports(p), n, false).basis;
        ZxVec f = test::random_vec(rng, n, 2, 3);
        if (trial % 3 == 0) f = test::apply(supports(p), test::random_vec(rng, p.generators.size(), 1, 2), n);
        if (is_zero(f)) continue;
        auto b = make_binomial(f, char_value(units, f, family));
        CHECK(ideal_member(p, b) == contains(lat, f));
        auto r = prem(b, chain);
        CHECK((r.kind == PremResult::Kind::Zero) == contains(lat, f));
        if (r.kind != PremResult::Kind::Zero) {
            ZxVec diff = b.support - r.support;
            CHECK(contains(lat, diff));
        }
        auto wrong = make_binomial(f, char_value(units, f, family) * I(5));
        CHECK_FALSE(ideal_member(p, wrong));
    }
}

TEST_CASE("property: decomposition and classification") {
    std::mt19937 rng(8080);
    for (int trial = 0; trial < 40; ++trial) {
        const int family = trial % 2 ? -1 : 1;
        const std::size_t n = 1 + trial % 2;
        auto p = random_presentation(rng, n, 1 + trial % 2, family);
        const Ghnf full = full_sat(supports(p), n);
        CAPTURE(trial);

        auto refl = reflexive_closure(p);
        CHECK(groebner(supports(refl), n, false).basis == sat_x(supports(p), n));
        CHECK(reflexive_closure(refl).generators == refl.generators);
        for (const auto& g : p.generators) CHECK(ideal_member(refl, g));

        auto comps = dec_laurent(p);
        // A character on all of Z[x]^n extends to the saturation, so there is a component.
        CHECK_FALSE(comps.empty());
        for (const auto& c : comps) {
            CHECK(is_regular_coherent(c));
            Ghnf l = groebner(supports(c), n, false).basis;
            CHECK(l == full);
            CHECK(xfactor(l).empty());
            CHECK(zfactor(l).empty());
            for (const auto& g : p.generators) CHECK(ideal_member(c, g));
            CHECK(n - rank(l) == n - rank(full));
        }

        auto cl = classify(p);
        CHECK(cl.proper);
        CHECK(cl.dimension == n - rank(groebner(supports(p), n, false).basis));
        if (cl.toric) CHECK((cl.prime && cl.reflexive && cl.perfect));
        CHECK((cl.prime && cl.reflexive) == (groebner(supports(p), n, false).basis == full));
        CHECK(cl.perfect == (perfect_closure(p).has_value() && cl.reflexive &&
                             p_saturation_check(groebner(supports(p), n, false).basis, family).p_saturated));
    }
}

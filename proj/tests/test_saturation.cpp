#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "zxlat/saturation.hpp"

using namespace zxlat;
using test::P;
using test::V;

namespace {

const std::vector<ZxVec> CX{V({"-x+2", "3*x+2", "0"}), V({"1", "1", "2*x"}), V({"1", "2*x+1", "x^2"})};
const std::vector<ZxVec> CX_SAT{V({"-x+2", "3*x+2", "0"}), V({"1", "-3", "4"}), V({"0", "2", "x-2"})};
const std::vector<ZxVec> CZ{V({"x^2+2*x-2", "0"}), V({"x+2", "4"}), V({"1", "2*x"})};
const std::vector<ZxVec> CZ_SAT{V({"x^2+2*x-2", "0"}), V({"x+2", "4"}), V({"1", "2*x"}), V({"x+1", "x^2+2"})};
const std::vector<ZxVec> CZX{V({"x", "2*x^2+1", "0"}), V({"x^2+1", "0", "4*x^2+2"})};
const std::vector<ZxVec> CZX_SAT{V({"x", "2*x^2+1", "0"}), V({"1", "x", "2"})};
const std::vector<ZxVec> M1{V({"x", "0"}), V({"2", "2"}), V({"0", "x"})};

Ghnf gb(const std::vector<ZxVec>& g, std::size_t n) { return groebner(g, n, false).basis; }

// Checks a witness with the independent oracle where it is decisive.
void check_witness(const Ghnf& b, const SaturationWitness& w) {
    const std::size_t n = b.n;
    CHECK_FALSE(contains(b, w.h));
    ZxVec mh = w.multiplier * w.h;
    CHECK(contains(b, mh));
    CHECK(combine(n, b.columns, w.combination) == mh);
    CHECK(member_oracle(b.columns, mh) != Tri::False);
    CHECK(member_oracle(b.columns, w.h) != Tri::True);
}

bool has_witness(const std::vector<SaturationWitness>& ws, const ZxVec& h) {
    for (const auto& w : ws)
        if (test::equal_up_to_sign(w.h, h)) return true;
    return false;
}

} // namespace

TEST_CASE("xfactor") {
    Ghnf c{3, CX};
    REQUIRE(is_ghnf(CX).ok);
    auto ws = xfactor(c);
    REQUIRE_FALSE(ws.empty());
    for (const auto& w : ws) {
        check_witness(c, w);
        CHECK(w.kind == MultiplierKind::XPower);
    }
    // The kernel vector (0,-1,1) of F(0) gives x*(0,2,x-2).
    auto w1 = xfactor_with_kernel(c, {{0, -1, 1}});
    REQUIRE(w1.size() == 1);
    CHECK(test::equal_up_to_sign(w1[0].h, V({"0", "2", "x-2"})));
    CHECK(w1[0].x_power == 1);
    CHECK(has_witness(ws, V({"0", "2", "x-2"})));

    auto wm = xfactor(Ghnf{2, M1});
    CHECK(has_witness(wm, V({"1", "0"})));
    for (const auto& w : wm) check_witness(Ghnf{2, M1}, w);
    CHECK(xfactor(gb({V({"1", "0"}), V({"0", "1"})}, 2)).empty());
}

TEST_CASE("sat_x") {
    CHECK(sat_x(CX, 3) == gb(CX_SAT, 3));
    CHECK(sat_x(M1, 2) == gb({V({"1", "0"}), V({"0", "1"})}, 2));
    CHECK(sat_x(CX_SAT, 3) == gb(CX_SAT, 3));
}

TEST_CASE("sat_x: the alternate kernel vector gives the same result") {
    Ghnf c{3, CX};
    auto w2 = xfactor_with_kernel(c, {{1, -2, 0}});
    REQUIRE(w2.size() == 1);
    CHECK(test::equal_up_to_sign(w2[0].h, V({"-1", "3", "-4"})));
    auto gens = CX;
    gens.push_back(w2[0].h);
    CHECK(sat_x(gens, 3) == gb(CX_SAT, 3));
}

TEST_CASE("zfactor") {
    Ghnf c{2, CZ};
    REQUIRE(is_ghnf(CZ).ok);
    auto ws = zfactor(c);
    REQUIRE_FALSE(ws.empty());
    CHECK(has_witness(ws, V({"1-x", "x^3"})));
    for (const auto& w : ws) {
        check_witness(c, w);
        CHECK(w.kind == MultiplierKind::Prime);
        CHECK(w.prime == 2);
    }
    auto w2 = zfactor(Ghnf{1, {V({"2"})}});
    REQUIRE(w2.size() == 1);
    CHECK(w2[0].h == V({"1"}));
    CHECK(w2[0].prime == 2);
    CHECK(zfactor(gb({V({"1", "0"}), V({"0", "1"})}, 2)).empty());
}

TEST_CASE("sat_z") {
    CHECK(sat_z(CZ, 2) == gb(CZ_SAT, 2));
    CHECK(sat_z({V({"2", "0"})}, 2) == gb({V({"1", "0"})}, 2));
    CHECK(sat_z(CZ_SAT, 2) == gb(CZ_SAT, 2));
}

TEST_CASE("zxfactor") {
    Ghnf c{3, CZX};
    REQUIRE(is_ghnf(CZX).ok);
    auto ws = zxfactor(c);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].h == V({"x", "-1", "4*x"}));
    CHECK(ws[0].factor == P("2*x^2+1"));
    check_witness(c, ws[0]);

    auto l = gb({V({"1-x", "x-1"})}, 2);
    auto wl = zxfactor(l);
    REQUIRE(wl.size() == 1);
    CHECK(test::equal_up_to_sign(wl[0].h, V({"1", "-1"})));
    CHECK(wl[0].factor == P("x-1"));
    CHECK(zxfactor(gb({V({"1", "0"}), V({"0", "1"})}, 2)).empty());
}

TEST_CASE("sat_zx") {
    CHECK(sat_zx(CZX, 3) == gb(CZX_SAT, 3));
    CHECK(sat_zx({V({"1-x", "x-1"})}, 2) == gb({V({"1", "-1"})}, 2));
    CHECK(sat_zx(CZX_SAT, 3) == gb(CZX_SAT, 3));
}

TEST_CASE("full_sat") {
    CHECK(full_sat({V({"2*x"})}, 1) == gb({V({"1"})}, 1));
    CHECK(full_sat(M1, 2) == gb({V({"1", "0"}), V({"0", "1"})}, 2));
    CHECK(full_sat(CZ_SAT, 2) == sat_x(CZ_SAT, 2));
}

TEST_CASE("p_saturation_check") {
    auto a = p_saturation_check(gb({V({"2"}), V({"x-1"})}, 1), 1);
    CHECK(a.p_saturated);
    REQUIRE(a.certificates.size() == 1);
    CHECK(a.certificates[0].g == V({"1"}));
    CHECK(a.certificates[0].m == 2);
    CHECK(a.certificates[0].o == 1);

    auto b = p_saturation_check(gb({V({"2"})}, 1), 1);
    CHECK_FALSE(b.p_saturated);

    auto c = p_saturation_check(gb({V({"1", "0"}), V({"0", "1"})}, 2), -1);
    CHECK(c.p_saturated);
    CHECK(c.certificates.empty());

    // Not x-saturated.
    CHECK_THROWS_AS(p_saturation_check(gb({V({"x"})}, 1), 1), std::invalid_argument);
    CHECK_THROWS_AS(p_saturation_check(gb({V({"1"})}, 1), 2), std::invalid_argument);
    CHECK(family_residue(-1, 3) == 2);
    CHECK(family_residue(1, 5) == 1);
}

TEST_CASE("p_saturation") {
    CHECK(p_saturation({V({"3"})}, 1, 1) == gb({V({"3"}), V({"x-1"})}, 1));
    auto l = gb({V({"2", "0"}), V({"0", "2"}), V({"x-1", "0"}), V({"0", "x+1"})}, 2);
    CHECK(p_saturation(l.columns, 2, 1) == l);
    CHECK(p_saturation(l.columns, 2, -1) == l);
    // Under u = -1 the residue of -1 mod 3 is 2.
    CHECK(p_saturation({V({"3"})}, 1, -1) == gb({V({"3"}), V({"x-2"})}, 1));
}

TEST_CASE("property: saturations on random lattices") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 3;
        auto gens = test::random_lattice(rng, n, 1 + trial % 3, 3, 5);
        const Ghnf l = gb(gens, n);
        const std::size_t r = rank(l);
        CAPTURE(trial);

        Ghnf sx = sat_x(gens, n), sz = sat_z(gens, n), szx = sat_zx(gens, n);
        for (const Ghnf* s : {&sx, &sz, &szx}) {
            CHECK(rank(*s) == r);
            for (const auto& g : gens) CHECK(contains(*s, g));
            CHECK(is_ghnf(s->columns).ok);
        }
        CHECK(sat_x(sx.columns, n) == sx);
        CHECK(sat_z(sz.columns, n) == sz);
        CHECK(sat_zx(szx.columns, n) == szx);
        CHECK(xfactor(sx).empty());
        CHECK(zfactor(sz).empty());
        CHECK(zxfactor(szx).empty());
        CHECK(sat_z(sx.columns, n) == sat_x(sz.columns, n));

        // The Z[x]-saturation is its own double orthogonal complement.
        CHECK(gb(orth_complement(gb(orth_complement(szx), n)), n) == szx);

        // Every generator of sat_x has a power-of-x multiple in L.
        for (const auto& g : sx.columns) {
            bool found = false;
            for (std::size_t k = 0; k <= 8 && !found; ++k) found = contains(l, shift(g, k));
            CHECK(found);
        }
        // Every generator of sat_z has an integer multiple in L dividing the bound.
        auto tz = sat_z_tracked(gens, n);
        CHECK(tz.basis == sz);
        for (const auto& g : sz.columns) CHECK(contains(l, ZPoly(tz.bound) * g));
    }
}

TEST_CASE("property: witnesses verify against the oracle") {
    std::mt19937 rng(9001);
    int seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 2;
        auto l = gb(test::random_lattice(rng, n, 2, 2, 4), n);
        if (l.columns.empty()) continue;
        for (auto fn : {&xfactor, &zfactor, &zxfactor})
            for (const auto& w : fn(l)) {
                ++seen;
                check_witness(l, w);
            }
    }
    CHECK(seen > 20);
}

TEST_CASE("property: p_saturation preserves rank and passes the check") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 2;
        auto gens = test::random_lattice(rng, n, 1 + trial % 2, 2, 4);
        for (int family : {1, -1}) {
            Ghnf p = p_saturation(gens, n, family);
            CHECK(rank(p) == rank(gb(gens, n)));
            CHECK(p_saturation_check(p, family).p_saturated);
            for (const auto& g : gens) CHECK(contains(p, g));
        }
    }
}

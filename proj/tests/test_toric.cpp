#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "zxlat/saturation.hpp"
#include "zxlat/toric.hpp"

#include <algorithm>

using namespace zxlat;
using test::P;
using test::V;

namespace {

const std::vector<ZxVec> M2{V({"2", "0"}), V({"x-1", "0"}), V({"0", "2"}), V({"0", "x-1"})};
const std::vector<ZxVec> M2_KER{V({"1-x", "2", "0", "0"}), V({"0", "0", "1-x", "2"})};

std::vector<ZxVec> supports(const Presentation& p) {
    std::vector<ZxVec> s;
    for (const auto& g : p.generators) s.push_back(g.support);
    return s;
}

Ghnf support_lattice(const Presentation& p) { return groebner(supports(p), p.n, false).basis; }

// Rows of a column-stored matrix.
std::vector<ZxVec> rows_of(const DefiningMatrix& a) {
    std::vector<ZxVec> r(a.rows, ZxVec(a.columns.size()));
    for (std::size_t j = 0; j < a.columns.size(); ++j)
        for (std::size_t i = 0; i < a.rows; ++i) r[i][j] = a.columns[j][i];
    return r;
}

// Oracle: the formula evaluated from the entries' coefficient vectors.
long order_bound_oracle(const DefiningMatrix& a) {
    long total = 0;
    for (const auto& row : rows_of(a)) {
        long hi = -1, lo = -1;
        for (const auto& e : row) {
            if (e.is_zero()) {
                lo = lo < 0 ? 0 : std::min(lo, 0L);
                continue;
            }
            const auto& c = e.coeffs();
            long first = 0;
            while (c[first] == 0) ++first;
            hi = std::max(hi, long(c.size()) - 1);
            lo = lo < 0 ? first : std::min(lo, first);
        }
        total += hi - lo;
    }
    return total;
}

DefiningMatrix random_matrix(std::mt19937& rng, std::size_t m, std::size_t n) {
    for (;;) {
        DefiningMatrix a{m, {}};
        for (std::size_t j = 0; j < n; ++j) a.columns.push_back(test::random_vec(rng, m, 2, 2));
        bool ok = true;
        for (const auto& row : rows_of(a)) ok &= !is_zero(row);
        if (ok) return a;
    }
}

} // namespace

TEST_CASE("implicitize") {
    auto p = implicitize(DefiningMatrix{2, M2});
    CHECK(p.n == 4);
    CHECK(support_lattice(p) == groebner(M2_KER, 4, false).basis);
    for (const auto& g : p.generators) CHECK(g.coeff.is_one());
    // The lifted binomials are y1*y2^2 - y1^x and y3*y4^2 - y3^x.
    auto lifted = laurent_lift(char_set(p));
    std::vector<std::pair<ZxVec, ZxVec>> shapes;
    for (const auto& b : lifted) shapes.emplace_back(b.plus, b.minus);
    CHECK(shapes.size() == 2);
    for (const auto& [plus, minus] : shapes) {
        bool first = plus == V({"1", "2", "0", "0"}) && minus == V({"x", "0", "0", "0"});
        bool second = plus == V({"0", "0", "1", "2"}) && minus == V({"0", "0", "x", "0"});
        CHECK((first || second));
    }

    auto tv2 = implicitize(DefiningMatrix{2, {V({"1", "1"}), V({"x", "x"}), V({"0", "1"})}});
    REQUIRE(tv2.generators.size() == 1);
    CHECK(tv2.generators[0].support == V({"-x", "1", "0"}));

    auto n2 = implicitize(DefiningMatrix{2, {V({"0", "-1"}), V({"1", "1"}), V({"0", "1"})}});
    REQUIRE(n2.generators.size() == 1);
    CHECK(n2.generators[0].support == V({"1", "0", "1"}));

    CHECK_THROWS_AS(implicitize(DefiningMatrix{2, {V({"1", "0"}), V({"x", "0"})}}), std::invalid_argument);
    CHECK_THROWS_AS(implicitize(DefiningMatrix{2, {V({"1", "0"}), V({"x"})}}), std::invalid_argument);
}

TEST_CASE("three generating sets of one lattice give three toric ideals") {
    DefiningMatrix n1{2, {V({"x", "x-1"}), V({"1", "1"}), V({"x", "x+1"})}};
    DefiningMatrix n2{2, {V({"0", "-1"}), V({"1", "1"}), V({"0", "1"})}};
    DefiningMatrix n3{2, {V({"0", "0"}), V({"1", "0"}), V({"0", "1"})}};
    CHECK(same_lattice(n1.columns, n2.columns, 2));
    CHECK(same_lattice(n2.columns, n3.columns, 2));
    auto l1 = support_lattice(implicitize(n1));
    auto l2 = support_lattice(implicitize(n2));
    auto l3 = support_lattice(implicitize(n3));
    CHECK(l1 == groebner({V({"1", "-2*x", "1"})}, 3, false).basis);
    CHECK(l2 == groebner({V({"1", "0", "1"})}, 3, false).basis);
    CHECK(l3 == groebner({V({"1", "0", "0"})}, 3, false).basis);
    CHECK(rank(l1) == rank(l2));
    CHECK(rank(l2) == rank(l3));
    CHECK_FALSE(l1 == l2);
    CHECK_FALSE(l2 == l3);
    CHECK_FALSE(l1 == l3);
}

TEST_CASE("parametrize") {
    auto l = groebner(M2_KER, 4, false).basis;
    auto a = parametrize(l);
    CHECK(a.rows == 2);
    CHECK(same_lattice(rows_of(a), rows_of(DefiningMatrix{2, M2}), 4));
    CHECK(support_lattice(implicitize(a)) == l);

    auto z = parametrize(Ghnf{3, {}});
    CHECK(z.rows == 3);
    CHECK(same_lattice(rows_of(z), {V({"1", "0", "0"}), V({"0", "1", "0"}), V({"0", "0", "1"})}, 3));

    auto d = parametrize(groebner({V({"1", "-1"})}, 2, false).basis);
    CHECK(d.rows == 1);
    CHECK(d.columns == std::vector<ZxVec>{V({"1"}), V({"1"})});

    CHECK_THROWS_AS(parametrize(groebner({V({"1-x", "x-1"})}, 2, false).basis), std::invalid_argument);
    CHECK_NOTHROW(parametrize(groebner({V({"1-x", "x-1"})}, 2, false).basis, false));
}

TEST_CASE("is_toric_lattice") {
    CHECK(is_toric_lattice(groebner({V({"1", "-1"})}, 2, false).basis));
    CHECK_FALSE(is_toric_lattice(groebner({V({"1-x", "x-1"})}, 2, false).basis));
    CHECK(is_toric_lattice(groebner({V({"1", "0"}), V({"0", "1"})}, 2, false).basis));
}

TEST_CASE("order_bound") {
    CHECK(order_bound(DefiningMatrix{2, M2}) == 2);
    CHECK(order_bound(DefiningMatrix{1, {V({"2"}), V({"x"})}}) == 1);
    CHECK(order_bound(DefiningMatrix{2, {V({"2", "1"}), V({"-1", "3"})}}) == 0);
    CHECK_THROWS_AS(order_bound(DefiningMatrix{2, {V({"1", "0"})}}), std::invalid_argument);
}

TEST_CASE("jacobi_number") {
    using J = std::vector<std::vector<JacobiEntry>>;
    CHECK(jacobi_number(J{{1, 0}, {0, 1}}) == 2);
    CHECK(jacobi_number(J{{1, std::nullopt}, {std::nullopt, 1}}) == 2);
    CHECK(jacobi_number(J{{3, 5}, {3, 5}}) == 8);
    CHECK_FALSE(jacobi_number(J{{std::nullopt, std::nullopt}, {1, 2}}).has_value());
    CHECK_THROWS_AS(jacobi_number(J{{1, 2}}), std::invalid_argument);
}

TEST_CASE("property: implicitization is toric and round-trips") {
    std::mt19937 rng(271828);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = 1 + trial % 2, n = 2 + trial % 2;
        auto a = random_matrix(rng, m, n);
        CAPTURE(trial);
        auto p = implicitize(a);
        Ghnf l = support_lattice(p);
        for (const auto& g : p.generators) {
            CHECK(g.coeff.is_one());
            // Every support is annihilated by the rows of A.
            for (const auto& row : rows_of(a)) {
                ZPoly dot;
                for (std::size_t i = 0; i < n; ++i) dot += row[i] * g.support[i];
                CHECK(dot.is_zero());
            }
        }
        CHECK(is_proper(p).proper);
        CHECK(is_toric_lattice(l));
        auto cl = classify(p);
        CHECK((cl.prime && cl.reflexive && cl.toric));

        // rank accounting
        const std::size_t col_rank = rank(groebner(rows_of(a), n, false).basis);
        CHECK(rank(l) == n - col_rank);
        CHECK(cl.dimension == col_rank);

        // Round trips through parametrize.
        auto back = parametrize(l);
        CHECK(support_lattice(implicitize(back)) == l);
        CHECK(support_lattice(implicitize(parametrize(support_lattice(implicitize(back))))) == l);

        CHECK(order_bound(a) == order_bound_oracle(a));
    }
}

TEST_CASE("property: order_bound agrees with jacobi_number on equal rows") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> e(0, 6), size(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t k = size(rng);
        std::vector<JacobiEntry> row;
        long sum = 0;
        for (std::size_t i = 0; i < k; ++i) {
            long v = e(rng);
            row.push_back(v);
            sum += v;
        }
        CHECK(jacobi_number(std::vector<std::vector<JacobiEntry>>(k, row)) == sum);
    }
}

#pragma once

// Shared fixtures and generators for the test binaries.

#include "zxlat/coeffgroup.hpp"
#include "zxlat/lattice.hpp"

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace test {

using zxlat::Int;
using zxlat::ZPoly;
using zxlat::ZxVec;

inline ZPoly P(const std::string& s) { return zxlat::parse_zpoly(s); }

inline ZxVec V(std::initializer_list<const char*> entries) {
    ZxVec v;
    for (const char* e : entries) v.push_back(P(e));
    return v;
}

// Columns of a matrix given by rows.
inline std::vector<ZxVec> from_rows(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<ZxVec> cols;
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (const char* e : row) {
            if (cols.size() <= c) cols.emplace_back();
            cols[c].resize(rows.size());
            cols[c][r] = P(e);
            ++c;
        }
        ++r;
    }
    return cols;
}

inline ZPoly random_poly(std::mt19937& rng, int max_deg, int bound) {
    std::uniform_int_distribution<int> deg(-1, max_deg), coef(-bound, bound);
    std::vector<Int> c;
    for (int d = deg(rng); d >= 0; --d) c.push_back(coef(rng));
    return ZPoly(std::move(c));
}

inline ZxVec random_vec(std::mt19937& rng, std::size_t n, int max_deg, int bound) {
    ZxVec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_poly(rng, max_deg, bound));
    return v;
}

// A nonzero random generating set of Z[x]^n.
inline std::vector<ZxVec> random_lattice(std::mt19937& rng, std::size_t n, std::size_t gens, int max_deg, int bound) {
    std::vector<ZxVec> out;
    while (out.size() < gens) {
        ZxVec v = random_vec(rng, n, max_deg, bound);
        if (!zxlat::is_zero(v)) out.push_back(v);
    }
    return out;
}

// Dot product sum_i u_i * cols[i] evaluated entrywise.
inline ZxVec apply(const std::vector<ZxVec>& cols, const ZxVec& u, std::size_t n) {
    return zxlat::combine(n, cols, u);
}

inline zxlat::Rat frac(long a, long b) {
    zxlat::Rat r(a, b);
    r.canonicalize();
    return r;
}

inline zxlat::LaurentQPoly lp(long lo, std::vector<zxlat::Rat> c) {
    zxlat::LaurentQPoly p{lo, std::move(c)};
    p.canonicalize();
    return p;
}

// Random coefficient with torsion, rational and transcendental parts.
inline zxlat::CoeffElem random_coeff(std::mt19937& rng) {
    using zxlat::CoeffElem;
    std::uniform_int_distribution<int> m(1, 12), small(-3, 3), pick(0, 2);
    CoeffElem c = CoeffElem::root_of_unity(frac(small(rng) + 3, m(rng)));
    for (long p : {2, 3, 5})
        if (pick(rng) == 0) c = c * zxlat::pow_int(CoeffElem::from_int(p), small(rng));
    if (pick(rng) != 0) c = c * CoeffElem::from_rational(frac(1, m(rng) + 1));
    for (const char* name : {"lambda", "mu"})
        if (pick(rng) != 0) {
            std::vector<zxlat::Rat> co;
            for (int i = 0, d = pick(rng); i <= d; ++i) co.push_back(frac(small(rng), 1 + pick(rng)));
            auto e = lp(small(rng), co);
            if (!e.is_zero()) c = c * CoeffElem::generator(name, e);
        }
    return c;
}

inline bool equal_up_to_sign(const ZxVec& a, const ZxVec& b) { return a == b || a == -b; }

} // namespace test

#pragma once

#include "zxlat/zpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace zxlat {

// sum_i coeffs[i] * x^(lo + i) with rational coefficients. Canonical form has
// nonzero first and last coefficients; zero is {0, {}}.
struct LaurentQPoly {
    long lo = 0;
    std::vector<Rat> coeffs;

    static LaurentQPoly monomial(const Rat& c, long e);
    bool is_zero() const { return coeffs.empty(); }
    void canonicalize();
    bool operator==(const LaurentQPoly& o) const { return lo == o.lo && coeffs == o.coeffs; }
};

LaurentQPoly operator+(const LaurentQPoly& a, const LaurentQPoly& b);
LaurentQPoly operator-(const LaurentQPoly& a);
LaurentQPoly operator*(const LaurentQPoly& a, const ZPoly& p);
LaurentQPoly operator*(const LaurentQPoly& a, const Rat& r);

// Element of roots of unity x positive rationals x free abelian group on
// named generators with Z[x]-exponents. sigma acts on roots of unity through
// the family u (zeta -> zeta^u), fixes rationals and shifts generator exponents.
struct CoeffElem {
    Rat torsion;                                 // j/m in [0, 1): zeta_m^j
    std::map<Int, Rat> rational;                 // prime -> nonzero exponent
    std::map<std::string, LaurentQPoly> trans;   // generator -> nonzero exponent

    static CoeffElem one() { return {}; }
    // Throws std::invalid_argument for zero.
    static CoeffElem from_rational(const Rat& q);
    static CoeffElem from_int(const Int& v) { return from_rational(Rat(v)); }
    static CoeffElem root_of_unity(const Rat& fraction);
    // name^(x^shift); the name must be nonempty.
    static CoeffElem generator(const std::string& name, const LaurentQPoly& exponent = LaurentQPoly::monomial(1, 0));

    bool is_one() const { return torsion == 0 && rational.empty() && trans.empty(); }
    bool operator==(const CoeffElem& o) const {
        return torsion == o.torsion && rational == o.rational && trans == o.trans;
    }
    bool operator!=(const CoeffElem& o) const { return !(*this == o); }
};

CoeffElem operator*(const CoeffElem& a, const CoeffElem& b);
CoeffElem inv(const CoeffElem& a);
CoeffElem operator/(const CoeffElem& a, const CoeffElem& b);

// Throws std::invalid_argument unless family is +1 or -1.
void check_family(int family);

// a^p for p in Z[x].
CoeffElem pow_by(const CoeffElem& c, const ZPoly& p, int family);
CoeffElem pow_int(const CoeffElem& c, const Int& k);
// sigma^k(c) for any integer k.
CoeffElem sigma_shift(const CoeffElem& c, long k, int family);
// All k-th roots, ordered by the added torsion offset l/k, l = 0..k-1.
std::vector<CoeffElem> kth_roots(const CoeffElem& c, unsigned long k);

std::string to_string(const CoeffElem& c);

} // namespace zxlat

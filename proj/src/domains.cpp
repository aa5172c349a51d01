#include "zxlat/domains.hpp"

namespace zxlat {

QPoly to_qpoly(const ZPoly& f) {
    QPoly r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) r.emplace_back(c);
    return r;
}

FpPoly to_fppoly(const PrimeField& k, const ZPoly& f) {
    FpPoly r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) r.push_back(k.reduce(c));
    FpPolyRing(k).trim(r);
    return r;
}

ZPoly lift_fppoly(const PrimeField& k, const FpPoly& f, bool symmetric) {
    std::vector<Int> c;
    c.reserve(f.size());
    for (auto v : f) {
        std::int64_t w = v;
        if (symmetric && w > k.p / 2) w -= k.p;
        c.emplace_back(static_cast<long>(w));
    }
    return ZPoly(std::move(c));
}

ZPoly clear_denominators(const QPoly& f, Int* multiplier) {
    Int l = 1;
    for (const auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> out;
    out.reserve(f.size());
    for (const auto& c : f) {
        Rat v = c * l;
        out.push_back(v.get_num());
    }
    if (multiplier) *multiplier = l;
    return ZPoly(std::move(out));
}

} // namespace zxlat

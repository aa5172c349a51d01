#include "zxlat/coeffgroup.hpp"

#include "zxlat/factor.hpp"

#include <stdexcept>

namespace zxlat {

LaurentQPoly LaurentQPoly::monomial(const Rat& c, long e) {
    LaurentQPoly r{e, {c}};
    r.canonicalize();
    return r;
}

void LaurentQPoly::canonicalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    std::size_t z = 0;
    while (z < coeffs.size() && coeffs[z] == 0) ++z;
    if (z > 0) coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(z));
    lo = coeffs.empty() ? 0 : lo + static_cast<long>(z);
}

LaurentQPoly operator+(const LaurentQPoly& a, const LaurentQPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.lo, b.lo);
    long hi = std::max(a.lo + static_cast<long>(a.coeffs.size()), b.lo + static_cast<long>(b.coeffs.size()));
    LaurentQPoly r{lo, std::vector<Rat>(static_cast<std::size_t>(hi - lo))};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[static_cast<std::size_t>(a.lo - lo) + i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[static_cast<std::size_t>(b.lo - lo) + i] += b.coeffs[i];
    r.canonicalize();
    return r;
}

LaurentQPoly operator-(const LaurentQPoly& a) {
    LaurentQPoly r = a;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

LaurentQPoly operator*(const LaurentQPoly& a, const ZPoly& p) {
    if (a.is_zero() || p.is_zero()) return {};
    LaurentQPoly r{a.lo, std::vector<Rat>(a.coeffs.size() + p.coeffs().size() - 1)};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < p.coeffs().size(); ++j) r.coeffs[i + j] += a.coeffs[i] * Rat(p.coeffs()[j]);
    r.canonicalize();
    return r;
}

LaurentQPoly operator*(const LaurentQPoly& a, const Rat& q) {
    LaurentQPoly r = a;
    for (auto& c : r.coeffs) c *= q;
    r.canonicalize();
    return r;
}

namespace {

Rat frac_part(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rat r = q - Rat(f);
    r.canonicalize();
    return r;
}

void add_rational(std::map<Int, Rat>& m, const Int& p, const Rat& e) {
    Rat v = m[p] + e;
    if (v == 0)
        m.erase(p);
    else
        m[p] = v;
}

void add_trans(std::map<std::string, LaurentQPoly>& m, const std::string& name, const LaurentQPoly& e) {
    LaurentQPoly v = m[name] + e;
    if (v.is_zero())
        m.erase(name);
    else
        m[name] = v;
}

} // namespace

CoeffElem CoeffElem::from_rational(const Rat& q0) {
    Rat q = q0;
    q.canonicalize();
    if (q == 0) throw std::invalid_argument("zero is not a coefficient group element");
    CoeffElem c;
    if (q < 0) c.torsion = Rat(1, 2);
    Int num = abs(q.get_num()), den = q.get_den();
    for (const auto& [p, e] : prime_factors(num)) add_rational(c.rational, p, Rat(e));
    for (const auto& [p, e] : prime_factors(den)) add_rational(c.rational, p, Rat(-static_cast<long>(e)));
    return c;
}

CoeffElem CoeffElem::root_of_unity(const Rat& fraction) {
    CoeffElem c;
    c.torsion = frac_part(fraction);
    return c;
}

CoeffElem CoeffElem::generator(const std::string& name, const LaurentQPoly& exponent) {
    if (name.empty()) throw std::invalid_argument("generator name must be nonempty");
    CoeffElem c;
    if (!exponent.is_zero()) c.trans[name] = exponent;
    return c;
}

CoeffElem operator*(const CoeffElem& a, const CoeffElem& b) {
    CoeffElem r = a;
    r.torsion = frac_part(a.torsion + b.torsion);
    for (const auto& [p, e] : b.rational) add_rational(r.rational, p, e);
    for (const auto& [n, e] : b.trans) add_trans(r.trans, n, e);
    return r;
}

CoeffElem inv(const CoeffElem& a) {
    CoeffElem r;
    r.torsion = frac_part(-a.torsion);
    for (const auto& [p, e] : a.rational) r.rational[p] = -e;
    for (const auto& [n, e] : a.trans) r.trans[n] = -e;
    return r;
}

CoeffElem operator/(const CoeffElem& a, const CoeffElem& b) { return a * inv(b); }

void check_family(int family) {
    if (family != 1 && family != -1) throw std::invalid_argument("family must be +1 or -1");
}

CoeffElem pow_by(const CoeffElem& c, const ZPoly& p, int family) {
    check_family(family);
    CoeffElem r;
    r.torsion = frac_part(c.torsion * Rat(p.eval(Int(family))));
    Int at_one = p.eval(Int(1));
    if (at_one != 0)
        for (const auto& [q, e] : c.rational) r.rational[q] = e * Rat(at_one);
    for (const auto& [n, e] : c.trans) {
        LaurentQPoly v = e * p;
        if (!v.is_zero()) r.trans[n] = v;
    }
    return r;
}

CoeffElem pow_int(const CoeffElem& c, const Int& k) { return pow_by(c, ZPoly(k), 1); }

CoeffElem sigma_shift(const CoeffElem& c, long k, int family) {
    check_family(family);
    CoeffElem r = c;
    if (family == -1 && (k % 2 != 0)) r.torsion = frac_part(-c.torsion);
    for (auto& [n, e] : r.trans) {
        (void)n;
        e.lo += k;
    }
    return r;
}

std::vector<CoeffElem> kth_roots(const CoeffElem& c, unsigned long k) {
    if (k == 0) throw std::invalid_argument("kth_roots: k must be positive");
    const Rat inv_k(1, static_cast<long>(k));
    CoeffElem base;
    base.torsion = c.torsion * inv_k;
    base.torsion.canonicalize();
    for (const auto& [p, e] : c.rational) base.rational[p] = e * inv_k;
    for (const auto& [n, e] : c.trans) base.trans[n] = e * inv_k;
    std::vector<CoeffElem> out;
    for (unsigned long l = 0; l < k; ++l) {
        CoeffElem r = base;
        r.torsion = frac_part(base.torsion + Rat(static_cast<long>(l), static_cast<long>(k)));
        out.push_back(std::move(r));
    }
    return out;
}

std::string to_string(const CoeffElem& c) {
    if (c.is_one()) return "1";
    std::string s;
    auto sep = [&] {
        if (!s.empty()) s += "*";
    };
    if (c.torsion != 0) {
        s += c.torsion == Rat(1, 2) ? "(-1)" : "zeta(" + c.torsion.get_str() + ")";
    }
    for (const auto& [p, e] : c.rational) {
        sep();
        s += p.get_str();
        if (e != 1) s += "^(" + e.get_str() + ")";
    }
    for (const auto& [n, e] : c.trans) {
        sep();
        s += n + "^(";
        for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
            if (e.coeffs[i] == 0) continue;
            if (s.back() != '(') s += e.coeffs[i] > 0 ? "+" : "";
            s += e.coeffs[i].get_str() + "*x^" + std::to_string(e.lo + static_cast<long>(i));
        }
        s += ")";
    }
    return s;
}

} // namespace zxlat

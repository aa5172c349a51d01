#pragma once

#include "zxlat/zpoly.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zxlat {

// Each domain object supplies ring operations on its Elem type plus the
// Euclidean hooks used by the generic Hermite form:
//   norm_less(a, b)     a has strictly smaller Euclidean size than b
//   euclid_quot(a, b)   q with a - q*b smaller than b
//   reduce_quot(a, b)   q making a - q*b the canonical residue mod b
//   normalizer(a)       unit u with a*u in canonical (positive / monic) form

struct IntegerRing {
    using Elem = Int;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool norm_less(const Elem& a, const Elem& b) const { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
    Elem euclid_quot(const Elem& a, const Elem& b) const {
        Elem q;
        mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    Elem reduce_quot(const Elem& a, const Elem& b) const {
        Elem q;
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    Elem normalizer(const Elem& a) const { return sgn(a) < 0 ? -1 : 1; }
};

struct RationalField {
    using Elem = Rat;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }
    bool norm_less(const Elem&, const Elem&) const { return false; }
    Elem euclid_quot(const Elem& a, const Elem& b) const { return div(a, b); }
    Elem reduce_quot(const Elem& a, const Elem& b) const { return div(a, b); }
    Elem normalizer(const Elem& a) const { return inv(a); }
};

// Integers modulo a prime p < 2^62, residues kept in [0, p).
struct PrimeField {
    using Elem = std::int64_t;
    std::int64_t p;
    explicit PrimeField(std::int64_t prime) : p(prime) {
        if (prime < 2) throw std::invalid_argument("PrimeField: modulus must be a prime >= 2");
    }
    static PrimeField from_int(const Int& prime) {
        if (!prime.fits_slong_p() || prime > (Int(1) << 62))
            throw std::domain_error("prime modulus too large for PrimeField");
        return PrimeField(prime.get_si());
    }
    Elem reduce(const Int& a) const {
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p));
        return r.get_si();
    }
    Elem reduce(std::int64_t a) const {
        a %= p;
        return a < 0 ? a + p : a;
    }
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const {
        Elem r = a + b;
        return r >= p ? r - p : r;
    }
    Elem sub(Elem a, Elem b) const {
        Elem r = a - b;
        return r < 0 ? r + p : r;
    }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<__int128>(a) * b % p);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("inverse of zero mod p");
        return pow(a, static_cast<std::uint64_t>(p - 2));
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool norm_less(Elem, Elem) const { return false; }
    Elem euclid_quot(Elem a, Elem b) const { return div(a, b); }
    Elem reduce_quot(Elem a, Elem b) const { return div(a, b); }
    Elem normalizer(Elem a) const { return inv(a); }
};

// Univariate polynomials over a field K, dense little-endian, trimmed.
template <class K>
struct PolyRing {
    using Coef = typename K::Elem;
    using Elem = std::vector<Coef>;
    K k;
    explicit PolyRing(K field) : k(std::move(field)) {}

    void trim(Elem& a) const {
        while (!a.empty() && k.is_zero(a.back())) a.pop_back();
    }
    long degree(const Elem& a) const { return static_cast<long>(a.size()) - 1; }
    Elem zero() const { return {}; }
    Elem one() const { return Elem{k.one()}; }
    Elem constant(const Coef& c) const {
        Elem r{c};
        trim(r);
        return r;
    }
    Elem monomial(const Coef& c, std::size_t d) const {
        if (k.is_zero(c)) return {};
        Elem r(d + 1, k.zero());
        r[d] = c;
        return r;
    }
    bool is_zero(const Elem& a) const { return a.empty(); }
    bool eq(const Elem& a, const Elem& b) const {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!k.eq(a[i], b[i])) return false;
        return true;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r(std::max(a.size(), b.size()), k.zero());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
        trim(r);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(a.size(), k.zero());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.neg(a[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem mul(const Elem& a, const Elem& b) const {
        if (a.empty() || b.empty()) return {};
        Elem r(a.size() + b.size() - 1, k.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (k.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
        }
        trim(r);
        return r;
    }
    Elem scale(const Elem& a, const Coef& c) const {
        Elem r(a.size(), k.zero());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.mul(a[i], c);
        trim(r);
        return r;
    }
    std::pair<Elem, Elem> divrem(const Elem& a, const Elem& b) const {
        if (b.empty()) throw std::domain_error("polynomial division by zero");
        Elem r = a;
        if (a.size() < b.size()) return {Elem{}, r};
        Elem q(a.size() - b.size() + 1, k.zero());
        const Coef inv_lc = k.inv(b.back());
        for (std::size_t i = q.size(); i-- > 0;) {
            const Coef t = k.mul(r[i + b.size() - 1], inv_lc);
            q[i] = t;
            if (k.is_zero(t)) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.sub(r[i + j], k.mul(t, b[j]));
        }
        trim(q);
        trim(r);
        return {q, r};
    }
    Elem rem(const Elem& a, const Elem& b) const { return divrem(a, b).second; }
    Elem monic(const Elem& a) const {
        if (a.empty()) return a;
        return scale(a, k.inv(a.back()));
    }
    Elem gcd(Elem a, Elem b) const {
        while (!b.empty()) {
            Elem r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    // Returns (g, s, t) with s*a + t*b = g monic (or zero).
    struct Bezout {
        Elem g, s, t;
    };
    Bezout ext_gcd(const Elem& a, const Elem& b) const {
        Elem r0 = a, r1 = b, s0 = one(), s1 = zero(), t0 = zero(), t1 = one();
        while (!r1.empty()) {
            auto [q, r] = divrem(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            Elem s2 = sub(s0, mul(q, s1));
            s0 = std::move(s1);
            s1 = std::move(s2);
            Elem t2 = sub(t0, mul(q, t1));
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.empty()) return {r0, s0, t0};
        const Coef u = k.inv(r0.back());
        return {scale(r0, u), scale(s0, u), scale(t0, u)};
    }
    Elem derivative(const Elem& a) const {
        if (a.size() <= 1) return {};
        Elem r(a.size() - 1, k.zero());
        for (std::size_t i = 1; i < a.size(); ++i) {
            Coef m = k.zero();
            for (std::size_t j = 0; j < i; ++j) m = k.add(m, a[i]);
            r[i - 1] = m;
        }
        trim(r);
        return r;
    }
    bool norm_less(const Elem& a, const Elem& b) const { return a.size() < b.size(); }
    Elem euclid_quot(const Elem& a, const Elem& b) const { return divrem(a, b).first; }
    Elem reduce_quot(const Elem& a, const Elem& b) const { return divrem(a, b).first; }
    Elem normalizer(const Elem& a) const { return Elem{k.inv(a.back())}; }
};

using QPolyRing = PolyRing<RationalField>;
using QPoly = QPolyRing::Elem;
using FpPolyRing = PolyRing<PrimeField>;
using FpPoly = FpPolyRing::Elem;

// The field Q[x]/(m(x)) for an irreducible m; elements have degree < deg m.
struct QuotientField {
    using Elem = QPoly;
    QPolyRing ring{RationalField{}};
    QPoly modulus;
    explicit QuotientField(QPoly m) : modulus(std::move(m)) {
        if (ring.degree(modulus) < 1) throw std::invalid_argument("QuotientField: modulus must have degree >= 1");
    }
    Elem reduce(const Elem& a) const { return ring.rem(a, modulus); }
    Elem zero() const { return {}; }
    Elem one() const { return ring.one(); }
    bool is_zero(const Elem& a) const { return a.empty(); }
    bool eq(const Elem& a, const Elem& b) const { return ring.eq(a, b); }
    Elem add(const Elem& a, const Elem& b) const { return ring.add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return ring.sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(ring.mul(a, b)); }
    Elem neg(const Elem& a) const { return ring.neg(a); }
    Elem inv(const Elem& a) const {
        if (a.empty()) throw std::domain_error("inverse of zero in Q[x]/(p)");
        auto bz = ring.ext_gcd(a, modulus);
        if (ring.degree(bz.g) != 0) throw std::domain_error("element not invertible: modulus is reducible");
        return reduce(bz.s);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool norm_less(const Elem&, const Elem&) const { return false; }
    Elem euclid_quot(const Elem& a, const Elem& b) const { return div(a, b); }
    Elem reduce_quot(const Elem& a, const Elem& b) const { return div(a, b); }
    Elem normalizer(const Elem& a) const { return inv(a); }
};

// Conversions between Z[x] and the other polynomial domains.
QPoly to_qpoly(const ZPoly& f);
FpPoly to_fppoly(const PrimeField& k, const ZPoly& f);
// Lift residues to [0, p) or, when symmetric, to (-p/2, p/2].
ZPoly lift_fppoly(const PrimeField& k, const FpPoly& f, bool symmetric = false);
// Multiply by the lcm of denominators; returns the integer polynomial and the multiplier.
ZPoly clear_denominators(const QPoly& f, Int* multiplier = nullptr);

// Row-major dense matrix.
template <class E>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<E> data;
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, const E& fill) : rows(r), cols(c), data(r * c, fill) {}
    E& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const E& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    std::vector<E> column(std::size_t c) const {
        std::vector<E> v(rows);
        for (std::size_t r = 0; r < rows; ++r) v[r] = (*this)(r, c);
        return v;
    }
    void set_column(std::size_t c, const std::vector<E>& v) {
        for (std::size_t r = 0; r < rows; ++r) (*this)(r, c) = v[r];
    }
};

template <class D>
Matrix<typename D::Elem> matrix_from_columns(const D& d, std::size_t rows,
                                             const std::vector<std::vector<typename D::Elem>>& cols) {
    Matrix<typename D::Elem> m(rows, cols.size(), d.zero());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("matrix_from_columns: ragged columns");
        m.set_column(c, cols[c]);
    }
    return m;
}

template <class D>
Matrix<typename D::Elem> mat_mul(const D& d, const Matrix<typename D::Elem>& a, const Matrix<typename D::Elem>& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    Matrix<typename D::Elem> r(a.rows, b.cols, d.zero());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) {
            typename D::Elem s = d.zero();
            for (std::size_t k = 0; k < a.cols; ++k) s = d.add(s, d.mul(a(i, k), b(k, j)));
            r(i, j) = s;
        }
    return r;
}

template <class D>
std::vector<typename D::Elem> mat_vec(const D& d, const Matrix<typename D::Elem>& a,
                                      const std::vector<typename D::Elem>& v) {
    if (a.cols != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<typename D::Elem> r(a.rows, d.zero());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) r[i] = d.add(r[i], d.mul(a(i, k), v[k]));
    return r;
}

} // namespace zxlat

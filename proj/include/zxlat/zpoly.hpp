#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace zxlat {

using Int = mpz_class;
using Rat = mpq_class;

// Dense univariate polynomial over Z. coeffs()[i] is the coefficient of x^i;
// the highest stored coefficient is nonzero, the zero polynomial is empty.
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(int c);
    ZPoly(long c);
    ZPoly(const Int& c);
    ZPoly(std::initializer_list<long> coeffs);
    explicit ZPoly(std::vector<Int> coeffs);

    static ZPoly monomial(const Int& c, std::size_t k);
    static ZPoly x() { return monomial(1, 1); }

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    // Lowest degree with a nonzero coefficient; 0 for the zero polynomial.
    std::size_t low_degree() const;
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int& lc() const;
    Int eval(const Int& v) const;

    void set_coeff(std::size_t i, const Int& v);

    ZPoly operator-() const;
    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly& operator*=(const ZPoly& o);
    ZPoly& operator*=(const Int& k);

    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(ZPoly a, const Int& k) { return a *= k; }
    friend ZPoly operator*(const Int& k, ZPoly a) { return a *= k; }
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    // Multiply by x^k.
    ZPoly shift(std::size_t k) const;
    // Divide by x^k; the low k coefficients must vanish.
    ZPoly unshift(std::size_t k) const;
    // Exact division of every coefficient by k.
    ZPoly divexact(const Int& k) const;
    ZPoly derivative() const;

    // Nonnegative gcd of the coefficients.
    Int content() const;
    // this / content(), sign kept.
    ZPoly primitive_part() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Int> c_;
};

// Lexicographic comparison by degree, then coefficients from the top.
bool poly_less(const ZPoly& a, const ZPoly& b);

// Exact quotient a / b over Z, or false when b does not divide a.
bool divides_exact(const ZPoly& a, const ZPoly& b, ZPoly* quotient);

// Parse strings such as "2*x^2-1", "x", "-3", "4x+1".
ZPoly parse_zpoly(const std::string& text);

} // namespace zxlat

#include "zxlat/zpoly.hpp"

#include <cctype>
#include <stdexcept>

namespace zxlat {

ZPoly::ZPoly(int c) : ZPoly(Int(c)) {}
ZPoly::ZPoly(long c) : ZPoly(Int(c)) {}

ZPoly::ZPoly(const Int& c) {
    if (c != 0) c_.push_back(c);
}

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

ZPoly::ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(const Int& c, std::size_t k) {
    ZPoly r;
    if (c == 0) return r;
    r.c_.assign(k + 1, Int(0));
    r.c_[k] = c;
    return r;
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t ZPoly::low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return i;
    return 0;
}

const Int& ZPoly::lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Int ZPoly::eval(const Int& v) const {
    Int r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
    return r;
}

void ZPoly::set_coeff(std::size_t i, const Int& v) {
    if (i >= c_.size()) {
        if (v == 0) return;
        c_.resize(i + 1, Int(0));
    }
    c_[i] = v;
    trim();
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return ZPoly(std::move(r));
}

ZPoly& ZPoly::operator*=(const ZPoly& o) { return *this = *this * o; }

ZPoly& ZPoly::operator*=(const Int& k) {
    if (k == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= k;
    return *this;
}

ZPoly ZPoly::shift(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    ZPoly r;
    r.c_.assign(k, Int(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

ZPoly ZPoly::unshift(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    for (std::size_t i = 0; i < k && i < c_.size(); ++i)
        if (c_[i] != 0) throw std::domain_error("unshift: polynomial not divisible by x^k");
    if (k >= c_.size()) return {};
    return ZPoly(std::vector<Int>(c_.begin() + static_cast<long>(k), c_.end()));
}

ZPoly ZPoly::divexact(const Int& k) const {
    if (k == 0) throw std::domain_error("division by zero");
    ZPoly r = *this;
    for (auto& v : r.c_) {
        if (!mpz_divisible_p(v.get_mpz_t(), k.get_mpz_t()))
            throw std::domain_error("divexact: coefficient not divisible");
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
    }
    return r;
}

ZPoly ZPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return ZPoly(std::move(r));
}

Int ZPoly::content() const {
    Int g = 0;
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return {};
    return divexact(content());
}

std::string ZPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Int& v = c_[i];
        if (v == 0) continue;
        Int a = abs(v);
        if (out.empty()) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        bool unit = (a == 1);
        if (i == 0 || !unit) out += a.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

bool poly_less(const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        int c = cmp(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool divides_exact(const ZPoly& a, const ZPoly& b, ZPoly* quotient) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) {
        if (quotient) *quotient = ZPoly();
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<Int> r = a.coeffs();
    std::vector<Int> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Int(0));
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const Int& lb = b.lc();
    for (std::size_t k = q.size(); k-- > 0;) {
        Int& top = r[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
        Int t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        q[k] = t;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] -= t * b.coeffs()[j];
    }
    for (const auto& v : r)
        if (v != 0) return false;
    if (quotient) *quotient = ZPoly(std::move(q));
    return true;
}

ZPoly parse_zpoly(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& why) -> ZPoly {
        throw std::invalid_argument("cannot parse polynomial \"" + text + "\": " + why);
    };
    auto read_int = [&](Int& out) {
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) return false;
        out = Int(text.substr(start, i - start));
        return true;
    };
    ZPoly result;
    skip();
    if (i == n) return fail("empty input");
    bool first = true;
    while (true) {
        skip();
        if (i == n) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            return fail("expected '+' or '-'");
        }
        first = false;
        Int coef = 1;
        bool have_coef = read_int(coef);
        skip();
        std::size_t power = 0;
        bool have_var = false;
        if (i < n && text[i] == '*') {
            if (!have_coef) return fail("dangling '*'");
            ++i;
            skip();
            if (i >= n || text[i] != 'x') return fail("expected x after '*'");
        }
        if (i < n && text[i] == 'x') {
            have_var = true;
            ++i;
            power = 1;
            skip();
            if (i < n && text[i] == '^') {
                ++i;
                skip();
                Int e;
                if (!read_int(e)) return fail("expected exponent");
                if (!e.fits_ulong_p() || e > 4096) return fail("exponent too large");
                power = e.get_ui();
            }
        }
        if (!have_coef && !have_var) return fail("expected a term");
        result += ZPoly::monomial(sign * coef, power);
    }
    return result;
}

} // namespace zxlat

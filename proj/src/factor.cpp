#include "zxlat/factor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace zxlat {

namespace {

// ---- Z_p[x] helpers -------------------------------------------------------

FpPoly powmod(const FpPolyRing& R, FpPoly base, const Int& e, const FpPoly& mod) {
    FpPoly r = R.one();
    base = R.rem(base, mod);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = R.rem(R.mul(r, r), mod);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = R.rem(R.mul(r, base), mod);
    }
    return r;
}

FpPoly random_poly(const FpPolyRing& R, std::mt19937_64& rng, long max_deg) {
    std::uniform_int_distribution<std::int64_t> dist(0, R.k.p - 1);
    FpPoly a(static_cast<std::size_t>(max_deg + 1));
    for (auto& c : a) c = dist(rng);
    R.trim(a);
    return a;
}

// Cantor-Zassenhaus splitting of a product of distinct degree-d irreducibles.
void equal_degree_split(const FpPolyRing& R, const FpPoly& g, long d, std::mt19937_64& rng,
                        std::vector<FpPoly>& out) {
    const long n = R.degree(g);
    if (n == d) {
        out.push_back(R.monic(g));
        return;
    }
    const std::int64_t p = R.k.p;
    Int half;
    if (p != 2) {
        Int pd;
        mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
        half = (pd - 1) / 2;
    }
    while (true) {
        FpPoly a = random_poly(R, rng, n - 1);
        if (R.degree(a) < 1) continue;
        FpPoly b;
        if (p == 2) {
            // Trace map a + a^2 + ... + a^(2^(m-1)) with m = d.
            FpPoly t = a, acc = a;
            for (long i = 1; i < d; ++i) {
                t = R.rem(R.mul(t, t), g);
                acc = R.add(acc, t);
            }
            b = acc;
        } else {
            b = R.sub(powmod(R, a, half, g), R.one());
        }
        FpPoly h = R.gcd(b, g);
        long dh = R.degree(h);
        if (dh > 0 && dh < n) {
            equal_degree_split(R, h, d, rng, out);
            equal_degree_split(R, R.divrem(g, h).first, d, rng, out);
            return;
        }
    }
}

bool fp_less(const FpPoly& a, const FpPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// ---- integer helpers -------------------------------------------------------

Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

ZPoly reduce_mod(const ZPoly& f, const Int& m, bool symmetric) {
    std::vector<Int> c;
    c.reserve(f.coeffs().size());
    Int half = m / 2;
    for (const auto& v : f.coeffs()) {
        Int r = mod_pos(v, m);
        if (symmetric && r > half) r -= m;
        c.push_back(r);
    }
    return ZPoly(std::move(c));
}

ZPoly lift(const FpPoly& f) {
    std::vector<Int> c;
    for (auto v : f) c.emplace_back(static_cast<long>(v));
    return ZPoly(std::move(c));
}

// Lifts g = u0*w0 (mod p), u0 monic, to g = u*w (mod p^K).
std::pair<ZPoly, ZPoly> hensel_two(const PrimeField& k, const ZPoly& g, const FpPoly& u0, const FpPoly& w0,
                                   unsigned K) {
    FpPolyRing R(k);
    auto bz = R.ext_gcd(u0, w0);
    if (R.degree(bz.g) != 0) throw std::logic_error("hensel_two: factors not coprime");
    ZPoly u = lift(u0), w = lift(w0);
    Int M = k.p;
    for (unsigned step = 1; step < K; ++step) {
        ZPoly e = g - u * w;
        e = e.divexact(M);
        FpPoly ep = to_fppoly(k, e);
        auto [q, r] = R.divrem(R.mul(bz.t, ep), u0);
        FpPoly dw = R.add(R.mul(bz.s, ep), R.mul(q, w0));
        u += lift(r) * M;
        w += lift(dw) * M;
        M *= k.p;
        u = reduce_mod(u, M, false);
        w = reduce_mod(w, M, false);
    }
    return {u, w};
}

std::vector<ZPoly> hensel_multi(const PrimeField& k, const ZPoly& g, const std::vector<FpPoly>& fs, unsigned K,
                                const Int& PK) {
    if (fs.size() == 1) {
        Int inv;
        Int lc = mod_pos(g.lc(), PK);
        if (!mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), PK.get_mpz_t()))
            throw std::logic_error("hensel_multi: leading coefficient not invertible");
        return {reduce_mod(g * inv, PK, false)};
    }
    FpPolyRing R(k);
    FpPoly w0 = R.constant(k.reduce(g.lc()));
    for (std::size_t i = 1; i < fs.size(); ++i) w0 = R.mul(w0, fs[i]);
    auto [U, W] = hensel_two(k, g, fs[0], w0, K);
    std::vector<FpPoly> rest(fs.begin() + 1, fs.end());
    std::vector<ZPoly> out{U};
    auto tail = hensel_multi(k, W, rest, K, PK);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

bool is_small_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void normalize_sign(ZPoly& f) {
    if (!f.is_zero() && f.lc() < 0) f = -f;
}

// Irreducible factors of a squarefree primitive g with positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& g) {
    const long n = g.degree();
    if (n <= 1) return {g};
    // Choose among a few good primes the one giving the fewest modular factors.
    std::vector<FpPoly> best;
    std::int64_t best_p = 0;
    int good = 0;
    for (std::int64_t p = 3; good < 5 && p < 100000; p += 2) {
        if (!is_small_prime(p)) continue;
        PrimeField k(p);
        if (k.reduce(g.lc()) == 0) continue;
        FpPolyRing R(k);
        FpPoly gp = to_fppoly(k, g);
        if (R.degree(R.gcd(gp, R.derivative(gp))) != 0) continue;
        ++good;
        auto fs = factor_squarefree_mod_p(k, R.monic(gp));
        if (best_p == 0 || fs.size() < best.size()) {
            best = fs;
            best_p = p;
        }
        if (best.size() == 1) break;
    }
    if (best_p == 0) throw std::runtime_error("factor: no suitable prime found");
    if (best.size() == 1) return {g};

    PrimeField k(best_p);
    // Coefficient bound for lc(g) times any factor of g.
    Int maxabs = 0;
    for (const auto& c : g.coeffs())
        if (abs(c) > maxabs) maxabs = abs(c);
    Int B = abs(g.lc()) * maxabs * (n + 1);
    B <<= static_cast<mp_bitcnt_t>(n);
    unsigned K = 1;
    Int PK = best_p;
    while (PK <= 2 * B) {
        PK *= best_p;
        ++K;
    }
    std::vector<ZPoly> lifted = hensel_multi(k, g, best, K, PK);

    std::vector<ZPoly> result;
    ZPoly rest = g;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            ZPoly cand(rest.lc());
            for (auto i : idx) cand = reduce_mod(cand * lifted[i], PK, true);
            cand = cand.primitive_part();
            normalize_sign(cand);
            ZPoly q;
            if (cand.degree() > 0 && divides_exact(rest, cand, &q)) {
                result.push_back(cand);
                rest = q;
                std::vector<ZPoly> remaining;
                for (std::size_t i = 0; i < lifted.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) remaining.push_back(lifted[i]);
                lifted = std::move(remaining);
                found = true;
                break;
            }
            // next combination
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == lifted.size() - s + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++s;
    }
    normalize_sign(rest);
    if (rest.degree() > 0) result.push_back(rest);
    return result;
}

Int pollard_rho(const Int& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        auto f = [&](const Int& v) { return mod_pos(v * v + c, n); };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            Int diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_int_rec(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_int_rec(d, out);
    factor_int_rec(n / d, out);
}

} // namespace

std::vector<FpPoly> factor_squarefree_mod_p(const PrimeField& k, const FpPoly& f_in) {
    FpPolyRing R(k);
    FpPoly f = R.monic(f_in);
    std::vector<FpPoly> out;
    if (R.degree(f) < 1) return out;
    std::mt19937_64 rng(0x5eed1234u);
    const FpPoly x = R.monomial(k.one(), 1);
    FpPoly h = x;
    for (long d = 1; 2 * d <= R.degree(f); ++d) {
        h = powmod(R, h, Int(static_cast<long>(k.p)), f);
        FpPoly g = R.gcd(R.sub(h, x), f);
        if (R.degree(g) > 0) {
            equal_degree_split(R, g, d, rng, out);
            f = R.divrem(f, g).first;
            h = R.rem(h, f);
        }
    }
    if (R.degree(f) > 0) out.push_back(R.monic(f));
    std::sort(out.begin(), out.end(), fp_less);
    return out;
}

std::vector<std::pair<ZPoly, unsigned>> squarefree_decomposition(const ZPoly& f) {
    std::vector<std::pair<ZPoly, unsigned>> out;
    if (f.degree() < 1) return out;
    QPolyRing R{RationalField{}};
    QPoly F = to_qpoly(f);
    QPoly dF = R.derivative(F);
    QPoly a0 = R.gcd(F, dF);
    QPoly b = R.divrem(F, a0).first;
    QPoly c = R.divrem(dF, a0).first;
    QPoly d = R.sub(c, R.derivative(b));
    for (unsigned i = 1; R.degree(b) > 0; ++i) {
        QPoly a = R.gcd(b, d);
        b = R.divrem(b, a).first;
        c = R.divrem(d, a).first;
        d = R.sub(c, R.derivative(b));
        if (R.degree(a) > 0) {
            ZPoly z = clear_denominators(a).primitive_part();
            normalize_sign(z);
            out.emplace_back(z, i);
        }
    }
    return out;
}

Factorization factor_over_Q(const ZPoly& f, long degree_cap) {
    if (f.is_zero()) throw std::domain_error("factor_over_Q: zero polynomial");
    if (f.degree() > degree_cap)
        throw std::domain_error("factor_over_Q: degree " + std::to_string(f.degree()) + " exceeds cap " +
                                std::to_string(degree_cap));
    Factorization out;
    out.content = f.content();
    if (f.lc() < 0) out.content = -out.content;
    ZPoly pp = f.divexact(out.content);
    for (const auto& [a, mult] : squarefree_decomposition(pp))
        for (const auto& h : zassenhaus(a)) out.factors.emplace_back(h, mult);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
    return out;
}

std::vector<std::pair<Int, unsigned>> prime_factors(const Int& n_in) {
    if (n_in < 1) throw std::domain_error("prime_factors: argument must be positive");
    std::map<Int, unsigned> acc;
    Int n = n_in;
    for (unsigned long d = 2; d < 10000; d += (d == 2 ? 1 : 2)) {
        if (Int(d) * d > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            ++acc[Int(d)];
            n /= d;
        }
    }
    factor_int_rec(n, acc);
    return {acc.begin(), acc.end()};
}

} // namespace zxlat

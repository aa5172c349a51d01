#include "zxlat/saturation.hpp"

#include "zxlat/factor.hpp"
#include "zxlat/hnf.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace zxlat {

namespace {

std::size_t lattice_dim(const Ghnf& b) { return b.n; }

void negate(SaturationWitness& w) {
    w.h = -w.h;
    for (auto& c : w.combination) c = -c;
}

bool has_h(const std::vector<SaturationWitness>& ws, const ZxVec& h) {
    return std::any_of(ws.begin(), ws.end(), [&](const SaturationWitness& w) { return w.h == h; });
}

// Reduces h by the basis, adjusting the combination, and accepts the witness
// when h stays outside the lattice while multiplier * h lies inside.
bool finish_witness(const Ghnf& b, SaturationWitness& w, bool reduce_h) {
    if (reduce_h) {
        Reduction red = reduce(w.h, b.columns);
        w.h = std::move(red.remainder);
        for (std::size_t j = 0; j < b.columns.size(); ++j)
            if (!red.quotients[j].is_zero()) w.combination[j] -= w.multiplier * red.quotients[j];
    }
    if (is_zero(w.h) || contains(b, w.h)) return false;
    if (!is_normal(w.h)) negate(w);
    if (!contains(b, w.multiplier * w.h)) return false;
    return combine(lattice_dim(b), b.columns, w.combination) == w.multiplier * w.h;
}

} // namespace

std::vector<SaturationWitness> xfactor_with_kernel(const Ghnf& b, const std::vector<std::vector<Int>>& kernel) {
    std::vector<SaturationWitness> out;
    const std::size_t s = b.columns.size();
    for (const auto& g : kernel) {
        if (g.size() != s) throw std::invalid_argument("xfactor: kernel vector has wrong length");
        std::vector<ZPoly> comb(s);
        for (std::size_t j = 0; j < s; ++j) comb[j] = ZPoly(g[j]);
        ZxVec v = combine(b.n, b.columns, comb);
        if (is_zero(v)) continue;
        std::size_t k = SIZE_MAX;
        for (const auto& p : v)
            if (!p.is_zero()) k = std::min(k, p.low_degree());
        SaturationWitness w;
        w.kind = MultiplierKind::XPower;
        w.x_power = k;
        w.multiplier = ZPoly::monomial(1, k);
        w.h = ZxVec(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w.h[i] = v[i].unshift(k);
        w.combination = comb;
        if (k == 0) continue;
        if (finish_witness(b, w, true) && !has_h(out, w.h)) out.push_back(std::move(w));
    }
    return out;
}

std::vector<SaturationWitness> xfactor(const Ghnf& b) {
    if (b.columns.empty()) return {};
    IntegerRing Z;
    Matrix<Int> F(b.n, b.columns.size(), Int(0));
    for (std::size_t j = 0; j < b.columns.size(); ++j)
        for (std::size_t i = 0; i < b.n; ++i) F(i, j) = b.columns[j][i].coeff(0);
    return xfactor_with_kernel(b, kernel(Z, F));
}

namespace {

std::vector<SaturationWitness> zfactor_prime(const Ghnf& b, const Int& prime) {
    const PrimeField k = PrimeField::from_int(prime);
    const FpPolyRing R{k};
    const std::size_t n = b.n, s = b.columns.size();
    const auto blocks = b.blocks();
    const std::size_t t = blocks.size();
    std::vector<std::size_t> last(t);
    for (std::size_t i = 0; i < t; ++i) last[i] = blocks[i].first + blocks[i].size - 1;

    std::vector<SaturationWitness> out;
    // build(symmetric) returns (v, combination) with v = 0 mod p.
    using Builder = std::function<std::pair<ZxVec, std::vector<ZPoly>>(bool)>;
    auto attempt = [&](const Builder& build) {
        for (bool symmetric : {false, true}) {
            auto [v, comb] = build(symmetric);
            if (is_zero(v)) continue;
            SaturationWitness w;
            w.kind = MultiplierKind::Prime;
            w.prime = prime;
            w.multiplier = ZPoly(prime);
            w.h = ZxVec(n);
            bool divisible = true;
            for (std::size_t i = 0; i < n && divisible; ++i) {
                for (const auto& c : v[i].coeffs())
                    if (!mpz_divisible_p(c.get_mpz_t(), prime.get_mpz_t())) divisible = false;
                if (divisible) w.h[i] = v[i].divexact(prime);
            }
            if (!divisible) continue;
            w.combination = std::move(comb);
            if (finish_witness(b, w, true)) {
                if (!has_h(out, w.h)) out.push_back(std::move(w));
                return;
            }
        }
    };

    Matrix<FpPoly> F(n, t, FpPoly{});
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t r = 0; r < n; ++r) F(r, i) = to_fppoly(k, b.columns[last[i]][r]);
    auto H = hnf(R, F);

    // Linear dependence of the last columns over Z_p[x].
    for (std::size_t j = 0; j < H.zero_columns; ++j) {
        auto g = H.U.column(j);
        attempt([&](bool sym) {
            std::vector<ZPoly> comb(s);
            for (std::size_t i = 0; i < t; ++i) comb[last[i]] = lift_fppoly(k, g[i], sym);
            return std::make_pair(combine(n, b.columns, comb), comb);
        });
    }
    if (!out.empty()) return out;

    // Integer images of the pivot columns of the Hermite form over Z_p[x].
    const std::size_t npiv = H.pivot_rows.size();
    std::vector<std::vector<ZPoly>> bz_comb[2];
    for (int sym = 0; sym < 2; ++sym)
        for (std::size_t c = 0; c < npiv; ++c) {
            std::vector<ZPoly> comb(s);
            for (std::size_t j = 0; j < t; ++j)
                comb[last[j]] = lift_fppoly(k, H.U(j, H.zero_columns + c), sym == 1);
            bz_comb[sym].push_back(comb);
        }

    struct Residue {
        ExtensionElement e;
        std::vector<FpPoly> rem;
        std::vector<FpPoly> q;
    };
    std::vector<Residue> residues;
    for (const auto& e : extension_elements(b)) {
        Residue res{e, std::vector<FpPoly>(n), std::vector<FpPoly>(npiv)};
        for (std::size_t r = 0; r < n; ++r) res.rem[r] = to_fppoly(k, e.v[r]);
        for (std::size_t i = npiv; i-- > 0;) {
            std::size_t r = H.pivot_rows[i], c = H.zero_columns + i;
            if (res.rem[r].empty()) continue;
            auto [qq, rr] = R.divrem(res.rem[r], H.H(r, c));
            if (qq.empty()) continue;
            for (std::size_t row = 0; row <= r; ++row)
                res.rem[row] = R.sub(res.rem[row], R.mul(qq, H.H(row, c)));
            res.q[i] = R.add(res.q[i], qq);
        }
        residues.push_back(std::move(res));
    }
    // The integer vector e - sum lift(q_i) * B_i and its combination.
    auto integer_residue = [&](const Residue& res, bool sym) {
        std::vector<ZPoly> comb(s);
        comb[res.e.column] = ZPoly::monomial(1, res.e.shift);
        for (std::size_t i = 0; i < npiv; ++i) {
            if (res.q[i].empty()) continue;
            ZPoly q = lift_fppoly(k, res.q[i], sym);
            const auto& bc = bz_comb[sym ? 1 : 0][i];
            for (std::size_t j = 0; j < s; ++j)
                if (!bc[j].is_zero()) comb[j] -= q * bc[j];
        }
        return comb;
    };

    for (const auto& res : residues) {
        if (!std::all_of(res.rem.begin(), res.rem.end(), [](const FpPoly& p) { return p.empty(); })) continue;
        attempt([&](bool sym) {
            auto comb = integer_residue(res, sym);
            return std::make_pair(combine(n, b.columns, comb), comb);
        });
    }
    if (!out.empty() || residues.empty()) return out;

    // Z_p-linear dependence of the residues, via their coefficient vectors.
    std::size_t width = 1;
    for (const auto& res : residues)
        for (const auto& p : res.rem) width = std::max(width, p.size());
    Matrix<std::int64_t> E(n * width, residues.size(), 0);
    for (std::size_t c = 0; c < residues.size(); ++c)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t d = 0; d < residues[c].rem[r].size(); ++d) E(r * width + d, c) = residues[c].rem[r][d];
    for (const auto& bvec : kernel(k, E)) {
        attempt([&](bool sym) {
            std::vector<ZPoly> comb(s);
            for (std::size_t c = 0; c < residues.size(); ++c) {
                if (bvec[c] == 0) continue;
                std::int64_t coef = bvec[c];
                if (sym && coef > k.p / 2) coef -= k.p;
                auto rc = integer_residue(residues[c], sym);
                for (std::size_t j = 0; j < s; ++j) comb[j] += Int(static_cast<long>(coef)) * rc[j];
            }
            return std::make_pair(combine(n, b.columns, comb), comb);
        });
    }
    return out;
}

} // namespace

std::vector<SaturationWitness> zfactor(const Ghnf& b) {
    if (b.columns.empty()) return {};
    Int q = 1;
    for (const auto& blk : b.blocks()) q *= abs(leading_term(b.columns[blk.first]).coeff);
    if (q == 1) return {};
    for (const auto& [p, e] : prime_factors(q)) {
        (void)e;
        auto ws = zfactor_prime(b, p);
        if (!ws.empty()) return ws;
    }
    return {};
}

std::vector<SaturationWitness> zxfactor(const Ghnf& b) {
    auto zs = zfactor(b);
    if (!zs.empty() || b.columns.empty()) return zs;
    const std::size_t n = b.n, s = b.columns.size();
    const auto blocks = b.blocks();
    const std::size_t t = blocks.size();

    std::vector<ZPoly> factors;
    for (const auto& blk : blocks) {
        for (const auto& [p, m] : factor_over_Q(b.columns[blk.first][blk.row]).factors) {
            (void)m;
            if (p.degree() >= 1 && std::find(factors.begin(), factors.end(), p) == factors.end())
                factors.push_back(p);
        }
    }
    std::sort(factors.begin(), factors.end(), poly_less);

    for (const auto& p : factors) {
        QuotientField K(to_qpoly(p));
        Matrix<QPoly> M(n, t, QPoly{});
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t r = 0; r < n; ++r) M(r, i) = K.reduce(to_qpoly(b.columns[blocks[i].first][r]));
        std::vector<SaturationWitness> out;
        for (auto bvec : kernel(K, M)) {
            // Scale so the first nonzero entry is one.
            for (const auto& e : bvec)
                if (!K.is_zero(e)) {
                    QPoly u = K.inv(e);
                    for (auto& f : bvec) f = K.mul(f, u);
                    break;
                }
            Int den = 1;
            for (const auto& e : bvec)
                for (const auto& c : e) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
            std::vector<ZPoly> comb(s);
            for (std::size_t i = 0; i < t; ++i) {
                QPoly scaled = bvec[i];
                for (auto& c : scaled) c *= den;
                comb[blocks[i].first] = clear_denominators(scaled);
            }
            ZxVec v = combine(n, b.columns, comb);
            ZxVec w(n);
            bool ok = !is_zero(v);
            for (std::size_t r = 0; r < n && ok; ++r)
                if (!v[r].is_zero()) ok = divides_exact(v[r], p, &w[r]);
            if (!ok) continue;
            Int c = 0;
            for (const auto& e : w) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), e.content().get_mpz_t());
            SaturationWitness wit;
            wit.kind = MultiplierKind::Polynomial;
            wit.factor = p;
            wit.multiplier = c * p;
            wit.h = ZxVec(n);
            for (std::size_t r = 0; r < n; ++r) wit.h[r] = w[r].divexact(c);
            wit.combination = std::move(comb);
            if (finish_witness(b, wit, false) && !has_h(out, wit.h)) out.push_back(std::move(wit));
        }
        if (!out.empty()) return out;
    }
    return {};
}

namespace {

using FactorFn = std::vector<SaturationWitness> (*)(const Ghnf&);

Ghnf saturate(std::vector<ZxVec> gens, std::size_t n, FactorFn fn, Int* bound) {
    while (true) {
        Ghnf b = groebner(gens, n, false).basis;
        auto ws = fn(b);
        if (ws.empty()) return b;
        if (bound && ws.front().kind == MultiplierKind::Prime) *bound *= ws.front().prime;
        gens = b.columns;
        for (auto& w : ws) gens.push_back(std::move(w.h));
    }
}

} // namespace

Ghnf sat_x(const std::vector<ZxVec>& gens, std::size_t n) { return saturate(gens, n, &xfactor, nullptr); }
Ghnf sat_z(const std::vector<ZxVec>& gens, std::size_t n) { return saturate(gens, n, &zfactor, nullptr); }
Ghnf sat_zx(const std::vector<ZxVec>& gens, std::size_t n) { return saturate(gens, n, &zxfactor, nullptr); }

Ghnf full_sat(const std::vector<ZxVec>& gens, std::size_t n) { return sat_z(sat_x(gens, n).columns, n); }

SatZResult sat_z_tracked(const std::vector<ZxVec>& gens, std::size_t n) {
    SatZResult r;
    r.bound = 1;
    r.basis = saturate(gens, n, &zfactor, &r.bound);
    return r;
}

Int family_residue(int family, const Int& m) {
    if (family != 1 && family != -1) throw std::invalid_argument("family must be +1 or -1");
    Int o;
    mpz_fdiv_r(o.get_mpz_t(), Int(family).get_mpz_t(), m.get_mpz_t());
    return o;
}

namespace {

std::vector<Int> divisors_ascending(const Int& m) {
    std::vector<Int> ds{1};
    for (const auto& [p, e] : prime_factors(m)) {
        std::size_t cur = ds.size();
        Int pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < cur; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

} // namespace

PCheckResult p_saturation_check(const Ghnf& l, int family) {
    family_residue(family, 1);
    if (!xfactor(l).empty()) throw std::invalid_argument("p-saturation check requires an x-saturated lattice");
    SatZResult sz = sat_z_tracked(l.columns, l.n);
    const auto divisors = divisors_ascending(sz.bound);
    PCheckResult out;
    for (const auto& g : sz.basis.columns) {
        if (contains(l, g)) continue;
        PCertificate cert{g, 0, 0, false};
        for (const auto& d : divisors)
            if (contains(l, ZPoly(d) * g)) {
                cert.m = d;
                break;
            }
        if (cert.m == 0) throw std::logic_error("p-saturation check: no multiplier found");
        cert.o = family_residue(family, cert.m);
        ZPoly lin = ZPoly::x();
        lin -= ZPoly(cert.o);
        cert.holds = contains(l, lin * g);
        out.p_saturated = out.p_saturated && cert.holds;
        out.certificates.push_back(std::move(cert));
    }
    return out;
}

Ghnf p_saturation(const std::vector<ZxVec>& gens, std::size_t n, int family) {
    Ghnf b = sat_x(gens, n);
    while (true) {
        PCheckResult r = p_saturation_check(b, family);
        if (r.p_saturated) return b;
        std::vector<ZxVec> next = b.columns;
        for (const auto& c : r.certificates) {
            if (c.holds) continue;
            ZPoly lin = ZPoly::x();
            lin -= ZPoly(c.o);
            next.push_back(lin * c.g);
        }
        b = sat_x(next, n);
    }
}

} // namespace zxlat

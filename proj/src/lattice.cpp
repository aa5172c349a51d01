#include "zxlat/lattice.hpp"

#include "zxlat/hnf.hpp"

#include <algorithm>
#include <queue>
#include <tuple>
#include <numeric>
#include <stdexcept>

namespace zxlat {

ZxVec zero_vec(std::size_t n) { return ZxVec(n); }

ZxVec unit_vec(std::size_t n, std::size_t i) {
    ZxVec v(n);
    v.at(i) = ZPoly(1);
    return v;
}

bool is_zero(const ZxVec& v) {
    return std::all_of(v.begin(), v.end(), [](const ZPoly& p) { return p.is_zero(); });
}

ZxVec operator+(const ZxVec& a, const ZxVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    ZxVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ZxVec operator-(const ZxVec& a, const ZxVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    ZxVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ZxVec operator-(const ZxVec& a) {
    ZxVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

ZxVec operator*(const ZPoly& p, const ZxVec& v) {
    ZxVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = p * v[i];
    return r;
}

ZxVec shift(const ZxVec& v, std::size_t k) {
    ZxVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].shift(k);
    return r;
}

ZxVec combine(std::size_t n, const std::vector<ZxVec>& vecs, const std::vector<ZPoly>& coeffs) {
    if (vecs.size() != coeffs.size()) throw std::invalid_argument("combine: size mismatch");
    ZxVec r(n);
    for (std::size_t j = 0; j < vecs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        if (vecs[j].size() != n) throw std::invalid_argument("combine: vector length mismatch");
        for (std::size_t i = 0; i < n; ++i)
            if (!vecs[j][i].is_zero()) r[i] += coeffs[j] * vecs[j][i];
    }
    return r;
}

int compare_monomials(const LatticeMonomial& a, const LatticeMonomial& b) {
    if (a.pos != b.pos) return a.pos < b.pos ? -1 : 1;
    if (a.exp != b.exp) return a.exp < b.exp ? -1 : 1;
    int c = mpz_cmpabs(a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

LatticeMonomial leading_term(const ZxVec& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (!f[i].is_zero())
            return {f[i].lc(), static_cast<std::size_t>(f[i].degree()), i};
    throw std::domain_error("leading term of zero vector");
}

bool is_normal(const ZxVec& f) { return is_zero(f) || leading_term(f).coeff > 0; }

ZxVec normalized(const ZxVec& f) { return is_normal(f) ? f : -f; }

int compare_vecs(const ZxVec& a, const ZxVec& b) {
    for (std::size_t i = std::max(a.size(), b.size()); i-- > 0;) {
        ZPoly pa = i < a.size() ? a[i] : ZPoly(), pb = i < b.size() ? b[i] : ZPoly();
        if (pa == pb) continue;
        if (pa.degree() != pb.degree()) return pa.degree() < pb.degree() ? -1 : 1;
        for (std::size_t k = pa.coeffs().size(); k-- > 0;) {
            const Int &x = pa.coeffs()[k], &y = pb.coeffs()[k];
            if (x == y) continue;
            int c = mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t());
            if (c != 0) return c;
            return x < y ? -1 : 1;
        }
    }
    return 0;
}

namespace {

struct LtInfo {
    bool valid = false;
    LatticeMonomial lt;
};

std::vector<LtInfo> leading_terms(const std::vector<ZxVec>& G) {
    std::vector<LtInfo> out(G.size());
    for (std::size_t j = 0; j < G.size(); ++j)
        if (!is_zero(G[j])) out[j] = {true, leading_term(G[j])};
    return out;
}

// Subtract t*x^s*g from r (entrywise), recording it in q.
void subtract_shifted(ZxVec& r, const ZxVec& g, const Int& t, std::size_t s) {
    ZPoly m = ZPoly::monomial(t, s);
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!g[i].is_zero()) r[i] -= m * g[i];
}

} // namespace

Reduction reduce(const ZxVec& f, const std::vector<ZxVec>& G) {
    Reduction out{f, std::vector<ZPoly>(G.size())};
    auto lts = leading_terms(G);
    ZxVec& r = out.remainder;
    // A reduction step only touches smaller monomials, so one descending sweep suffices.
    for (std::size_t pos = r.size(); pos-- > 0;) {
        for (long k = r[pos].degree(); k >= 0; --k) {
            Int a = r[pos].coeff(static_cast<std::size_t>(k));
            if (a == 0) continue;
            std::optional<std::size_t> best;
            for (std::size_t j = 0; j < G.size(); ++j) {
                const auto& l = lts[j];
                if (!l.valid || l.lt.pos != pos || l.lt.exp > static_cast<std::size_t>(k)) continue;
                if (!mpz_divisible_p(a.get_mpz_t(), l.lt.coeff.get_mpz_t())) continue;
                if (!best || l.lt.exp > lts[*best].lt.exp) best = j;
            }
            if (!best) continue;
            const auto& l = lts[*best].lt;
            Int t;
            mpz_divexact(t.get_mpz_t(), a.get_mpz_t(), l.coeff.get_mpz_t());
            std::size_t s = static_cast<std::size_t>(k) - l.exp;
            subtract_shifted(r, G[*best], t, s);
            out.quotients[*best] += ZPoly::monomial(t, s);
        }
    }
    return out;
}

ZxVec grem(const ZxVec& f, const std::vector<ZxVec>& G) { return reduce(f, G).remainder; }

ZxVec s_vector(const ZxVec& f, const ZxVec& g) {
    LatticeMonomial a = leading_term(f), b = leading_term(g);
    if (a.pos != b.pos) return zero_vec(f.size());
    Int l;
    mpz_lcm(l.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
    std::size_t m = std::max(a.exp, b.exp);
    Int ua = l / a.coeff, ub = l / b.coeff;
    return ZPoly::monomial(ua, m - a.exp) * f - ZPoly::monomial(ub, m - b.exp) * g;
}

std::vector<Block> Ghnf::blocks() const {
    std::vector<Block> out;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        std::size_t row = leading_term(columns[j]).pos;
        if (out.empty() || out.back().row != row)
            out.push_back({row, j, 1});
        else
            ++out.back().size;
    }
    return out;
}

namespace {

struct Elem {
    ZxVec v;
    LatticeMonomial lt;
};

bool lt_divides(const LatticeMonomial& d, const LatticeMonomial& m) {
    return d.pos == m.pos && d.exp <= m.exp && mpz_divisible_p(m.coeff.get_mpz_t(), d.coeff.get_mpz_t());
}

// Brings every non-leading monomial of r into [0, b) using the admissible
// reducer with the smallest leading coefficient (ties: largest degree). The
// leading term is untouched, so this only changes the representative.
void tail_reduce(ZxVec& r, const LatticeMonomial& own, const std::vector<const Elem*>& reducers) {
    for (std::size_t pos = own.pos + 1; pos-- > 0;) {
        for (long k = r[pos].degree(); k >= 0; --k) {
            if (pos == own.pos && static_cast<std::size_t>(k) >= own.exp) continue;
            Int a = r[pos].coeff(static_cast<std::size_t>(k));
            if (a == 0) continue;
            const Elem* best = nullptr;
            for (const Elem* g : reducers) {
                if (g->lt.pos != pos || g->lt.exp > static_cast<std::size_t>(k)) continue;
                int c = best ? mpz_cmpabs(g->lt.coeff.get_mpz_t(), best->lt.coeff.get_mpz_t()) : -1;
                if (c < 0 || (c == 0 && g->lt.exp > best->lt.exp)) best = g;
            }
            if (!best) continue;
            Int t;
            mpz_fdiv_q(t.get_mpz_t(), a.get_mpz_t(), best->lt.coeff.get_mpz_t());
            if (t != 0) subtract_shifted(r, best->v, t, static_cast<std::size_t>(k) - best->lt.exp);
        }
    }
}

// Reduced Groebner basis with canonical tails, sorted ascending.
std::vector<ZxVec> gb_core(const std::vector<ZxVec>& gens, std::size_t n) {
    for (const auto& g : gens)
        if (g.size() != n) throw std::invalid_argument("groebner: generator length differs from n");

    std::vector<Elem> G;
    std::vector<bool> alive;
    // Pairs are processed smallest lcm first: (position, degree, |lcm coeff|).
    struct Pair {
        LatticeMonomial lcm;
        std::size_t i, j;
    };
    auto later = [](const Pair& a, const Pair& b) {
        int c = compare_monomials(a.lcm, b.lcm);
        return c != 0 ? c > 0 : std::tie(a.j, a.i) > std::tie(b.j, b.i);
    };
    std::priority_queue<Pair, std::vector<Pair>, decltype(later)> pairs(later);
    std::vector<ZxVec> pending;

    auto add_one = [&](ZxVec v) {
        std::vector<ZxVec> live;
        for (std::size_t j = 0; j < G.size(); ++j)
            if (alive[j]) live.push_back(G[j].v);
        v = normalized(grem(v, live));
        if (is_zero(v)) return;
        Elem t{std::move(v), {}};
        t.lt = leading_term(t.v);
        std::vector<const Elem*> live_elems;
        for (std::size_t i = 0; i < G.size(); ++i)
            if (alive[i]) live_elems.push_back(&G[i]);
        tail_reduce(t.v, t.lt, live_elems);
        // Keep older tails bounded by the new element as well.
        for (std::size_t i = 0; i < G.size(); ++i)
            if (alive[i] && G[i].lt.pos >= t.lt.pos && !lt_divides(t.lt, G[i].lt)) tail_reduce(G[i].v, G[i].lt, {&t});
        std::size_t j = G.size();
        // Elements whose leading term t now divides are retired and re-added
        // after reduction; the module is unchanged.
        for (std::size_t i = 0; i < j; ++i) {
            if (!alive[i] || G[i].lt.pos != t.lt.pos) continue;
            if (lt_divides(t.lt, G[i].lt)) {
                alive[i] = false;
                pending.push_back(G[i].v);
                continue;
            }
            Int l;
            mpz_lcm(l.get_mpz_t(), G[i].lt.coeff.get_mpz_t(), t.lt.coeff.get_mpz_t());
            pairs.push({{l, std::max(G[i].lt.exp, t.lt.exp), t.lt.pos}, i, j});
        }
        G.push_back(std::move(t));
        alive.push_back(true);
    };
    auto add = [&](ZxVec v) {
        add_one(std::move(v));
        while (!pending.empty()) {
            ZxVec p = std::move(pending.back());
            pending.pop_back();
            add_one(std::move(p));
        }
    };

    for (const auto& g : gens) add(g);
    while (!pairs.empty()) {
        auto [lcm, i, j] = pairs.top();
        pairs.pop();
        if (!alive[i] || !alive[j]) continue;
        const LatticeMonomial a = G[i].lt, b = G[j].lt;
        const std::size_t top = lcm.exp;
        // S-vector with the lcm of the leading coefficients.
        add(ZPoly::monomial(lcm.coeff / a.coeff, top - a.exp) * G[i].v -
            ZPoly::monomial(lcm.coeff / b.coeff, top - b.exp) * G[j].v);
        if (!alive[i] || !alive[j]) continue;
        // gcd-completion vector when neither leading coefficient divides the other.
        if (!mpz_divisible_p(a.coeff.get_mpz_t(), b.coeff.get_mpz_t()) &&
            !mpz_divisible_p(b.coeff.get_mpz_t(), a.coeff.get_mpz_t())) {
            Int g, u, v;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
            add(ZPoly::monomial(u, top - a.exp) * G[i].v + ZPoly::monomial(v, top - b.exp) * G[j].v);
        }
    }

    std::vector<Elem> B;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (alive[i]) B.push_back(std::move(G[i]));
    std::sort(B.begin(), B.end(), [](const Elem& x, const Elem& y) { return compare_monomials(x.lt, y.lt) < 0; });

    // Canonical tails; on a reduced basis the chosen reducer is the one with
    // the largest admissible degree.
    for (std::size_t e = 0; e < B.size(); ++e) {
        std::vector<const Elem*> others;
        for (std::size_t j = 0; j < B.size(); ++j)
            if (j != e) others.push_back(&B[j]);
        tail_reduce(B[e].v, B[e].lt, others);
    }
    std::vector<ZxVec> out;
    for (auto& t : B) out.push_back(std::move(t.v));
    return out;
}

// Groebner basis of the vectors (e_k, f_k) in Z[x]^(s+n), with the f block in
// the higher positions. Elements led by the f block give the basis of (f) with
// their e part as the transform; the rest form a Groebner basis of the syzygies.
struct Augmented {
    GroebnerResult result;
    std::vector<ZxVec> syzygies;
};

Augmented augmented_groebner(const std::vector<ZxVec>& gens, std::size_t n) {
    const std::size_t s = gens.size();
    std::vector<ZxVec> aug;
    for (std::size_t k = 0; k < s; ++k) {
        if (gens[k].size() != n) throw std::invalid_argument("groebner: generator length differs from n");
        ZxVec v = unit_vec(s + n, k);
        std::copy(gens[k].begin(), gens[k].end(), v.begin() + static_cast<long>(s));
        aug.push_back(std::move(v));
    }
    Augmented out;
    out.result.basis.n = n;
    for (auto& v : gb_core(aug, s + n)) {
        ZxVec e(v.begin(), v.begin() + static_cast<long>(s));
        if (leading_term(v).pos < s) {
            out.syzygies.push_back(std::move(e));
            continue;
        }
        out.result.basis.columns.emplace_back(v.begin() + static_cast<long>(s), v.end());
        out.result.log.coeffs.push_back(std::move(e));
    }
    return out;
}

} // namespace

GroebnerResult groebner(const std::vector<ZxVec>& gens, std::size_t n, bool with_log) {
    if (with_log) return augmented_groebner(gens, n).result;
    GroebnerResult out;
    out.basis.n = n;
    out.basis.columns = gb_core(gens, n);
    return out;
}

GhnfCheck is_ghnf(const std::vector<ZxVec>& cols) {
    if (cols.empty()) return {};
    std::vector<LatticeMonomial> lts;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (is_zero(cols[j])) return {false, 0, "column " + std::to_string(j + 1) + " is zero"};
        lts.push_back(leading_term(cols[j]));
        if (j > 0 && lts[j].pos < lts[j - 1].pos)
            return {false, 0, "columns are not ordered by pivot row"};
    }
    Ghnf g{cols.front().size(), cols};
    auto blocks = g.blocks();
    for (const auto& b : blocks)
        for (std::size_t k = 1; k < b.size; ++k)
            if (lts[b.first + k].exp <= lts[b.first + k - 1].exp)
                return {false, 1, "pivot degrees not strictly increasing in row " + std::to_string(b.row + 1)};
    for (const auto& b : blocks)
        for (std::size_t k = 1; k < b.size; ++k)
            if (!mpz_divisible_p(lts[b.first + k - 1].coeff.get_mpz_t(), lts[b.first + k].coeff.get_mpz_t()))
                return {false, 2, "leading coefficients do not form a divisibility chain in row " +
                                      std::to_string(b.row + 1)};
    for (const auto& b : blocks)
        for (std::size_t j1 = 0; j1 < b.size; ++j1)
            for (std::size_t j2 = j1 + 1; j2 < b.size; ++j2)
                if (!is_zero(grem(s_vector(cols[b.first + j1], cols[b.first + j2]), cols)))
                    return {false, 3, "S-vector of columns " + std::to_string(b.first + j1 + 1) + " and " +
                                          std::to_string(b.first + j2 + 1) + " does not reduce to zero"};
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t pos = 0; pos < cols[j].size(); ++pos)
            for (std::size_t k = 0; k < cols[j][pos].coeffs().size(); ++k) {
                const Int& a = cols[j][pos].coeffs()[k];
                if (a == 0) continue;
                LatticeMonomial mono{a, k, pos};
                for (std::size_t i = 0; i < cols.size(); ++i)
                    if (i != j && lt_divides(lts[i], mono))
                        return {false, 4, "column " + std::to_string(j + 1) + " is not G-reduced by column " +
                                              std::to_string(i + 1)};
            }
    return {};
}

std::size_t rank(const Ghnf& b) { return b.rank(); }

bool contains(const Ghnf& b, const ZxVec& f) { return is_zero(grem(f, b.columns)); }

bool same_lattice(const std::vector<ZxVec>& a, const std::vector<ZxVec>& b, std::size_t n) {
    return groebner(a, n, false).basis.columns == groebner(b, n, false).basis.columns;
}

namespace {

// Syzygies of a GHNF from consecutive S-vectors within each block.
std::vector<ZxVec> schreyer_syzygies(const std::vector<ZxVec>& C, std::size_t n) {
    std::vector<ZxVec> out;
    if (C.empty()) return out;
    Ghnf g{n, C};
    for (const auto& b : g.blocks())
        for (std::size_t k = 1; k < b.size; ++k) {
            std::size_t i1 = b.first + k - 1, i2 = b.first + k;
            LatticeMonomial l1 = leading_term(C[i1]), l2 = leading_term(C[i2]);
            Int ratio = l1.coeff / l2.coeff;
            ZPoly m1 = ZPoly::monomial(1, l2.exp - l1.exp);
            ZxVec S = m1 * C[i1] - ZPoly(ratio) * C[i2];
            Reduction red = reduce(S, C);
            if (!is_zero(red.remainder)) throw std::logic_error("schreyer_syzygies: input is not a Groebner basis");
            ZxVec h(C.size());
            for (std::size_t j = 0; j < C.size(); ++j) h[j] = -red.quotients[j];
            h[i1] += m1;
            h[i2] -= ZPoly(ratio);
            out.push_back(h);
        }
    return out;
}

ZxVec permute(const ZxVec& v, const std::vector<std::size_t>& perm) {
    ZxVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[perm[i]];
    return r;
}

ZxVec unpermute(const ZxVec& v, const std::vector<std::size_t>& perm) {
    ZxVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[perm[i]] = v[i];
    return r;
}

// Drop generators lying in the lattice spanned by the others.
std::vector<ZxVec> greedy_minimize(std::vector<ZxVec> cand, std::size_t s) {
    for (std::size_t idx = cand.size(); idx-- > 0;) {
        if (cand.size() <= 1) break;
        std::vector<ZxVec> others;
        for (std::size_t j = 0; j < cand.size(); ++j)
            if (j != idx) others.push_back(cand[j]);
        if (contains(groebner(others, s, false).basis, cand[idx])) cand.erase(cand.begin() + static_cast<long>(idx));
    }
    return cand;
}

void finish(std::vector<ZxVec>& vs) {
    for (auto& v : vs) v = normalized(v);
    std::sort(vs.begin(), vs.end(), [](const ZxVec& a, const ZxVec& b) { return compare_vecs(a, b) < 0; });
}

// A generating set of a free lattice with exactly rank-many elements.
std::vector<ZxVec> free_basis(const std::vector<ZxVec>& K, std::size_t s) {
    Ghnf gb = groebner(K, s, false).basis;
    const std::size_t r = gb.rank();
    std::vector<ZxVec> cand = greedy_minimize(gb.columns, s);
    if (cand.size() == r || s > 6) {
        finish(cand);
        return cand;
    }
    std::vector<std::size_t> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<ZxVec> pk;
        for (const auto& v : K) pk.push_back(permute(v, perm));
        std::vector<ZxVec> c = greedy_minimize(groebner(pk, s, false).basis.columns, s);
        if (c.size() == r) {
            for (auto& v : c) v = unpermute(v, perm);
            finish(c);
            return c;
        }
    }
    finish(cand);
    return cand;
}

} // namespace

std::vector<ZxVec> kernel_syzygy(const std::vector<ZxVec>& cols, std::size_t n) {
    const std::size_t s = cols.size();
    if (s == 0) return {};
    if (is_ghnf(cols).ok) {
        auto out = schreyer_syzygies(cols, n);
        finish(out);
        return out;
    }
    for (const auto& c : cols)
        if (c.size() != n) throw std::invalid_argument("kernel_syzygy: column length differs from n");
    std::vector<ZxVec> K = augmented_groebner(cols, n).syzygies;
    K.erase(std::remove_if(K.begin(), K.end(), [](const ZxVec& v) { return is_zero(v); }), K.end());
    if (K.empty()) return {};
    return free_basis(K, s);
}

namespace {

template <class D>
bool member_over(const D& d, const std::vector<ZxVec>& gens, const ZxVec& f,
                 typename D::Elem (*conv)(const D&, const ZPoly&)) {
    const std::size_t n = f.size();
    Matrix<typename D::Elem> A(n, gens.size(), d.zero());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) A(i, j) = conv(d, gens[j][i]);
    std::vector<typename D::Elem> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = conv(d, f[i]);
    return solve(d, A, b).has_value();
}

QPoly conv_q(const QPolyRing&, const ZPoly& p) { return to_qpoly(p); }
FpPoly conv_p(const FpPolyRing& R, const ZPoly& p) { return to_fppoly(R.k, p); }

long max_degree(const ZxVec& v) {
    long d = -1;
    for (const auto& p : v) d = std::max(d, p.degree());
    return d;
}

bool integer_system(const std::vector<ZxVec>& gens, const ZxVec& f, long D) {
    const std::size_t n = f.size(), s = gens.size();
    long gdeg = 0;
    for (const auto& g : gens) gdeg = std::max(gdeg, max_degree(g));
    const long E = std::max(max_degree(f), D + gdeg);
    const std::size_t rows = n * static_cast<std::size_t>(E + 1), cols = s * static_cast<std::size_t>(D + 1);
    IntegerRing Z;
    Matrix<Int> A(rows, cols, Int(0));
    for (std::size_t i = 0; i < s; ++i)
        for (long j = 0; j <= D; ++j)
            for (std::size_t pos = 0; pos < n; ++pos)
                for (std::size_t k = 0; k < gens[i][pos].coeffs().size(); ++k) {
                    std::size_t e = k + static_cast<std::size_t>(j);
                    A(pos * static_cast<std::size_t>(E + 1) + e, i * static_cast<std::size_t>(D + 1) +
                                                                    static_cast<std::size_t>(j)) =
                        gens[i][pos].coeffs()[k];
                }
    std::vector<Int> b(rows, Int(0));
    for (std::size_t pos = 0; pos < n; ++pos)
        for (std::size_t k = 0; k < f[pos].coeffs().size(); ++k)
            b[pos * static_cast<std::size_t>(E + 1) + k] = f[pos].coeffs()[k];
    return solve(Z, A, b).has_value();
}

} // namespace

Tri member_oracle(const std::vector<ZxVec>& gens, const ZxVec& f, long degree_cap) {
    if (is_zero(f)) return Tri::True;
    if (degree_cap < 0) {
        degree_cap = max_degree(f) + 8;
        for (const auto& g : gens) degree_cap += std::max(0L, max_degree(g));
    }
    // Non-membership certificates: images over Q[x] and over Z_p[x] for small p.
    if (!member_over(QPolyRing{RationalField{}}, gens, f, &conv_q)) return Tri::False;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13})
        if (!member_over(FpPolyRing{PrimeField{p}}, gens, f, &conv_p)) return Tri::False;
    for (long D = 0;; D = std::min(degree_cap, std::max(1L, 2 * D))) {
        if (integer_system(gens, f, D)) return Tri::True;
        if (D >= degree_cap) break;
    }
    return Tri::Unknown;
}

std::vector<ExtensionElement> extension_elements(const Ghnf& b) {
    std::vector<ExtensionElement> out;
    for (const auto& blk : b.blocks())
        for (std::size_t k = 0; k + 1 < blk.size; ++k) {
            std::size_t c = blk.first + k;
            std::size_t d0 = leading_term(b.columns[c]).exp, d1 = leading_term(b.columns[c + 1]).exp;
            for (std::size_t j = 0; j + d0 < d1; ++j) out.push_back({shift(b.columns[c], j), c, j});
        }
    return out;
}

std::vector<ZxVec> extension_prefix(const Ghnf& b) {
    std::vector<ZxVec> out;
    for (auto& e : extension_elements(b)) out.push_back(std::move(e.v));
    return out;
}

std::vector<ZxVec> orth_complement(const Ghnf& b) {
    const std::size_t s = b.columns.size();
    std::vector<ZxVec> rows(b.n, ZxVec(s));
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < b.n; ++i) rows[i][j] = b.columns[j][i];
    return kernel_syzygy(rows, s);
}

std::string to_string(const ZxVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

} // namespace zxlat

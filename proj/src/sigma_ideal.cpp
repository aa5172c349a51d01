#include "zxlat/sigma_ideal.hpp"

#include "zxlat/saturation.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace zxlat {

namespace {

CoeffElem minus_one() { return CoeffElem::root_of_unity(Rat(1, 2)); }

ZxVec coefficientwise(const ZxVec& a, const ZxVec& b, bool take_min) {
    ZxVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::size_t len = std::max(a[i].coeffs().size(), b[i].coeffs().size());
        std::vector<Int> c(len);
        for (std::size_t k = 0; k < len; ++k) {
            Int x = a[i].coeff(k), y = b[i].coeff(k);
            c[k] = take_min ? std::min(x, y) : std::max(x, y);
        }
        r[i] = ZPoly(std::move(c));
    }
    return r;
}

ZxVec positive_part(const ZxVec& f) { return coefficientwise(f, zero_vec(f.size()), false); }

std::vector<ZxVec> supports(const Presentation& p) {
    std::vector<ZxVec> out;
    for (const auto& g : p.generators) {
        if (g.support.size() != p.n) throw std::invalid_argument("binomial support length differs from n");
        out.push_back(g.support);
    }
    return out;
}

CoeffElem product_power(const std::vector<CoeffElem>& base, const std::vector<ZPoly>& exps, int family) {
    CoeffElem r;
    for (std::size_t j = 0; j < base.size(); ++j)
        if (!exps[j].is_zero()) r = r * pow_by(base[j], exps[j], family);
    return r;
}

std::vector<CoeffElem> coeffs_of(const Presentation& p) {
    std::vector<CoeffElem> c;
    for (const auto& g : p.generators) c.push_back(g.coeff);
    return c;
}

Presentation chain_from(const Presentation& like, const CharacterData& d) {
    Presentation out{like.n, like.family, {}};
    for (std::size_t j = 0; j < d.basis.columns.size(); ++j)
        out.generators.push_back({d.basis.columns[j], d.values[j]});
    return out;
}

} // namespace

LaurentBinomial make_binomial(const ZxVec& f, const CoeffElem& c) {
    if (is_zero(f)) throw std::invalid_argument("binomial support must be nonzero");
    if (is_normal(f)) return {f, c};
    return {-f, inv(c)};
}

Normalized normalize(const CoeffElem& a, const ZxVec& exA, const CoeffElem& b, const ZxVec& exB) {
    if (exA.size() != exB.size()) throw std::invalid_argument("exponent vectors differ in length");
    if (exA == exB) throw std::invalid_argument("terms share one exponent vector: not a proper binomial");
    Normalized out;
    out.cofactor = coefficientwise(exA, exB, true);
    out.binomial = make_binomial(exA - exB, minus_one() * b / a);
    return out;
}

Normalized normalize_terms(const std::vector<Term>& terms) {
    if (terms.size() != 2)
        throw std::invalid_argument("a binomial needs exactly two terms, got " + std::to_string(terms.size()));
    return normalize(terms[0].coeff, terms[0].exponent, terms[1].coeff, terms[1].exponent);
}

ProperCheck is_proper(const Presentation& p) {
    check_family(p.family);
    ProperCheck out;
    if (p.generators.empty()) return out;
    const auto sup = supports(p);
    const auto cs = coeffs_of(p);
    for (const auto& u : kernel_syzygy(sup, p.n)) {
        if (!product_power(cs, u, p.family).is_one()) {
            out.proper = false;
            out.violating = u;
            return out;
        }
    }
    return out;
}

CharacterData character(const Presentation& p) {
    if (!is_proper(p).proper) throw std::domain_error("improper presentation: the ideal is [1]");
    GroebnerResult gr = groebner(supports(p), p.n);
    CharacterData d;
    const auto cs = coeffs_of(p);
    for (const auto& row : gr.log.coeffs) d.values.push_back(product_power(cs, row, p.family));
    d.basis = std::move(gr.basis);
    return d;
}

SigmaChain char_set(const Presentation& p) { return chain_from(p, character(p)); }

std::optional<CoeffElem> character_value(const CharacterData& d, const ZxVec& f, int family) {
    Reduction red = reduce(f, d.basis.columns);
    if (!is_zero(red.remainder)) return std::nullopt;
    return product_power(d.values, red.quotients, family);
}

PremResult prem(const LaurentBinomial& f, const SigmaChain& chain) {
    ZxVec h = f.support;
    CoeffElem c = f.coeff;
    for (std::size_t gi = chain.generators.size(); gi-- > 0;) {
        const auto& g = chain.generators[gi];
        const LatticeMonomial lt = leading_term(g.support);
        for (long m = h[lt.pos].degree(); m >= static_cast<long>(lt.exp); --m) {
            Int a = h[lt.pos].coeff(static_cast<std::size_t>(m)), k;
            mpz_tdiv_q(k.get_mpz_t(), a.get_mpz_t(), lt.coeff.get_mpz_t());
            if (k == 0) continue;
            ZPoly mult = ZPoly::monomial(k, static_cast<std::size_t>(m) - lt.exp);
            h = h - mult * g.support;
            c = c * pow_by(g.coeff, -mult, chain.family);
        }
    }
    PremResult r;
    r.support = h;
    if (is_zero(h)) {
        if (c.is_one()) {
            r.kind = PremResult::Kind::Zero;
        } else {
            r.kind = PremResult::Kind::Constant;
            r.constant = c;
        }
        return r;
    }
    r.kind = PremResult::Kind::Binomial;
    r.binomial = make_binomial(h, c);
    return r;
}

bool ideal_member(const Presentation& p, const LaurentBinomial& f) {
    CharacterData d = character(p);
    auto v = character_value(d, f.support, p.family);
    return v && *v == f.coeff;
}

bool is_regular_coherent(const SigmaChain& chain) {
    std::vector<ZxVec> sup;
    for (const auto& g : chain.generators) {
        if (is_zero(g.support) || !is_normal(g.support)) return false;
        sup.push_back(g.support);
    }
    return is_ghnf(sup).ok && is_proper(chain).proper;
}

SigmaChain reflexive_closure(const Presentation& p) {
    Presentation cur = p;
    while (true) {
        CharacterData d = character(cur);
        auto ws = xfactor(d.basis);
        Presentation next = chain_from(cur, d);
        if (ws.empty()) return next;
        for (const auto& w : ws) {
            CoeffElem v = product_power(d.values, w.combination, cur.family);
            next.generators.push_back(
                make_binomial(w.h, sigma_shift(v, -static_cast<long>(w.x_power), cur.family)));
        }
        cur = std::move(next);
    }
}

std::vector<SigmaChain> dec_laurent(const Presentation& p) {
    std::vector<SigmaChain> out;
    if (!is_proper(p).proper) return out;
    std::deque<Presentation> work{reflexive_closure(p)};
    while (!work.empty()) {
        Presentation item = std::move(work.front());
        work.pop_front();
        if (!is_proper(item).proper) continue;
        SigmaChain chain = reflexive_closure(item);
        CharacterData d = character(chain);
        auto ws = zfactor(d.basis);
        if (ws.empty()) {
            out.push_back(chain_from(chain, d));
            continue;
        }
        std::sort(ws.begin(), ws.end(), [](const SaturationWitness& a, const SaturationWitness& b) {
            if (a.prime != b.prime) return a.prime < b.prime;
            return compare_vecs(a.h, b.h) < 0;
        });
        std::vector<std::vector<CoeffElem>> roots;
        for (const auto& w : ws) {
            CoeffElem v = product_power(d.values, w.combination, chain.family);
            roots.push_back(kth_roots(v, w.prime.get_ui()));
        }
        // Cartesian product, first witness varying slowest.
        std::vector<std::size_t> idx(ws.size(), 0);
        while (true) {
            Presentation branch = chain_from(chain, d);
            for (std::size_t i = 0; i < ws.size(); ++i) branch.generators.push_back(make_binomial(ws[i].h, roots[i][idx[i]]));
            work.push_back(std::move(branch));
            std::size_t pos = ws.size();
            while (pos > 0) {
                --pos;
                if (++idx[pos] < roots[pos].size()) break;
                idx[pos] = 0;
                if (pos == 0) {
                    pos = SIZE_MAX;
                    break;
                }
            }
            if (pos == SIZE_MAX) break;
        }
    }
    return out;
}

std::optional<SigmaChain> perfect_closure(const Presentation& p) {
    if (dec_laurent(p).empty()) return std::nullopt;
    SigmaChain cur = reflexive_closure(p);
    while (true) {
        CharacterData d = character(cur);
        PCheckResult chk = p_saturation_check(d.basis, cur.family);
        if (chk.p_saturated) return chain_from(cur, d);
        Presentation next = chain_from(cur, d);
        for (const auto& cert : chk.certificates) {
            if (cert.holds) continue;
            auto mv = character_value(d, ZPoly(cert.m) * cert.g, cur.family);
            if (!mv) throw std::logic_error("perfect closure: m*g outside the support lattice");
            ZPoly lin = ZPoly::x() - ZPoly(cert.o);
            std::optional<CoeffElem> value;
            for (const auto& a : kth_roots(*mv, cert.m.get_ui())) {
                CoeffElem v = pow_by(a, lin, cur.family);
                if (value && *value != v)
                    throw std::runtime_error("perfect closure: root choice changes the adjoined value");
                value = v;
            }
            next.generators.push_back(make_binomial(lin * cert.g, *value));
        }
        cur = reflexive_closure(next);
    }
}

Classification classify(const Presentation& p) {
    Classification c;
    ProperCheck pc = is_proper(p);
    c.proper = pc.proper;
    if (!c.proper) {
        c.notes.push_back("improper: the ideal is [1]");
        return c;
    }
    CharacterData d = character(p);
    c.dimension = p.n - d.basis.rank();
    c.prime = zfactor(d.basis).empty();
    c.reflexive = xfactor(d.basis).empty();
    if (c.reflexive) {
        bool psat = p_saturation_check(d.basis, p.family).p_saturated;
        bool nonunit = !dec_laurent(p).empty();
        if (!nonunit) c.notes.push_back("perfect closure is [1]");
        c.perfect = psat && nonunit;
    }
    bool trivial = std::all_of(d.values.begin(), d.values.end(), [](const CoeffElem& v) { return v.is_one(); });
    c.toric = trivial && zxfactor(d.basis).empty();
    return c;
}

NonLaurentBinomial laurent_lift(const LaurentBinomial& b) {
    return {positive_part(b.support), positive_part(-b.support), b.coeff};
}

std::vector<NonLaurentBinomial> laurent_lift(const SigmaChain& chain) {
    std::vector<NonLaurentBinomial> out;
    for (const auto& g : chain.generators) out.push_back(laurent_lift(g));
    return out;
}

LaurentBinomial laurent_drop(const NonLaurentBinomial& b) { return make_binomial(b.plus - b.minus, b.coeff); }

namespace {

bool nonnegative(const ZxVec& v) {
    for (const auto& p : v)
        for (const auto& c : p.coeffs())
            if (c < 0) return false;
    return true;
}

bool disjoint(const ZxVec& a, const ZxVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a[i].coeffs().size(); ++k)
            if (a[i].coeffs()[k] != 0 && b[i].coeff(k) != 0) return false;
    return true;
}

} // namespace

std::vector<RestrictedComponent> dec_binomial_restricted(const std::vector<RestrictedChain>& input) {
    std::vector<RestrictedComponent> out;
    for (const auto& rc : input) {
        std::vector<std::size_t> vars;
        Presentation p{rc.n, rc.family, {}};
        for (const auto& e : rc.elements)
            if (e.is_variable) {
                if (e.variable >= rc.n) throw std::invalid_argument("variable index out of range");
                vars.push_back(e.variable);
            }
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        for (const auto& e : rc.elements) {
            if (e.is_variable) continue;
            const auto& b = e.binomial;
            if (b.plus.size() != rc.n || b.minus.size() != rc.n)
                throw std::invalid_argument("binomial exponent length differs from n");
            if (!nonnegative(b.plus) || !nonnegative(b.minus) || !disjoint(b.plus, b.minus))
                throw std::invalid_argument("binomial is not in normal form");
            for (auto v : vars)
                if (!b.plus[v].is_zero() || !b.minus[v].is_zero())
                    throw std::invalid_argument("binomial involves a variable of the chain");
            p.generators.push_back(laurent_drop(b));
        }
        std::sort(p.generators.begin(), p.generators.end(), [](const LaurentBinomial& a, const LaurentBinomial& b) {
            return compare_vecs(a.support, b.support) < 0;
        });
        if (!is_regular_coherent(p)) throw std::invalid_argument("input chain is not regular and coherent");
        if (p.generators.empty()) {
            out.push_back({vars, {}});
            continue;
        }
        for (const auto& comp : dec_laurent(p)) out.push_back({vars, laurent_lift(comp)});
    }
    return out;
}

} // namespace zxlat

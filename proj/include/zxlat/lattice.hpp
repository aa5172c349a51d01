#pragma once

#include "zxlat/zpoly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace zxlat {

// Element of Z[x]^n. Positions are 0-based in code (epsilon_1 is index 0).
using ZxVec = std::vector<ZPoly>;

ZxVec zero_vec(std::size_t n);
ZxVec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const ZxVec& v);
ZxVec operator+(const ZxVec& a, const ZxVec& b);
ZxVec operator-(const ZxVec& a, const ZxVec& b);
ZxVec operator-(const ZxVec& a);
ZxVec operator*(const ZPoly& p, const ZxVec& v);
ZxVec shift(const ZxVec& v, std::size_t k);
// sum_i coeffs[i] * vecs[i]; all vectors must have length n.
ZxVec combine(std::size_t n, const std::vector<ZxVec>& vecs, const std::vector<ZPoly>& coeffs);

// The monomial a*x^exp*eps_pos.
struct LatticeMonomial {
    Int coeff;
    std::size_t exp = 0;
    std::size_t pos = 0;
};

// -1, 0, 1 under: higher position wins, then higher degree, then larger |a|.
int compare_monomials(const LatticeMonomial& a, const LatticeMonomial& b);
// Leading term; throws std::domain_error on the zero vector.
LatticeMonomial leading_term(const ZxVec& f);
// Positive leading coefficient at the highest nonzero position.
bool is_normal(const ZxVec& f);
ZxVec normalized(const ZxVec& f);
// Total order on vectors: compare leading terms, then the remainders.
int compare_vecs(const ZxVec& a, const ZxVec& b);

// f = sum_j quotients[j] * G[j] + remainder, remainder G-reduced.
struct Reduction {
    ZxVec remainder;
    std::vector<ZPoly> quotients;
};
// Eliminates the largest reducible monomial until none remains. A monomial
// a*x^k*eps_i is reducible by g with LT(g) = b*x^d*eps_i iff d <= k and b | a.
Reduction reduce(const ZxVec& f, const std::vector<ZxVec>& G);
ZxVec grem(const ZxVec& f, const std::vector<ZxVec>& G);

// Zero when the leading positions differ.
ZxVec s_vector(const ZxVec& f, const ZxVec& g);

// One block of a GHNF: the columns first..first+size-1 share pivot row `row`.
struct Block {
    std::size_t row = 0;
    std::size_t first = 0;
    std::size_t size = 0;
};

// Columns of a reduced Groebner basis, ascending, each a normal vector.
struct Ghnf {
    std::size_t n = 0;
    std::vector<ZxVec> columns;

    std::vector<Block> blocks() const;
    std::size_t rank() const { return blocks().size(); }
    bool operator==(const Ghnf& o) const { return n == o.n && columns == o.columns; }
};

// coeffs[j][k] is the coefficient of input generator k in output column j.
struct TransformLog {
    std::vector<std::vector<ZPoly>> coeffs;
};

struct GroebnerResult {
    Ghnf basis;
    TransformLog log;
};

// Reduced Groebner basis of (gens) in Z[x]^n. Tails are additionally brought
// to canonical residues in [0, b), so equal lattices give equal bases.
// The transform log is left empty when with_log is false.
GroebnerResult groebner(const std::vector<ZxVec>& gens, std::size_t n, bool with_log = true);

struct GhnfCheck {
    bool ok = true;
    int violated = 0;  // 0: shape (zero or unordered columns), 1..4: definition conditions
    std::string reason;
};
GhnfCheck is_ghnf(const std::vector<ZxVec>& columns);

std::size_t rank(const Ghnf& b);
bool contains(const Ghnf& b, const ZxVec& f);
bool same_lattice(const std::vector<ZxVec>& a, const std::vector<ZxVec>& b, std::size_t n);

// Free basis of {u in Z[x]^s : sum_i u_i M_i = 0} for columns M_1..M_s of length n.
std::vector<ZxVec> kernel_syzygy(const std::vector<ZxVec>& columns, std::size_t n);

enum class Tri { False, True, Unknown };
// Independent membership check by integer linear algebra on coefficient
// expansions. degree_cap < 0 selects deg f + sum deg gens + 8.
Tri member_oracle(const std::vector<ZxVec>& gens, const ZxVec& f, long degree_cap = -1);

// The finite part C_- of the extension: x^j * c for the non-final columns c of
// each block, j below the degree gap to the next column.
struct ExtensionElement {
    ZxVec v;
    std::size_t column = 0;
    std::size_t shift = 0;
};
std::vector<ExtensionElement> extension_elements(const Ghnf& b);
std::vector<ZxVec> extension_prefix(const Ghnf& b);

// Free basis of {v : <v, c> = 0 for every column c}.
std::vector<ZxVec> orth_complement(const Ghnf& b);

std::string to_string(const ZxVec& v);

} // namespace zxlat

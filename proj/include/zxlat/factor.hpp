#pragma once

#include "zxlat/domains.hpp"

#include <utility>
#include <vector>

namespace zxlat {

// f = content * prod(factor_i ^ mult_i); every factor is irreducible over Q,
// primitive over Z and has positive leading coefficient. Factors are sorted
// by degree, then by coefficients from the top.
struct Factorization {
    Int content;
    std::vector<std::pair<ZPoly, unsigned>> factors;
};

inline constexpr long kDefaultFactorDegreeCap = 64;

// Throws std::domain_error for the zero polynomial or when deg f exceeds the cap.
Factorization factor_over_Q(const ZPoly& f, long degree_cap = kDefaultFactorDegreeCap);

// Squarefree decomposition of a primitive polynomial with positive leading
// coefficient: f = prod(a_i ^ i); entries with a_i = 1 are omitted.
std::vector<std::pair<ZPoly, unsigned>> squarefree_decomposition(const ZPoly& f);

// Monic irreducible factors of a squarefree polynomial over Z_p.
std::vector<FpPoly> factor_squarefree_mod_p(const PrimeField& k, const FpPoly& f);

// Prime factorization of n >= 1, primes ascending.
std::vector<std::pair<Int, unsigned>> prime_factors(const Int& n);

} // namespace zxlat

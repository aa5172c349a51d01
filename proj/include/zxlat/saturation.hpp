#pragma once

#include "zxlat/lattice.hpp"

#include <vector>

namespace zxlat {

enum class MultiplierKind { XPower, Prime, Polynomial };

// An element h outside the lattice with multiplier * h inside it.
struct SaturationWitness {
    ZxVec h;
    MultiplierKind kind = MultiplierKind::XPower;
    ZPoly multiplier;              // x^k, p, or m * p(x)
    std::size_t x_power = 0;       // XPower: k
    Int prime;                     // Prime: p
    ZPoly factor;                  // Polynomial: the irreducible p(x)
    std::vector<ZPoly> combination;  // multiplier * h = sum_j combination[j] * columns[j]
};

// Witnesses from the given Z-kernel vectors of [c_1(0), ..., c_s(0)].
std::vector<SaturationWitness> xfactor_with_kernel(const Ghnf& b, const std::vector<std::vector<Int>>& kernel);
std::vector<SaturationWitness> xfactor(const Ghnf& b);
// Witnesses for the first prime (ascending) that yields any.
std::vector<SaturationWitness> zfactor(const Ghnf& b);
// zfactor witnesses when present, otherwise those of the first irreducible
// factor (sorted) of the first-column pivot polynomials that yields any.
std::vector<SaturationWitness> zxfactor(const Ghnf& b);

Ghnf sat_x(const std::vector<ZxVec>& gens, std::size_t n);
Ghnf sat_z(const std::vector<ZxVec>& gens, std::size_t n);
Ghnf sat_zx(const std::vector<ZxVec>& gens, std::size_t n);
Ghnf full_sat(const std::vector<ZxVec>& gens, std::size_t n);

struct SatZResult {
    Ghnf basis;
    Int bound;  // product of the primes used; bound * g lies in the input lattice
};
SatZResult sat_z_tracked(const std::vector<ZxVec>& gens, std::size_t n);

// o_m for the family u in {+1, -1}: the residue of u modulo m in [0, m).
Int family_residue(int family, const Int& m);

struct PCertificate {
    ZxVec g;
    Int m;
    Int o;
    bool holds = false;
};
struct PCheckResult {
    bool p_saturated = true;
    std::vector<PCertificate> certificates;
};
// Throws std::invalid_argument when the lattice is not x-saturated or the
// family is not +1 or -1.
PCheckResult p_saturation_check(const Ghnf& l, int family);
Ghnf p_saturation(const std::vector<ZxVec>& gens, std::size_t n, int family);

} // namespace zxlat

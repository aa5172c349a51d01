#pragma once

#include "zxlat/coeffgroup.hpp"
#include "zxlat/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zxlat {

// Y^support - coeff with a normal, nonzero support.
struct LaurentBinomial {
    ZxVec support;
    CoeffElem coeff;
    bool operator==(const LaurentBinomial& o) const { return support == o.support && coeff == o.coeff; }
};

// Builds Y^f - c, replacing it by the equivalent Y^(-f) - c^(-1) when f is not
// normal. Throws std::invalid_argument for f = 0.
LaurentBinomial make_binomial(const ZxVec& f, const CoeffElem& c);

// a*Y^exA + b*Y^exB = a * Y^cofactor * (Y^(f+) - c*Y^(f-)).
struct Normalized {
    ZxVec cofactor;
    LaurentBinomial binomial;
};
Normalized normalize(const CoeffElem& a, const ZxVec& exA, const CoeffElem& b, const ZxVec& exB);

struct Term {
    CoeffElem coeff;
    ZxVec exponent;
};
// Throws std::invalid_argument unless there are exactly two terms.
Normalized normalize_terms(const std::vector<Term>& terms);

// A finite set of Laurent binomials in n variables under the family u = +-1.
// Chains use the same representation with generators ordered ascending.
struct Presentation {
    std::size_t n = 0;
    int family = 1;
    std::vector<LaurentBinomial> generators;
};
using SigmaChain = Presentation;

struct ProperCheck {
    bool proper = true;
    std::optional<ZxVec> violating;  // kernel vector u with prod c_i^(u_i) != 1
};
ProperCheck is_proper(const Presentation& p);

// Support lattice with character values on its GHNF columns.
struct CharacterData {
    Ghnf basis;
    std::vector<CoeffElem> values;
};
// Throws std::domain_error for an improper presentation.
CharacterData character(const Presentation& p);
SigmaChain char_set(const Presentation& p);
// rho(f) for f in the support lattice; nullopt when f lies outside it.
std::optional<CoeffElem> character_value(const CharacterData& d, const ZxVec& f, int family);

struct PremResult {
    enum class Kind { Zero, Constant, Binomial } kind = Kind::Zero;
    CoeffElem constant;        // Constant: the remainder is 1 - constant
    LaurentBinomial binomial;  // Binomial: the remainder
    ZxVec support;             // support of the remainder before normalization
};
PremResult prem(const LaurentBinomial& f, const SigmaChain& chain);

bool ideal_member(const Presentation& p, const LaurentBinomial& f);
bool is_regular_coherent(const SigmaChain& chain);

struct Classification {
    bool proper = false;
    bool prime = false;
    bool reflexive = false;
    bool perfect = false;
    bool toric = false;
    std::size_t dimension = 0;
    std::vector<std::string> notes;
};
Classification classify(const Presentation& p);

// Throws std::domain_error for an improper presentation.
SigmaChain reflexive_closure(const Presentation& p);
std::vector<SigmaChain> dec_laurent(const Presentation& p);
// nullopt stands for the unit ideal [1].
std::optional<SigmaChain> perfect_closure(const Presentation& p);

// Y^plus - coeff * Y^minus with plus, minus having nonnegative coefficients.
struct NonLaurentBinomial {
    ZxVec plus;
    ZxVec minus;
    CoeffElem coeff;
    bool operator==(const NonLaurentBinomial& o) const {
        return plus == o.plus && minus == o.minus && coeff == o.coeff;
    }
};
NonLaurentBinomial laurent_lift(const LaurentBinomial& b);
std::vector<NonLaurentBinomial> laurent_lift(const SigmaChain& chain);
LaurentBinomial laurent_drop(const NonLaurentBinomial& b);

// A chain element: either the variable y_index or a binomial.
struct RestrictedElement {
    bool is_variable = false;
    std::size_t variable = 0;
    NonLaurentBinomial binomial;
};
struct RestrictedChain {
    std::size_t n = 0;
    int family = 1;
    std::vector<RestrictedElement> elements;
};
struct RestrictedComponent {
    std::vector<std::size_t> variables;
    std::vector<NonLaurentBinomial> chain;
};
// Throws std::invalid_argument when a chain is not regular and coherent.
std::vector<RestrictedComponent> dec_binomial_restricted(const std::vector<RestrictedChain>& input);

} // namespace zxlat

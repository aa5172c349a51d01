#pragma once

#include "zxlat/coeffgroup.hpp"
#include "zxlat/lattice.hpp"
#include "zxlat/sigma_ideal.hpp"
#include "zxlat/toric.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>

namespace zxlat {

using Json = nlohmann::json;

// Malformed or invalid document.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Coefficient outside the supported group (floats, unknown fields, ...).
struct UnsupportedCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Little-endian coefficient array; entries beyond int64 are decimal strings.
Json poly_to_json(const ZPoly& p);
// Accepts a coefficient array (integers or integer strings) or an expression string.
ZPoly poly_from_json(const Json& j);

Json vec_to_json(const ZxVec& v);
ZxVec vec_from_json(const Json& j, std::optional<std::size_t> n = std::nullopt);
Json columns_to_json(const std::vector<ZxVec>& cols);

// An array of columns, or {"n": rows, "columns": [...]}.
struct ColumnsDoc {
    std::size_t n = 0;
    std::vector<ZxVec> columns;
};
ColumnsDoc columns_from_json(const Json& j);

Json coeff_to_json(const CoeffElem& c);
// Accepts the full object, an integer, or a "p/q" string.
CoeffElem coeff_from_json(const Json& j);

int family_from_json(const Json& j);
std::string family_to_string(int family);

Json binomial_to_json(const LaurentBinomial& b);
Json presentation_to_json(const Presentation& p);
// An explicit family overrides the document's "family" field.
Presentation presentation_from_json(const Json& j, std::optional<int> family);

Json classification_to_json(const Classification& c);

} // namespace zxlat

#pragma once

#include "zxlat/lattice.hpp"
#include "zxlat/sigma_ideal.hpp"

#include <optional>
#include <vector>

namespace zxlat {

// m x n matrix over Z[x] stored by columns; column i is the exponent vector
// alpha_i of the i-th monomial in m parameters.
struct DefiningMatrix {
    std::size_t rows = 0;
    std::vector<ZxVec> columns;
};

// Throws std::invalid_argument for a zero row or ragged columns. Zero columns
// are kept: they contribute the binomial y_i - 1.
Presentation implicitize(const DefiningMatrix& a);
// Throws std::invalid_argument when require_toric is set and l is not toric.
DefiningMatrix parametrize(const Ghnf& l, bool require_toric = true);
bool is_toric_lattice(const Ghnf& l);
// sum over rows of (max degree - min low degree); throws on a zero row.
long order_bound(const DefiningMatrix& a);

// nullopt stands for minus infinity. Throws for non-square input or m > 10.
using JacobiEntry = std::optional<long>;
JacobiEntry jacobi_number(const std::vector<std::vector<JacobiEntry>>& m);

} // namespace zxlat

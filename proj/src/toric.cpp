#include "zxlat/toric.hpp"

#include "zxlat/saturation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zxlat {

namespace {

void validate(const DefiningMatrix& a) {
    for (const auto& c : a.columns)
        if (c.size() != a.rows) throw std::invalid_argument("defining matrix columns have inconsistent length");
    for (std::size_t r = 0; r < a.rows; ++r) {
        bool zero = std::all_of(a.columns.begin(), a.columns.end(), [&](const ZxVec& c) { return c[r].is_zero(); });
        if (zero) throw std::invalid_argument("defining matrix has a zero row " + std::to_string(r + 1));
    }
}

} // namespace

Presentation implicitize(const DefiningMatrix& a) {
    validate(a);
    Presentation p{a.columns.size(), 1, {}};
    for (const auto& u : kernel_syzygy(a.columns, a.rows)) p.generators.push_back(make_binomial(u, CoeffElem::one()));
    return p;
}

bool is_toric_lattice(const Ghnf& l) { return zxfactor(l).empty(); }

DefiningMatrix parametrize(const Ghnf& l, bool require_toric) {
    if (require_toric && !is_toric_lattice(l)) throw std::invalid_argument("lattice is not Z[x]-saturated");
    const auto rows = orth_complement(l);
    DefiningMatrix a;
    a.rows = rows.size();
    a.columns.assign(l.n, ZxVec(a.rows));
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t i = 0; i < l.n; ++i) a.columns[i][k] = rows[k][i];
    return a;
}

long order_bound(const DefiningMatrix& a) {
    validate(a);
    long total = 0;
    for (std::size_t r = 0; r < a.rows; ++r) {
        long hi = -1, lo = -1;
        for (const auto& c : a.columns) {
            hi = std::max(hi, c[r].degree());
            long low = c[r].is_zero() ? 0 : static_cast<long>(c[r].low_degree());
            lo = lo < 0 ? low : std::min(lo, low);
        }
        total += hi - lo;
    }
    return total;
}

JacobiEntry jacobi_number(const std::vector<std::vector<JacobiEntry>>& m) {
    const std::size_t k = m.size();
    for (const auto& row : m)
        if (row.size() != k) throw std::invalid_argument("jacobi_number needs a square matrix");
    if (k > 10) throw std::invalid_argument("jacobi_number supports at most 10 rows");
    if (k == 0) return 0L;
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    JacobiEntry best;
    do {
        long sum = 0;
        bool finite = true;
        for (std::size_t i = 0; i < k && finite; ++i) {
            if (!m[i][perm[i]]) finite = false;
            else sum += *m[i][perm[i]];
        }
        if (finite && (!best || sum > *best)) best = sum;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace zxlat

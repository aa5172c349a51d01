#pragma once

#include "zxlat/domains.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace zxlat {

// Column Hermite form H = A*U over a Euclidean domain. Zero columns come
// first; pivot columns follow in increasing order of their pivot row, where
// the pivot row of a column is its last nonzero row. Pivots are normalized
// (positive over Z, monic over F[x], one over a field) and the entries in a
// pivot row to the right of the pivot are reduced modulo it.
template <class D>
struct HnfResult {
    Matrix<typename D::Elem> H, U;
    std::size_t zero_columns = 0;
    std::vector<std::size_t> pivot_rows;  // one per pivot column, ascending
};

template <class D>
HnfResult<D> hnf(const D& d, const Matrix<typename D::Elem>& A) {
    using E = typename D::Elem;
    const std::size_t n = A.rows, s = A.cols;
    std::vector<std::vector<E>> col(s), tr(s);
    for (std::size_t j = 0; j < s; ++j) {
        col[j] = A.column(j);
        tr[j].assign(s, d.zero());
        tr[j][j] = d.one();
    }
    auto axpy = [&](std::size_t dst, const E& q, std::size_t src) {
        // col[dst] -= q * col[src]
        for (std::size_t r = 0; r < n; ++r)
            if (!d.is_zero(col[src][r])) col[dst][r] = d.sub(col[dst][r], d.mul(q, col[src][r]));
        for (std::size_t r = 0; r < s; ++r)
            if (!d.is_zero(tr[src][r])) tr[dst][r] = d.sub(tr[dst][r], d.mul(q, tr[src][r]));
    };
    auto scale = [&](std::size_t j, const E& u) {
        for (auto& v : col[j]) v = d.mul(v, u);
        for (auto& v : tr[j]) v = d.mul(v, u);
    };

    std::vector<bool> active(s, true);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
    for (std::size_t r = n; r-- > 0;) {
        while (true) {
            std::optional<std::size_t> best;
            for (std::size_t j = 0; j < s; ++j) {
                if (!active[j] || d.is_zero(col[j][r])) continue;
                if (!best || d.norm_less(col[j][r], col[*best][r])) best = j;
            }
            if (!best) break;
            bool clean = true;
            for (std::size_t j = 0; j < s; ++j) {
                if (!active[j] || j == *best || d.is_zero(col[j][r])) continue;
                axpy(j, d.euclid_quot(col[j][r], col[*best][r]), *best);
                if (!d.is_zero(col[j][r])) clean = false;
            }
            if (clean) {
                scale(*best, d.normalizer(col[*best][r]));
                active[*best] = false;
                pivots.emplace_back(r, *best);
                break;
            }
        }
    }
    // pivots were found with descending rows; reduce entries above each pivot.
    for (std::size_t a = 0; a < pivots.size(); ++a) {
        auto [r, j] = pivots[a];
        for (std::size_t b = 0; b < a; ++b) {
            std::size_t k = pivots[b].second;
            if (d.is_zero(col[k][r])) continue;
            E q = d.reduce_quot(col[k][r], col[j][r]);
            if (!d.is_zero(q)) axpy(k, q, j);
        }
    }
    HnfResult<D> out;
    out.H = Matrix<E>(n, s, d.zero());
    out.U = Matrix<E>(s, s, d.zero());
    std::size_t pos = 0;
    for (std::size_t j = 0; j < s; ++j)
        if (active[j]) {
            out.H.set_column(pos, col[j]);
            out.U.set_column(pos, tr[j]);
            ++pos;
        }
    out.zero_columns = pos;
    for (std::size_t a = pivots.size(); a-- > 0;) {
        auto [r, j] = pivots[a];
        out.H.set_column(pos, col[j]);
        out.U.set_column(pos, tr[j]);
        out.pivot_rows.push_back(r);
        ++pos;
    }
    return out;
}

// Basis of {v : A v = 0}; a lattice basis over Z and Z_p[x], a linearly
// independent spanning set over a field.
template <class D>
std::vector<std::vector<typename D::Elem>> kernel(const D& d, const Matrix<typename D::Elem>& A) {
    auto h = hnf(d, A);
    std::vector<std::vector<typename D::Elem>> out;
    for (std::size_t j = 0; j < h.zero_columns; ++j) out.push_back(h.U.column(j));
    return out;
}

// Some x with A x = b, or nullopt when none exists over the domain.
template <class D>
std::optional<std::vector<typename D::Elem>> solve(const D& d, const Matrix<typename D::Elem>& A,
                                                   std::vector<typename D::Elem> b) {
    using E = typename D::Elem;
    if (b.size() != A.rows) throw std::invalid_argument("solve: dimension mismatch");
    auto h = hnf(d, A);
    std::vector<E> z(A.cols, d.zero());
    std::size_t next = h.pivot_rows.size();  // pivot index scanning down
    for (std::size_t r = A.rows; r-- > 0;) {
        if (next > 0 && h.pivot_rows[next - 1] == r) {
            --next;
            std::size_t j = h.zero_columns + next;
            if (d.is_zero(b[r])) continue;
            E q = d.euclid_quot(b[r], h.H(r, j));
            if (!d.is_zero(d.sub(b[r], d.mul(q, h.H(r, j))))) return std::nullopt;
            z[j] = q;
            for (std::size_t i = 0; i <= r; ++i)
                if (!d.is_zero(h.H(i, j))) b[i] = d.sub(b[i], d.mul(q, h.H(i, j)));
        } else if (!d.is_zero(b[r])) {
            return std::nullopt;
        }
    }
    return mat_vec(d, h.U, z);
}

} // namespace zxlat

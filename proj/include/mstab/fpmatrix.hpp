#pragma once

#include <vector>

#include "mstab/errors.hpp"

namespace mstab {

// Dense matrices over a field-like object F exposing elem/add/sub/mul/inv/
// is_zero/is_unit.  Over the dual numbers a pivot must be a unit; a column
// whose remaining entries are all nilpotent cannot be eliminated and throws
// degenerate_pivot (the caller treats that as an unlucky draw).

template <class F>
struct KernelResult {
    std::vector<std::vector<typename F::elem>> basis; // kernel vectors
    int rank = 0;
};

template <class F>
KernelResult<F> kernel_basis(const F& field, std::vector<std::vector<typename F::elem>> m,
                             std::size_t ncols) {
    using E = typename F::elem;
    const std::size_t nrows = m.size();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t piv = nrows;
        for (std::size_t i = r; i < nrows; ++i) {
            if (field.is_unit(m[i][c])) { piv = i; break; }
        }
        if (piv == nrows) {
            for (std::size_t i = r; i < nrows; ++i)
                if (!field.is_zero(m[i][c]))
                    throw degenerate_pivot("column has only nilpotent entries");
            continue;
        }
        std::swap(m[r], m[piv]);
        const E iv = field.inv(m[r][c]);
        for (std::size_t j = 0; j < ncols; ++j) m[r][j] = field.mul(m[r][j], iv);
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || field.is_zero(m[i][c])) continue;
            const E f = m[i][c];
            for (std::size_t j = 0; j < ncols; ++j)
                m[i][j] = field.sub(m[i][j], field.mul(f, m[r][j]));
        }
        pivot_cols.push_back(c);
        ++r;
    }
    KernelResult<F> out;
    out.rank = static_cast<int>(r);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<E> v(ncols, field.zero());
        v[f] = field.one();
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = field.sub(field.zero(), m[i][f]);
        out.basis.push_back(std::move(v));
    }
    return out;
}

template <class F>
int matrix_rank_f(const F& field, std::vector<std::vector<typename F::elem>> m,
                  std::size_t ncols) {
    return kernel_basis(field, std::move(m), ncols).rank;
}

// Determinant by elimination with unit pivots; falls back to cofactor
// expansion when a column has no unit entry (possible over the duals).
template <class F>
typename F::elem determinant(const F& field, std::vector<std::vector<typename F::elem>> m) {
    using E = typename F::elem;
    const std::size_t n = m.size();
    if (n == 0) return field.one();
    E det = field.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i) {
            if (field.is_unit(m[i][c])) { piv = i; break; }
        }
        if (piv == n) {
            // cofactor expansion along column c of the remaining block
            E acc = field.zero();
            for (std::size_t i = c; i < n; ++i) {
                if (field.is_zero(m[i][c])) continue;
                std::vector<std::vector<E>> minor;
                for (std::size_t r2 = c; r2 < n; ++r2) {
                    if (r2 == i) continue;
                    std::vector<E> row;
                    for (std::size_t c2 = c + 1; c2 < n; ++c2) row.push_back(m[r2][c2]);
                    minor.push_back(std::move(row));
                }
                E term = field.mul(m[i][c], determinant(field, std::move(minor)));
                if ((i - c) % 2) term = field.neg(term);
                acc = field.add(acc, term);
            }
            return field.mul(det, acc);
        }
        if (piv != c) {
            std::swap(m[c], m[piv]);
            det = field.neg(det);
        }
        det = field.mul(det, m[c][c]);
        const E iv = field.inv(m[c][c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (field.is_zero(m[i][c])) continue;
            const E f = field.mul(m[i][c], iv);
            for (std::size_t j = c; j < n; ++j)
                m[i][j] = field.sub(m[i][j], field.mul(f, m[c][j]));
        }
    }
    return det;
}

} // namespace mstab

#pragma once

#include <optional>
#include <vector>

#include "mstab/rational.hpp"

namespace mstab {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

inline int matrix_rank(QMat m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (m[i][c] != 0) { piv = i; break; }
        }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        const Rat lead = m[rank][c];
        for (std::size_t j = c; j < cols; ++j) m[rank][j] /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (static_cast<int>(i) == rank || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Solves the square system A x = b. Empty optional when A is singular.
inline std::optional<QVec> solve_square(QMat a, QVec b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i) {
            if (a[i][c] != 0) { piv = i; break; }
        }
        if (piv == n) return std::nullopt;
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        const Rat lead = a[c][c];
        for (std::size_t j = c; j < n; ++j) a[c][j] /= lead;
        b[c] /= lead;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    return b;
}

} // namespace mstab

#pragma once

#include <vector>

#include "mstab/errors.hpp"
#include "mstab/linalg.hpp"
#include "mstab/rational.hpp"

namespace mstab {

/// Finitely generated cone in Q^n.  Queries are exact; there is no floating
/// point anywhere in the membership path.
struct RationalCone {
    int ambient_dim = 0;
    std::vector<QVec> generators;

    RationalCone() = default;
    RationalCone(int dim, std::vector<QVec> gens)
        : ambient_dim(dim), generators(std::move(gens)) {
        for (const auto& g : generators) {
            if (static_cast<int>(g.size()) != ambient_dim)
                throw dimension_mismatch("generator has wrong dimension");
            bool zero = true;
            for (const auto& x : g) {
                if (x != 0) { zero = false; break; }
            }
            if (zero) throw bad_parameters("cone generators must be nonzero");
        }
    }
};

enum class Containment { interior, boundary, outside };

namespace detail {

// Phase-1 simplex: is {x >= 0 : A x = b} nonempty?  Exact rationals,
// Bland's rule, so it terminates without cycling.
inline bool lp_feasible(QMat a, QVec b) {
    const std::size_t m = a.size();
    if (m == 0) return true;
    const std::size_t n = a[0].size();
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            b[i] = -b[i];
            for (auto& x : a[i]) x = -x;
        }
    }
    // tableau with one artificial variable per row; objective = sum of artificials
    const std::size_t total = n + m;
    QMat t(m, QVec(total + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][total] = b[i];
    }
    std::vector<std::size_t> basis(m);
    QVec obj(total + 1);
    for (std::size_t i = 0; i < m; ++i) {
        basis[i] = n + i;
        for (std::size_t j = 0; j <= total; ++j) obj[j] += t[i][j];
    }
    while (true) {
        std::size_t enter = total;
        for (std::size_t j = 0; j < n; ++j) { // Bland: smallest eligible index
            if (obj[j] > 0) { enter = j; break; }
        }
        if (enter == total) break;
        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == m) { leave = i; continue; }
            const Rat cur = t[i][total] / t[i][enter];
            const Rat best = t[leave][total] / t[leave][enter];
            if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) break; // unbounded column cannot improve a bounded phase-1
        const Rat piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rat f = t[i][enter];
            for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
        }
        {
            const Rat f = obj[enter];
            for (std::size_t j = 0; j <= total; ++j) obj[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return obj[total] == 0;
}

} // namespace detail

/// Exact three-way membership: relative-interior / boundary / outside.
/// A point is "interior" when it is a strictly positive combination of the
/// generators (the relative interior of the cone); the apex of a pointed
/// cone is therefore "boundary".
inline Containment cone_contains(const RationalCone& cone, const QVec& v) {
    if (static_cast<int>(v.size()) != cone.ambient_dim)
        throw dimension_mismatch("query point has wrong dimension");
    const std::size_t n = cone.ambient_dim;
    const std::size_t m = cone.generators.size();

    // membership: exists lambda >= 0 with G lambda = v
    QMat a(n, QVec(m));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) a[i][j] = cone.generators[j][i];
    if (!detail::lp_feasible(a, v)) return Containment::outside;

    // relative interior: exists lambda >= 1 (componentwise), K >= 0 with
    // G lambda = K v; substituting mu = lambda - 1 gives G mu - K v = -G 1.
    QMat a2(n, QVec(m + 1));
    QVec b2(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat row_sum = 0;
        for (std::size_t j = 0; j < m; ++j) {
            a2[i][j] = cone.generators[j][i];
            row_sum += cone.generators[j][i];
        }
        a2[i][m] = -v[i];
        b2[i] = -row_sum;
    }
    return detail::lp_feasible(a2, b2) ? Containment::interior : Containment::boundary;
}

} // namespace mstab

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mstab/errors.hpp"
#include "mstab/fp.hpp"
#include "mstab/fpmatrix.hpp"
#include "mstab/rng.hpp"

namespace mstab {

struct FatPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    int mult = 2;
};

/// Bidegree-(a,b) linear system with imposed fat points over F_p, plus the
/// first-order deformation data used by the moving-curve certificate.
struct FatPointConfig {
    int a = 0;
    int b = 0;
    std::int64_t p = 32003;
    std::uint64_t seed = 0;
    int random_points = 0; // draw this many random points ...
    int random_mult = 2;   // ... of this multiplicity
    std::vector<FatPoint> points; // explicit points instead, when nonempty
    int expected_kernel_dim = 0;
    int expected_rank = 0;
    int retries = 8;
    // per-point degree-1 deformation direction; empty means x -> x + u for all
    std::vector<std::pair<std::int64_t, std::int64_t>> deformation;

    int point_count() const {
        return points.empty() ? random_points : static_cast<int>(points.size());
    }
    std::pair<std::int64_t, std::int64_t> direction(int i) const {
        if (deformation.empty()) return {1, 0};
        return deformation.at(static_cast<std::size_t>(i));
    }

    // dimension count: (a+1)(b+1) minus the conditions the fat points impose
    int kernel_dim_formula() const {
        int conditions = 0;
        if (points.empty()) {
            conditions = random_points * (random_mult + 1) * random_mult / 2;
        } else {
            for (const auto& pt : points) conditions += (pt.mult + 1) * pt.mult / 2;
        }
        return (a + 1) * (b + 1) - conditions;
    }
    // size of the moduli space the family lives in: restricting to the line
    // x = 0 yields curves of degree b, in a P^r with r = kernel dim - 1
    int derived_d() const { return b; }
    int derived_r() const { return expected_kernel_dim - 1; }
};

inline FatPointConfig preset_c3() {
    FatPointConfig c;
    c.a = 7; c.b = 4;
    c.random_points = 12;
    c.expected_kernel_dim = 4;
    c.expected_rank = 5;
    return c;
}

inline FatPointConfig preset_c2() {
    FatPointConfig c;
    c.a = 5; c.b = 4;
    c.random_points = 9;
    c.expected_kernel_dim = 3;
    c.expected_rank = 7;
    return c;
}

/// All (a+1)(b+1) monomials x^i y^j, x-degree major, y-degree minor.
inline std::vector<std::pair<int, int>> monomial_basis(int a, int b) {
    if (a < 1 || b < 1) throw bad_parameters("bidegree components must be >= 1");
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>((a + 1) * (b + 1)));
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) out.emplace_back(i, j);
    return out;
}

namespace movdetail {

inline std::int64_t falling(const PrimeField& f, int n, int k) {
    std::int64_t acc = 1;
    for (int t = 0; t < k; ++t) acc = f.mul(acc, f.from_int(n - t));
    return acc;
}

// Rows imposing vanishing of order >= mult at one point: all partials of
// order < mult.  With a deformation direction (dx,dy) the point is
// (x + dx u, y + dy u) over F_p[u]/(u^2).
template <class F, class Lift>
void append_point_rows(const F& field, const PrimeField& base, int a, int b,
                       const FatPoint& pt, Lift lift,
                       std::vector<std::vector<typename F::elem>>& rows) {
    const auto monos = monomial_basis(a, b);
    for (int order = 0; order < pt.mult; ++order) {
        for (int ax = 0; ax <= order; ++ax) {
            const int ay = order - ax;
            std::vector<typename F::elem> row;
            row.reserve(monos.size());
            for (const auto& [i, j] : monos) {
                if (i < ax || j < ay) {
                    row.push_back(field.zero());
                    continue;
                }
                const auto coef = base.mul(falling(base, i, ax), falling(base, j, ay));
                row.push_back(lift(coef, i - ax, j - ay));
            }
            rows.push_back(std::move(row));
        }
    }
}

} // namespace movdetail

/// Condition matrix over F_p: one row per vanishing condition,
/// sum_i C(m_i+1, 2) rows total for double points and higher.
inline std::vector<std::vector<std::int64_t>> condition_matrix(
    const PrimeField& field, int a, int b, const std::vector<FatPoint>& points) {
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const auto& pt : points)
        if (!seen.insert({field.from_int(pt.x), field.from_int(pt.y)}).second)
            throw duplicate_points("fat points must be distinct");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& pt : points) {
        movdetail::append_point_rows(field, field, a, b, pt,
            [&](std::int64_t coef, int i, int j) {
                return field.mul(coef, field.mul(field.pow(field.from_int(pt.x), i),
                                                 field.pow(field.from_int(pt.y), j)));
            },
            rows);
    }
    return rows;
}

/// Condition matrix over the dual numbers with point `deformed` shifted by
/// its degree-1 direction times u.
inline std::vector<std::vector<DualField::elem>> condition_matrix_dual(
    const DualField& field, int a, int b, const std::vector<FatPoint>& points,
    int deformed, std::pair<std::int64_t, std::int64_t> dir) {
    const PrimeField& base = field.base;
    std::vector<std::vector<DualField::elem>> rows;
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        const auto& pt = points[idx];
        const std::int64_t x0 = base.from_int(pt.x), y0 = base.from_int(pt.y);
        const std::int64_t dx = static_cast<int>(idx) == deformed ? base.from_int(dir.first) : 0;
        const std::int64_t dy = static_cast<int>(idx) == deformed ? base.from_int(dir.second) : 0;
        movdetail::append_point_rows(field, base, a, b, pt,
            [&](std::int64_t coef, int i, int j) {
                // (x0 + dx u)^i (y0 + dy u)^j, truncated at u^2
                const std::int64_t xi = base.pow(x0, i);
                const std::int64_t yj = base.pow(y0, j);
                std::int64_t du = 0;
                if (i >= 1 && dx != 0)
                    du = base.add(du, base.mul(base.mul(base.from_int(i), base.pow(x0, i - 1)),
                                               base.mul(dx, yj)));
                if (j >= 1 && dy != 0)
                    du = base.add(du, base.mul(base.mul(base.from_int(j), base.pow(y0, j - 1)),
                                               base.mul(dy, xi)));
                return field.lift(base.mul(coef, base.mul(xi, yj)), base.mul(coef, du));
            },
            rows);
    }
    return rows;
}

/// Restriction to the line x = 0 followed by Pluecker coordinates: the
/// (b+1) x k matrix of x^0-coefficients, then all maximal minors with row
/// subsets in lexicographic order.
template <class F>
std::vector<typename F::elem> restrict_and_pluecker(
    const F& field, const std::vector<std::vector<typename F::elem>>& kernel, int b) {
    using E = typename F::elem;
    const int k = static_cast<int>(kernel.size());
    if (k == 0 || k > b + 1) throw rank_deficit("kernel dimension incompatible with restriction");
    // monomial order is x-major, so the x^0 y^j coefficients are entries 0..b
    std::vector<std::vector<E>> rest(b + 1, std::vector<E>(k));
    for (int j = 0; j <= b; ++j)
        for (int c = 0; c < k; ++c) rest[j][c] = kernel[c][j];
    std::vector<E> out;
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    while (true) {
        std::vector<std::vector<E>> minor(k, std::vector<E>(k));
        for (int i = 0; i < k; ++i) minor[i] = rest[subset[i]];
        out.push_back(determinant(field, std::move(minor)));
        // next lex subset of {0..b} of size k
        int i = k - 1;
        while (i >= 0 && subset[i] == b + 1 - (k - i)) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    bool all_zero = true;
    for (const auto& e : out) all_zero &= field.is_zero(e);
    if (all_zero) throw rank_deficit("restriction to x = 0 is degenerate");
    return out;
}

struct MovingCurveReport {
    int kernel_dim = 0;
    int rank = 0;
    bool pass = false;
    int retries_used = 0;
    std::uint64_t seed = 0;
    std::vector<FatPoint> points_used;
};

namespace movdetail {

inline std::vector<FatPoint> draw_points(const FatPointConfig& cfg, int attempt) {
    SplitMix64 rng = split_stream(cfg.seed, static_cast<std::uint64_t>(attempt));
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    std::vector<FatPoint> pts;
    while (static_cast<int>(pts.size()) < cfg.random_points) {
        FatPoint pt;
        pt.x = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cfg.p)));
        pt.y = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cfg.p)));
        pt.mult = cfg.random_mult;
        if (seen.insert({pt.x, pt.y}).second) pts.push_back(pt);
    }
    return pts;
}

} // namespace movdetail

/// Normalized per-point derivative rows: the deformed Pluecker vector is
/// rescaled by the field scalar that matches its constant part to the
/// undeformed vector, then the u-coefficients are read off.
inline std::vector<std::vector<std::int64_t>> derivative_matrix(
    const FatPointConfig& cfg, const std::vector<FatPoint>& pts,
    const std::vector<std::int64_t>& pluecker_base) {
    const PrimeField field(cfg.p);
    const DualField dual(cfg.p);
    std::size_t jstar = 0;
    while (jstar < pluecker_base.size() && pluecker_base[jstar] == 0) ++jstar;
    if (jstar == pluecker_base.size()) throw rank_deficit("zero base Pluecker vector");
    std::vector<std::vector<std::int64_t>> rows;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        auto m = condition_matrix_dual(dual, cfg.a, cfg.b, pts, i, cfg.direction(i));
        auto ker = kernel_basis(dual, std::move(m),
                                static_cast<std::size_t>((cfg.a + 1) * (cfg.b + 1)));
        if (static_cast<int>(ker.basis.size()) != cfg.expected_kernel_dim)
            throw rank_deficit("deformed kernel dimension changed");
        auto pl = restrict_and_pluecker(dual, ker.basis, cfg.b);
        if (!dual.is_unit(pl[jstar]))
            throw degenerate_pivot("deformed Pluecker vector degenerates at the chart entry");
        // s0 * pl.c0 must equal the base vector exactly
        const auto s0 = field.mul(field.from_int(pluecker_base[jstar]),
                                  field.inv(pl[jstar].c0));
        std::vector<std::int64_t> row(pl.size());
        for (std::size_t j = 0; j < pl.size(); ++j) {
            if (field.mul(s0, pl[j].c0) != field.from_int(pluecker_base[j]))
                throw degenerate_pivot("deformed kernel is not a scalar multiple at u = 0");
            row[j] = field.mul(s0, pl[j].c1);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// One full verification run on a fixed point set (no retries).
inline MovingCurveReport moving_curve_check_once(const FatPointConfig& cfg,
                                                 const std::vector<FatPoint>& pts) {
    const PrimeField field(cfg.p);
    MovingCurveReport rep;
    rep.seed = cfg.seed;
    rep.points_used = pts;
    const auto ncols = static_cast<std::size_t>((cfg.a + 1) * (cfg.b + 1));
    auto ker = kernel_basis(field, condition_matrix(field, cfg.a, cfg.b, pts), ncols);
    rep.kernel_dim = static_cast<int>(ker.basis.size());
    if (rep.kernel_dim != cfg.expected_kernel_dim) {
        rep.pass = false; // conditions failed to be independent: not a witness
        return rep;
    }
    const auto pluecker = restrict_and_pluecker(field, ker.basis, cfg.b);
    const auto rows = derivative_matrix(cfg, pts, pluecker);
    rep.rank = matrix_rank_f(field, rows, pluecker.size());
    rep.pass = rep.rank == cfg.expected_rank;
    return rep;
}

/// The moving-curve certificate: deform each point to first order, stack the
/// normalized Pluecker derivatives, and check the rank of the differential.
/// Degenerate pivots re-draw the random points from the seed stream.
inline MovingCurveReport moving_curve_check(const FatPointConfig& cfg) {
    if (!cfg.points.empty()) {
        auto rep = moving_curve_check_once(cfg, cfg.points);
        return rep;
    }
    for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
        const auto pts = movdetail::draw_points(cfg, attempt);
        try {
            auto rep = moving_curve_check_once(cfg, pts);
            rep.retries_used = attempt;
            return rep;
        } catch (const degenerate_pivot&) {
            continue; // unlucky draw, re-seed from the stream
        }
    }
    throw retries_exhausted("all " + std::to_string(cfg.retries + 1) +
                            " point draws hit degenerate pivots");
}

} // namespace mstab

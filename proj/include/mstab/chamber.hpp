#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mstab/cone.hpp"
#include "mstab/errors.hpp"
#include "mstab/picard.hpp"

namespace mstab {

enum class Tri { yes, no, wall };
enum class Tri13 { yes, no, unresolved, wall };

inline const char* to_string(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "wall";
    }
}
inline const char* to_string(Tri13 t) {
    switch (t) {
        case Tri13::yes: return "yes";
        case Tri13::no: return "no";
        case Tri13::unresolved: return "unresolved";
        default: return "wall";
    }
}

/// Divisorial base-locus verdict for an effective class at d = 4.
struct BaseLocusReport {
    Tri contains_delta22 = Tri::no;
    Tri contains_ddeg = Tri::no;
    Tri13 contains_delta13 = Tri13::unresolved;
    std::optional<std::string> chamber;
    bool moving_cone_member = false;
};

namespace detail {

inline QVec cross3(const QVec& a, const QVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Full-dimensional cone in Q^3 whose extreme rays are listed as a convex
// cycle; membership reduces to the facet inequalities.
struct Cell {
    std::string name;
    std::vector<QVec> rays;
    std::vector<QVec> facets; // inward normals
    // per-cell verdict, constant on the cell interior
    Tri d22 = Tri::no;
    Tri ddeg = Tri::no;
    Tri13 d13 = Tri13::unresolved;
    bool moving = false;

    Cell(std::string n, std::vector<QVec> r, Tri a, Tri b, Tri13 c, bool mov)
        : name(std::move(n)), rays(std::move(r)), d22(a), ddeg(b), d13(c), moving(mov) {
        const std::size_t m = rays.size();
        for (std::size_t i = 0; i < m; ++i) {
            QVec n3 = cross3(rays[i], rays[(i + 1) % m]);
            // orient inward using any ray off this facet
            Rat side = 0;
            for (std::size_t j = 0; j < m && side == 0; ++j) side = dot(n3, rays[j]);
            if (side == 0) throw error("degenerate atlas cell " + name);
            if (side < 0)
                for (auto& x : n3) x = -x;
            for (const auto& g : rays)
                if (dot(n3, g) < 0) throw error("non-convex ray cycle in atlas cell " + name);
            facets.push_back(std::move(n3));
        }
    }

    bool contains(const QVec& v) const {
        for (const auto& f : facets)
            if (dot(f, v) < 0) return false;
        return true;
    }
    bool contains_strictly(const QVec& v) const {
        for (const auto& f : facets)
            if (dot(f, v) <= 0) return false;
        return true;
    }
};

} // namespace detail

/// The stable-base-locus atlas for d = 4: a fan of ten convex cells covering
/// Eff_{4,4} with pairwise disjoint interiors.  Each cell carries the verdict
/// of the base-locus classification, constant on its interior; wall
/// answers fall out of cell incidence.
class ChamberAtlas {
  public:
    static const ChamberAtlas& get() {
        static const ChamberAtlas atlas;
        return atlas;
    }

    const std::vector<detail::Cell>& cells() const { return cells_; }

    std::map<std::string, RationalCone> named_chambers() const {
        std::map<std::string, RationalCone> out;
        for (const auto& c : cells_) out.emplace(c.name, RationalCone(3, c.rays));
        return out;
    }

    // pairing rows of the wall-defining curves, as functionals on (a, b, c)
    const std::map<std::string, QVec>& wall_functionals() const { return walls_; }

    const RationalCone& effective() const { return eff_; }
    const RationalCone& nef() const { return nef_; }
    const RationalCone& moving() const { return moving_; }

    // the six closed chambers of the base-locus classification, plus the moving
    // cone; they overlap, and their union covers the effective cone
    const std::map<std::string, RationalCone>& classification_regions() const { return regions_; }

    BaseLocusReport classify(const DivisorClass& D) const {
        if (D.d != 4) throw unsupported_parameters("base-locus classifier works at d = 4");
        const QVec v = coeffs(D);
        if (!in_facets(eff_facets_, v)) throw not_effective("class lies outside Eff_{4,4}");

        std::set<std::string> touched;
        for (const auto& c : cells_)
            if (c.contains(v)) touched.insert(c.name);
        if (touched.empty()) throw error("atlas coverage gap"); // cannot happen

        BaseLocusReport rep;
        rep.contains_delta22 = aggregate(touched, u22_);
        rep.contains_ddeg = aggregate(touched, udeg_);
        switch (aggregate(touched, u13_)) {
            case Tri::yes: rep.contains_delta13 = Tri13::yes; break;
            case Tri::wall: rep.contains_delta13 = Tri13::wall; break;
            case Tri::no:
                rep.contains_delta13 =
                    in_facets(nef_facets_, v) ? Tri13::no : Tri13::unresolved;
                break;
        }
        if (touched.size() == 1) rep.chamber = *touched.begin();
        rep.moving_cone_member = in_facets(moving_facets_, v);
        return rep;
    }

  private:
    std::vector<detail::Cell> cells_;
    std::set<std::string> u22_, udeg_, u13_;
    std::map<std::string, QVec> walls_;
    RationalCone eff_, nef_, moving_;
    std::vector<QVec> eff_facets_, nef_facets_, moving_facets_;
    std::map<std::string, RationalCone> regions_;

    // inward facet normals of a cone given by a convex ray cycle
    static std::vector<QVec> facet_normals(const std::vector<QVec>& rays) {
        std::vector<QVec> out;
        const std::size_t m = rays.size();
        for (std::size_t i = 0; i < m; ++i) {
            QVec n = detail::cross3(rays[i], rays[(i + 1) % m]);
            Rat side = 0;
            for (std::size_t j = 0; j < m && side == 0; ++j) side = detail::dot(n, rays[j]);
            if (side < 0)
                for (auto& x : n) x = -x;
            out.push_back(std::move(n));
        }
        return out;
    }

    static bool in_facets(const std::vector<QVec>& facets, const QVec& v) {
        for (const auto& f : facets)
            if (detail::dot(f, v) < 0) return false;
        return true;
    }

    static Tri aggregate(const std::set<std::string>& touched, const std::set<std::string>& region) {
        bool any = false, all = true;
        for (const auto& name : touched) {
            if (region.count(name)) any = true;
            else all = false;
        }
        if (!any) return Tri::no;
        return all ? Tri::yes : Tri::wall;
    }

    ChamberAtlas() {
        using namespace classes;
        const QVec Ddeg = coeffs(D_deg(4));
        const QVec tr = coeffs(TR(4));
        const QVec ni = coeffs(NI(4));
        const QVec q = coeffs(Q(4));
        const QVec p = coeffs(P(4));
        const QVec t = coeffs(T(4));
        const QVec h = coeffs(hyperplane(4));
        const QVec d1 = coeffs(boundary(4, 1));
        const QVec d2 = coeffs(boundary(4, 2));
        // crossing of the D_deg--Delta_wt line with the Delta_2,2-facing wall
        // of the degenerate-locus region: 2 D_deg + H
        const QVec x = {rat(9, 4), rat(-3, 4), rat(-1)};

        using detail::Cell;
        const auto Y = Tri::yes, N = Tri::no;
        const auto Y13 = Tri13::yes, U13 = Tri13::unresolved, N13 = Tri13::no;
        cells_.emplace_back(Cell{"Ddeg-TR-D22", {Ddeg, tr, d2}, Y, Y, U13, false});
        cells_.emplace_back(Cell{"TR-P-D22", {tr, p, d2}, Y, N, U13, false});
        cells_.emplace_back(Cell{"P-D13-D22", {p, d1, d2}, Y, N, Y13, false});
        cells_.emplace_back(Cell{"P-Q-D13", {p, q, d1}, N, N, Y13, false});
        cells_.emplace_back(Cell{"Ddeg-Q-D13", {Ddeg, q, d1}, N, Y, Y13, false});
        cells_.emplace_back(Cell{"Ddeg-TR-NI", {Ddeg, tr, ni}, N, Y, U13, false});
        cells_.emplace_back(Cell{"Ddeg-NI-Q", {Ddeg, ni, q}, N, Y, U13, false});
        cells_.emplace_back(Cell{"nef", {p, h, t}, N, N, N13, true});
        cells_.emplace_back(Cell{"mov-P-TR", {p, tr, x, h}, N, N, U13, true});
        cells_.emplace_back(Cell{"mov-NI-Q", {x, ni, q, t}, N, N, U13, true});

        // the per-question unions are the cells whose verdict is "yes"
        for (const auto& cell : cells_) {
            if (cell.d22 == Tri::yes) u22_.insert(cell.name);
            if (cell.ddeg == Tri::yes) udeg_.insert(cell.name);
            if (cell.d13 == Tri13::yes) u13_.insert(cell.name);
        }

        walls_["B22"] = pairing_row(curves::b22());
        walls_["B2"] = pairing_row(curves::b2());
        walls_["B13"] = pairing_row(curves::b13());
        walls_["C3"] = pairing_row(curves::c3_moving());

        eff_ = RationalCone(3, {Ddeg, d1, d2});
        nef_ = RationalCone(3, {p, h, t});
        moving_ = RationalCone(3, {ni, q, p, tr});
        eff_facets_ = facet_normals(eff_.generators);
        nef_facets_ = facet_normals(nef_.generators);
        moving_facets_ = facet_normals(moving_.generators);

        regions_.emplace("P-D13-D22", RationalCone(3, {p, d1, d2}));
        regions_.emplace("Ddeg-P-D22", RationalCone(3, {Ddeg, p, d2}));
        regions_.emplace("Ddeg-NI-D22", RationalCone(3, {Ddeg, ni, d2}));
        regions_.emplace("Ddeg-NI-D13", RationalCone(3, {Ddeg, ni, d1}));
        regions_.emplace("Q-D13-D22", RationalCone(3, {q, d1, d2}));
        regions_.emplace("Ddeg-Q-D13", RationalCone(3, {Ddeg, q, d1}));
        regions_.emplace("moving", RationalCone(3, {ni, q, p, tr}));
    }
};

inline BaseLocusReport classify_base_locus(const DivisorClass& D) {
    return ChamberAtlas::get().classify(D);
}

/// The face criterion: every declared-moving curve pairs to zero with every
/// generator and nonnegatively with every candidate effective class.
inline bool certify_face(const std::vector<CurveClass>& curves,
                         const std::vector<DivisorClass>& generators,
                         const std::vector<DivisorClass>& candidates) {
    for (const auto& c : curves) {
        for (const auto& g : generators)
            if (pair(c, g) != 0) return false;
        for (const auto& cand : candidates)
            if (pair(c, cand) < 0) return false;
    }
    return true;
}

inline RationalCone effective_cone(int d, int r) {
    using namespace classes;
    if (d == 4 && r == 3) {
        return RationalCone(3, {coeffs(NI(4)), coeffs(boundary(4, 1)), coeffs(boundary(4, 2))});
    }
    if (d == 4 && r == 2) {
        return RationalCone(3, {coeffs(TR(4)), coeffs(TN(4)),
                                coeffs(boundary(4, 1)), coeffs(boundary(4, 2))});
    }
    if (d == r) {
        std::vector<QVec> gens = {coeffs(D_deg(d))};
        for (int k = 1; k <= d / 2; ++k) gens.push_back(coeffs(boundary(d, k)));
        return RationalCone(1 + d / 2, std::move(gens));
    }
    throw unknown_cone("no recorded generators for Eff_{" + std::to_string(d) + "," +
                       std::to_string(r) + "}");
}

/// The eight coplanarity groups at d = 4: each coefficient matrix has rank <= 2.
inline std::vector<std::pair<std::string, bool>> verify_coplanarity_groups() {
    using namespace classes;
    const int d = 4;
    std::vector<std::pair<std::string, std::vector<DivisorClass>>> groups = {
        {"Ddeg,NL,H,T,DeltaWt", {D_deg(d), NL(d), hyperplane(d), T(d), weighted_boundary(d)}},
        {"Ddeg,TR,P", {D_deg(d), TR(d), P(d)}},
        {"Ddeg,NI,TN", {D_deg(d), NI(d), TN(d)}},
        {"TR,H,Delta13", {TR(d), hyperplane(d), boundary(d, 1)}},
        {"TR,NL,TN", {TR(d), NL(d), TN(d)}},
        {"NI,TR,Delta22", {NI(d), TR(d), boundary(d, 2)}},
        {"NI,Q,Delta13", {NI(d), Q(d), boundary(d, 1)}},
        {"Q,T,P,Delta22", {Q(d), T(d), P(d), boundary(d, 2)}},
    };
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& [label, members] : groups) {
        QMat m;
        for (const auto& cls : members) m.push_back(coeffs(cls));
        out.emplace_back(label, matrix_rank(m) <= 2);
    }
    return out;
}

} // namespace mstab

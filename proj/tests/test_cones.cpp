#include <catch2/catch_amalgamated.hpp>

#include "mstab/chamber.hpp"
#include "mstab/cone.hpp"
#include "mstab/picard.hpp"
#include "mstab/rng.hpp"

using namespace mstab;
using namespace mstab::classes;
using namespace mstab::curves;

TEST_CASE("cone membership classifies the worked examples") {
    const RationalCone first_octant(3, {coeffs(hyperplane(4)), coeffs(boundary(4, 1)),
                                        coeffs(boundary(4, 2))});
    CHECK(cone_contains(first_octant, coeffs(T(4))) == Containment::interior);

    const auto eff44 = effective_cone(4, 4);
    CHECK(cone_contains(eff44, QVec{0, 0, 0}) == Containment::boundary);

    const auto eff43 = effective_cone(4, 3);
    CHECK(cone_contains(eff43, coeffs(-hyperplane(4))) == Containment::outside);
}

TEST_CASE("membership is invariant under generator rescaling") {
    SplitMix64 rng(4242);
    const auto base = effective_cone(4, 2);
    for (int trial = 0; trial < 20; ++trial) {
        auto gens = base.generators;
        for (auto& g : gens) {
            const Rat s = rat(1 + static_cast<long long>(rng.below(7)),
                              1 + static_cast<long long>(rng.below(5)));
            for (auto& x : g) x *= s;
        }
        const RationalCone scaled(3, gens);
        QVec v = {rat(static_cast<long long>(rng.below(9)) - 4),
                  rat(static_cast<long long>(rng.below(9)) - 4),
                  rat(static_cast<long long>(rng.below(9)) - 4)};
        CHECK(cone_contains(base, v) == cone_contains(scaled, v));
    }
}

TEST_CASE("cone membership rejects wrong dimensions") {
    const auto eff = effective_cone(4, 3);
    CHECK_THROWS_AS(cone_contains(eff, QVec{rat(1), rat(0)}), dimension_mismatch);
}

TEST_CASE("face certificates from the extremal-ray proof") {
    const auto d1 = boundary(4, 1), d2 = boundary(4, 2);
    CHECK(certify_face({b2()}, {NI(4), d2}, {d1}));
    CHECK(certify_face({c3_moving()}, {NI(4), d1}, {d2}));
    CHECK(certify_face({b1()}, {TR(4), TN(4)}, {d1, d2}));
    CHECK(certify_face({c2_moving()}, {TN(4), d1}, {TR(4), d2}));
    CHECK(certify_face({b2()}, {TR(4), d2}, {TN(4), d1})); // projected B2
    CHECK_FALSE(certify_face({b13()}, {hyperplane(4)}, {}));
}

TEST_CASE("recorded effective cones") {
    const auto e44 = effective_cone(4, 4);
    REQUIRE(e44.generators.size() == 3);
    CHECK(e44.generators[0] == coeffs(D_deg(4)));
    const auto e43 = effective_cone(4, 3);
    REQUIRE(e43.generators.size() == 3);
    CHECK(e43.generators[0] == coeffs(NI(4)));
    const auto e42 = effective_cone(4, 2);
    REQUIRE(e42.generators.size() == 4);
    CHECK(e42.generators[0] == coeffs(TR(4)));
    CHECK(e42.generators[1] == coeffs(TN(4)));
    CHECK_THROWS_AS(effective_cone(5, 3), unknown_cone);
    // general d = r
    const auto e33 = effective_cone(3, 3);
    CHECK(e33.generators.size() == 2);
    CHECK(e33.ambient_dim == 2);
}

TEST_CASE("coplanarity groups have rank at most two") {
    const auto groups = verify_coplanarity_groups();
    REQUIRE(groups.size() == 8);
    for (const auto& [label, ok] : groups) {
        INFO(label);
        CHECK(ok);
    }
    // control: the basis itself has rank 3
    QMat control = {coeffs(hyperplane(4)), coeffs(boundary(4, 1)), coeffs(boundary(4, 2))};
    CHECK(matrix_rank(control) == 3);
}

TEST_CASE("wall functionals vanish on their defining classes") {
    const auto& walls = ChamberAtlas::get().wall_functionals();
    auto eval = [](const QVec& row, const DivisorClass& d) {
        Rat s = 0;
        const auto v = coeffs(d);
        for (std::size_t i = 0; i < v.size(); ++i) s += row[i] * v[i];
        return s;
    };
    CHECK(eval(walls.at("B22"), P(4)) == 0);
    CHECK(eval(walls.at("B22"), D_deg(4)) == 0);
    CHECK(eval(walls.at("B2"), NI(4)) == 0);
    CHECK(eval(walls.at("B13"), Q(4)) == 0);
    CHECK(eval(walls.at("C3"), NI(4)) == 0);
    CHECK(eval(walls.at("C3"), boundary(4, 1)) == 0);
}

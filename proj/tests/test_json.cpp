#include <catch2/catch_amalgamated.hpp>

#include "mstab/json_io.hpp"
#include "mstab/rng.hpp"

using namespace mstab;
using namespace mstab::classes;

TEST_CASE("divisor classes serialize to the wire schema") {
    const auto j = to_json(NI(4));
    CHECK(j.dump() == R"({"d":4,"H":"3/2","Delta":{"1":"-1/2","2":"-1"}})");
}

TEST_CASE("divisor and curve round-trips") {
    SplitMix64 rng(2718);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = 2 + static_cast<int>(rng.below(9));
        DivisorClass x(d);
        x.h = rat(static_cast<long long>(rng.below(41)) - 20,
                  1 + static_cast<long long>(rng.below(9)));
        for (auto& [k, v] : x.delta)
            v = rat(static_cast<long long>(rng.below(41)) - 20,
                    1 + static_cast<long long>(rng.below(9)));
        CHECK(divisor_from_json(to_json(x)) == x);
    }
    const auto c = curves::b22();
    CHECK(curve_from_json(to_json(c)) == c);
}

TEST_CASE("base-locus reports follow the schema") {
    // H is a ray of the fan, so it carries no chamber name but clean verdicts
    const auto j = to_json(classify_base_locus(hyperplane(4)));
    CHECK(j.at("chamber").is_null());
    CHECK(j.at("delta22") == "no");
    CHECK(j.at("ddeg") == "no");
    CHECK(j.at("delta13") == "no");
    CHECK(j.at("moving") == true);

    const auto ji = to_json(classify_base_locus(P(4) + hyperplane(4) + T(4)));
    CHECK(ji.at("chamber") == "nef");

    const auto jw = to_json(classify_base_locus(P(4)));
    CHECK(jw.at("chamber").is_null());
    CHECK(jw.at("delta22") == "wall");
}

TEST_CASE("movcheck configs parse from JSON") {
    const auto j = ordered_json::parse(R"({
        "preset": "c2", "seed": 17, "retries": 3
    })");
    const auto cfg = movcheck_config_from_json(j);
    CHECK(cfg.a == 5);
    CHECK(cfg.b == 4);
    CHECK(cfg.seed == 17);
    CHECK(cfg.retries == 3);
    CHECK(cfg.expected_rank == 7);

    const auto j2 = ordered_json::parse(R"({
        "a": 3, "b": 2, "p": 101, "points": "random:4:2",
        "expected_kernel_dim": 0, "expected_rank": 0
    })");
    const auto cfg2 = movcheck_config_from_json(j2);
    CHECK(cfg2.random_points == 4);
    CHECK(cfg2.p == 101);

    const auto j3 = ordered_json::parse(R"({
        "a": 2, "b": 2, "p": 101,
        "points": [{"x": 1, "y": 2}, {"x": 3, "y": 4, "m": 3}],
        "expected_kernel_dim": 0, "expected_rank": 0
    })");
    const auto cfg3 = movcheck_config_from_json(j3);
    REQUIRE(cfg3.points.size() == 2);
    CHECK(cfg3.points[1].mult == 3);

    CHECK_THROWS_AS(movcheck_config_from_json(ordered_json::parse(R"({"preset":"zzz"})")),
                    parse_error);
}

TEST_CASE("golden tables emit all four formats") {
    GoldenTable t;
    t.name = "demo";
    t.rows = {{"a=8", "12", "computed"}, {"a=7", "6", "computed"}};
    CHECK(t.to_json().dump() ==
          R"({"name":"demo","rows":[{"label":"a=8","value":"12","provenance":"computed"},)"
          R"({"label":"a=7","value":"6","provenance":"computed"}]})");
    CHECK(t.to_csv() == "label,value,provenance\na=8,12,computed\na=7,6,computed\n");
    CHECK(t.to_markdown().find("| a=8 | 12 | computed |") != std::string::npos);
    CHECK(t.to_plain().find("a=8 = 12") != std::string::npos);
}

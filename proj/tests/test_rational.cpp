#include <catch2/catch_amalgamated.hpp>

#include "mstab/rational.hpp"

using namespace mstab;

TEST_CASE("rationals print in lowest terms with positive denominator") {
    CHECK(to_string(rat(3, 2)) == "3/2");
    CHECK(to_string(rat(-1, 2)) == "-1/2");
    CHECK(to_string(rat(2, -4)) == "-1/2");
    CHECK(to_string(rat(-1)) == "-1");
    CHECK(to_string(rat(0)) == "0");
    CHECK(to_string(rat(6, 3)) == "2");
}

TEST_CASE("rational parsing round-trips") {
    for (const char* s : {"3/2", "-1/2", "-1", "0", "21/8", "119020"}) {
        CHECK(to_string(rat_from_string(s)) == s);
    }
    CHECK(rat_from_string("4/8") == rat(1, 2));
    CHECK_THROWS_AS(rat_from_string("1/0"), parse_error);
    CHECK_THROWS_AS(rat_from_string("1.5"), parse_error);
    CHECK_THROWS_AS(rat_from_string(""), parse_error);
    CHECK_THROWS_AS(rat_from_string("x"), parse_error);
}

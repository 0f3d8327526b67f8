#include <doctest.h>

#include <cmath>
#include <sstream>

#include "impnoise/kv.hpp"

using namespace impnoise;

TEST_CASE("kv round-trips ordered records") {
    kv::Records recs{{"alpha", "1"}, {"beta", "two words"}, {"gamma", "-3.5"}};
    std::stringstream ss;
    kv::write(ss, recs);
    CHECK(kv::parse(ss) == recs);
}

TEST_CASE("kv skips comments and blank lines") {
    std::stringstream ss("# header\n\n  key = value  \n# tail\n");
    const kv::Records recs = kv::parse(ss);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].first == "key");
    CHECK(recs[0].second == "value");
}

TEST_CASE("kv rejects lines without a separator") {
    std::stringstream ss("no separator here\n");
    CHECK_THROWS(kv::parse(ss));
}

TEST_CASE("format_double round-trips exactly") {
    for (double v : {0.0, 1.0, -1.0, 1.0 / 3.0, 0.1, 1e-300, 6.02214076e23,
                     0.111540743350109466, -2.2250738585072014e-308}) {
        CHECK(kv::parse_double(kv::format_double(v)) == v);
    }
    CHECK(std::isinf(kv::parse_double("inf")));
}

TEST_CASE("parse_double rejects garbage") {
    CHECK_THROWS(kv::parse_double("fish"));
    CHECK_THROWS(kv::parse_double("1.5x"));
    CHECK_THROWS(kv::parse_double(""));
}

TEST_CASE("parse_long rejects non-integers") {
    CHECK(kv::parse_long("-42") == -42);
    CHECK_THROWS(kv::parse_long("4.2"));
    CHECK_THROWS(kv::parse_long("four"));
}

#include <doctest.h>

#include "logtangent/rat.hpp"
#include "logtangent/rng.hpp"

using namespace logtangent;

TEST_CASE("rationals reduce to canonical form") {
    CHECK(Rat(Int(2), Int(4)) == Rat(Int(1), Int(2)));
    CHECK(Rat(Int(-2), Int(-4)) == Rat(Int(1), Int(2)));
    CHECK(Rat(Int(2), Int(-4)).num() == Int(-1));
    CHECK(Rat(Int(2), Int(-4)).den() == Int(2));
    CHECK(Rat(Int(0), Int(-7)) == Rat(0));
    CHECK(Rat(Int(0), Int(5)).den() == Int(1));
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::invalid_argument);
}

TEST_CASE("rational parsing") {
    CHECK(Rat::parse("3/6") == Rat(Int(1), Int(2)));
    CHECK(Rat::parse("-7") == Rat(-7));
    CHECK(Rat::parse("4/-6") == Rat(Int(-2), Int(3)));
    CHECK(Rat::parse("0/9") == Rat(0));
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
    CHECK(Rat::parse("-3/4").str() == "-3/4");
    CHECK(Rat::parse("8/4").str() == "2");
}

TEST_CASE("arithmetic and ordering are exact") {
    const Rat a = Rat::parse("1/3"), b = Rat::parse("1/6");
    CHECK(a + b == Rat::parse("1/2"));
    CHECK(a - b == Rat::parse("1/6"));
    CHECK(a * b == Rat::parse("1/18"));
    CHECK(a / b == Rat(2));
    CHECK(a > b);
    CHECK(Rat::parse("-1/3") < Rat::parse("-1/4"));
    CHECK_THROWS_AS(a / Rat(0), std::invalid_argument);

    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rat x = rng.rational(50), y = rng.nonzero_rational(50), z = rng.rational(50);
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x / y * y == x);
        CHECK((x - x).is_zero());
    }
}

TEST_CASE("primitive integer canonicalization") {
    const std::vector<Rat> v = {Rat::parse("2/3"), Rat::parse("-4/3"), Rat(0)};
    const std::vector<Int> p = primitive(v);
    CHECK(p == std::vector<Int>{Int(1), Int(-2), Int(0)});
    const std::vector<Rat> w = {Rat(0), Rat::parse("-4"), Rat::parse("6")};
    CHECK(primitive(w) == std::vector<Int>{Int(0), Int(2), Int(-3)});
    const std::vector<Rat> zero = {Rat(0), Rat(0)};
    CHECK(primitive(zero) == std::vector<Int>{Int(0), Int(0)});
}

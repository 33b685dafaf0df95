#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "milrec/rational.hpp"

using milrec::Rational;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse accepts p and p/q") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("123456789012345678901234567890/2") ==
          Rational::parse("61728394506172839450617283945"));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("+3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3/-4"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1 "), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("-"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
}

TEST_CASE("str renders lowest terms") {
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(8, 4).str() == "2");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(1, -3).str() == "-1/3");
    std::ostringstream os;
    os << Rational(7, 2);
    CHECK(os.str() == "7/2");
}

TEST_CASE("parse and str are inverse") {
    for (long n = -8; n <= 8; ++n) {
        for (long d = 1; d <= 6; ++d) {
            Rational r(n, d);
            CHECK(Rational::parse(r.str()) == r);
        }
    }
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 5) == Rational(-3, 5));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("predicates and ordering") {
    CHECK(Rational(0).is_zero());
    CHECK(!Rational(1, 7).is_zero());
    CHECK(Rational(1).is_one());
    CHECK(Rational(4, 2).is_integer());
    CHECK(!Rational(1, 2).is_integer());
    CHECK(Rational(-2, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
}

TEST_CASE("pow by repeated squaring") {
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(1) == Rational(2, 3));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-2).pow(5) == Rational(-32));
    CHECK(Rational(0).pow(4) == Rational(0));
}

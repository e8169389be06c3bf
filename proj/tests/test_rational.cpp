#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hybridmat/rational.hpp"

using namespace hybridmat;

TEST_CASE("construction normalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 7) == Rational(-3, 7));
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("comparison crosses denominators") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(7, 3) > Rational(2));
}

TEST_CASE("powers and reciprocals") {
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-1) == Rational(3, 2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK(Rational(5).reciprocal() == Rational(1, 5));
    CHECK(Rational(-5, 3).reciprocal() == Rational(-3, 5));
    CHECK_THROWS_AS(Rational(0).reciprocal(), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).pow(-1), DivisionByZero);
}

TEST_CASE("text form round trips") {
    CHECK(Rational::parse("3/7") == Rational(3, 7));
    CHECK(Rational::parse("-3/7") == Rational(-3, 7));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational(3, 7).str() == "3/7");
    CHECK(Rational(-3, 7).str() == "-3/7");
    CHECK(Rational(5).str() == "5");
    for (const char* text : {"1/2", "-9", "22/7"})
        CHECK(Rational::parse(Rational::parse(text).str()) == Rational::parse(text));

    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("x/2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("-"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
}

TEST_CASE("overflow raises instead of wrapping") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS((Rational(INT64_MAX) + Rational(INT64_MAX)), std::overflow_error);
    // within-range products of wide intermediates still reduce fine
    CHECK(Rational(1, 1LL << 40) * Rational(1LL << 40) == Rational(1));
}

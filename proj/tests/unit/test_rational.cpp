#include <doctest.h>

#include "bpba/error.hpp"
#include "bpba/rational.hpp"

using bpba::Rational;

TEST_CASE("parse reduces to canonical form") {
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("2/4").str() == "1/2");
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("-3").str() == "-3");
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("+6/4").str() == "3/2");
    CHECK(Rational::parse("0/7").str() == "0");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(Rational::parse("5/0"), bpba::PoleError);
    CHECK_THROWS_AS(Rational::parse(""), bpba::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), bpba::ParseError);
    CHECK_THROWS_AS(Rational::parse("6/-4"), bpba::ParseError);
    CHECK_THROWS_AS(Rational::parse("0.5"), bpba::ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), bpba::ParseError);
}

TEST_CASE("field operations") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 7) * Rational(7, 2) == Rational(1));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
    CHECK(-Rational(1, 3) == Rational(-1, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 3) > Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), bpba::PoleError);
    CHECK_THROWS_AS(Rational(0).inverse(), bpba::PoleError);
}

TEST_CASE("powers and signs") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(bpba::sign_power(3) == Rational(-1));
    CHECK(bpba::sign_power(-2) == Rational(1));
    CHECK(Rational(-4, 6).abs() == Rational(2, 3));
}

TEST_CASE("big values stay exact") {
    Rational x(1);
    for (int i = 0; i < 200; ++i) {
        x *= Rational(3, 2);
    }
    for (int i = 0; i < 200; ++i) {
        x /= Rational(3, 2);
    }
    CHECK(x == Rational(1));
    CHECK(Rational::parse(x.str()) == x);
}

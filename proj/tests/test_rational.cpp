#include "doctest.h"

#include <limits>
#include <stdexcept>

#include "fatcolor/errors.hpp"
#include "fatcolor/rational.hpp"

using fatcolor::BigInt;
using fatcolor::BigRational;
using fatcolor::Rational;

TEST_CASE("rationals are kept in lowest terms with a positive denominator")
{
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7).str() == "0/1");
    CHECK(Rational(5, 5).str() == "1/1");
    CHECK(Rational(2, 4).str() == "1/2");
}

TEST_CASE("rational arithmetic")
{
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK_THROWS(Rational(1, 2) / Rational(0));
}

TEST_CASE("64-bit rationals refuse to overflow silently")
{
    const auto big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS(Rational(big) * Rational(2));
    CHECK_THROWS(Rational(big) + Rational(1));
}

TEST_CASE("big rationals")
{
    BigRational x(BigInt(1) << 100, BigInt(1) << 98);
    CHECK(x == BigRational(4));
    CHECK(fatcolor::to_big(Rational(3, 9)) == BigRational(1, 3));
    CHECK(BigRational(-2, 4).str() == "-1/2");
}

TEST_CASE("parse_rational")
{
    CHECK(fatcolor::parse_rational("1/2") == Rational(1, 2));
    CHECK(fatcolor::parse_rational("2/4") == Rational(1, 2));
    CHECK(fatcolor::parse_rational("3") == Rational(3));
    CHECK(fatcolor::parse_rational("0/1") == Rational(0));
    CHECK_THROWS_AS(fatcolor::parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(fatcolor::parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(fatcolor::parse_rational("1/2/3"), std::invalid_argument);
}

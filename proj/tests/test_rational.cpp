#include "kblocked/rational.hpp"

#include <doctest.h>

#include <stdexcept>
#include <unordered_set>

using kblocked::Rational;

TEST_CASE("rationals are kept in lowest terms")
{
    Rational a(6, -4);
    CHECK(a.to_string() == "-3/2");
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(4, 2).is_integer());
    CHECK(Rational(0, -7).to_string() == "0");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse and print round trip")
{
    for (const char* text : {"0", "7", "-7", "1/2", "-3/4", "123456789012345678901234567891/2"})
        CHECK(Rational::parse(text).to_string() == text);
    CHECK(Rational::parse("+5").to_string() == "5");
    CHECK(Rational::parse("10/4").to_string() == "5/2");
    for (const char* bad : {"", "abc", "1/", "/2", "1/0", "1/-2", "1.5", "1 /2", "--1"})
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("arithmetic is exact")
{
    Rational third(1, 3);
    CHECK(third + third + third == Rational(1));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

    // 2^100 survives without overflow.
    Rational big(1);
    for (int i = 0; i < 100; ++i) big *= Rational(2);
    CHECK(big.to_string() == "1267650600228229401496703205376");
    CHECK((big + Rational(1, 3)) - big == Rational(1, 3));
}

TEST_CASE("ordering and hashing")
{
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3).sign() == 1);
    CHECK(Rational(-3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(3, 6), Rational(1, 3)};
    CHECK(s.size() == 2);
}

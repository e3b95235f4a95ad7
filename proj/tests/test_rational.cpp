#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using geograph::Rational;

TEST_CASE("construction reduces to canonical form", "[rational]") {
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(-2, 4).numerator() == -1);
    CHECK(Rational(2, -4).numerator() == -1);
    CHECK(Rational(2, -4).denominator() == 2);
    CHECK(Rational(0, 17).denominator() == 1);
    CHECK(Rational(0, -17).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("string parsing", "[rational]") {
    CHECK(Rational::from_string("3/6") == Rational(1, 2));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK(Rational::from_string("1/-2") == Rational(-1, 2));
    CHECK(Rational::from_string("-4/-6") == Rational(2, 3));
    CHECK(Rational::from_string("123456789012345678901234567890").str() ==
          "123456789012345678901234567890");
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("+3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/2/3"), std::invalid_argument);
}

TEST_CASE("formatting is canonical", "[rational]") {
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(8, 4).str() == "2");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("arithmetic and ordering", "[rational]") {
    Rational half(1, 2), third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK(-half == Rational(-1, 2));
    CHECK(third < half);
    CHECK(half <= half);
    CHECK(half.sign() == 1);
    CHECK((-half).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK_THROWS_AS(half / Rational(0), std::domain_error);
}

TEST_CASE("random arithmetic keeps the canonical invariants", "[rational]") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        Rational a = ts::random_rational(rng);
        Rational b = ts::random_rational(rng);
        for (const Rational& r : {a + b, a - b, a * b}) {
            CHECK(r.denominator() > 0);
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
            CHECK(g == 1);
        }
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        CHECK(Rational::from_string(a.str()) == a);
    }
}

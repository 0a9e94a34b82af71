#include <catch_amalgamated.hpp>

#include <random>

#include "chowbench/rational.hpp"

using namespace chowbench;

TEST_CASE("construction reduces to lowest terms") {
    Rational r(6, 4);
    CHECK(r.numerator() == 3);
    CHECK(r.denominator() == 2);

    Rational neg(3, -6);
    CHECK(neg.numerator() == -1);
    CHECK(neg.denominator() == 2);

    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), ArgumentError);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), ArgumentError);
    CHECK(Rational(47, 4) - Rational(63, 8) == Rational(31, 8));
    CHECK(Rational(2).pow(8) == Rational(256));
    CHECK(Rational(1, 2).pow(4) == Rational(1, 16));
}

TEST_CASE("reduction invariant holds after random arithmetic") {
    std::mt19937 rng(20240814);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
    for (int i = 0; i < 1000; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        for (Rational r : {a + b, a - b, a * b}) {
            Int g;
            mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
            CHECK(g == 1);
            CHECK(r.denominator() > 0);
        }
    }
}

TEST_CASE("text form round trip") {
    CHECK(Rational(47, 4).str() == "47/4");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational::parse("47/4") == Rational(47, 4));
    CHECK(Rational::parse("-63/8") == Rational(-63, 8));
    CHECK(Rational::parse("126") == Rational(126));
    CHECK_THROWS_AS(Rational::parse("x/3"), ParseError);
}

TEST_CASE("binomial helper") {
    CHECK(binomial(7, 5) == 21);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 3) == 1);
    CHECK(binomial(2, 5) == 0);
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <ratsum/rat.hpp>

using ratsum::Rat;

TEST_CASE("construction reduces to canonical form") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK(Rat(6, 4).numerator() == 3);
    CHECK(Rat(6, 4).denominator() == 2);
    CHECK(Rat(-6, 4).numerator() == -3);
    CHECK(Rat(6, -4).numerator() == -3);
    CHECK(Rat(6, -4).denominator() == 2);
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(0, 7).denominator() == 1);
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat(0).reciprocal(), std::domain_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("reciprocal of one is one") {
    CHECK(Rat(1).reciprocal() == Rat(1));
}

TEST_CASE("parse and str round-trip") {
    CHECK(Rat::parse("3/2") == Rat(3, 2));
    CHECK(Rat::parse("-3/2") == Rat(-3, 2));
    CHECK(Rat::parse("42") == Rat(42));
    CHECK(Rat::parse("6/4") == Rat(3, 2));
    CHECK(Rat(3, 2).str() == "3/2");
    CHECK(Rat(4, 2).str() == "2");
    CHECK(Rat(-1, 3).str() == "-1/3");
    CHECK(Rat::parse("170141183460469231731687303715884105727/3").str() ==
          "170141183460469231731687303715884105727/3");

    CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact and canonical") {
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(2) * Rat(1, 2) == Rat(1));
    CHECK(Rat(1, 2) - Rat(1, 2) == Rat(0));
    CHECK(Rat(7, 3) / Rat(7, 3) == Rat(1));
    CHECK((Rat(2, 3) * Rat(9, 4)).str() == "3/2");
}

TEST_CASE("comparisons are exact") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1) < Rat(0));
    CHECK(Rat(5, 10) <= Rat(1, 2));
    CHECK(Rat(3, 2) > Rat(1));
    CHECK(Rat(1, 3) != Rat(2, 3));
}

TEST_CASE("randomized field laws and round-trips") {
    std::mt19937_64 rng(20260816);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int i = 0; i < 500; ++i) {
        const Rat a(num(rng), den(rng));
        const Rat b(num(rng), den(rng));
        const Rat c(num(rng), den(rng));
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(Rat::parse(a.str()) == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        // canonical invariant: gcd(|num|, den) = 1, den >= 1
        const Rat s = a * b + c;
        CHECK(gcd(s.numerator(), s.denominator()) == 1);
        CHECK(s.denominator() >= 1);
    }
}

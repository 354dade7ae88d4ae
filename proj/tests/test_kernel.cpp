#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "nestsum/exact.hpp"

using nestsum::binomial;
using nestsum::ExactInt;
using nestsum::ExactRational;

TEST_CASE("binomial small values and out-of-range convention") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(10, -2) == 0);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(52, 5) == 2598960);
}

TEST_CASE("binomial rejects a negative upper argument") {
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(binomial(-7, 3), std::invalid_argument);
}

TEST_CASE("binomial is exact far past 64 bits") {
    CHECK(binomial(200, 100) ==
          ExactInt("90548514656103281165404177077484163874504589675413336841320"));
}

TEST_CASE("Pascal rule holds across the triangle up to n = 200") {
    for (int n = 1; n <= 200; ++n)
        for (int r = 1; r <= n; ++r)
            CHECK(binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r));
}

TEST_CASE("hockey stick collapses partial column sums") {
    for (int s = 0; s <= 50; ++s) {
        ExactInt sum = 0;
        for (int t = 0; t <= 50; ++t) {
            sum += binomial(s + t, s);
            CHECK(sum == binomial(s + t + 1, s + 1));
        }
    }
}

TEST_CASE("integer powers and factorials") {
    CHECK(nestsum::pow_int(0, 0) == 1);
    CHECK(nestsum::pow_int(0, 5) == 0);
    CHECK(nestsum::pow_int(2, 10) == 1024);
    CHECK(nestsum::pow_int(-3, 3) == -27);
    CHECK(nestsum::factorial(0) == 1);
    CHECK(nestsum::factorial(6) == 720);
    CHECK(nestsum::factorial(25) == ExactInt("15511210043330985984000000"));
}

TEST_CASE("rational reduction to canonical lowest terms") {
    const ExactRational half(2, 4);
    CHECK(half.num() == 1);
    CHECK(half.den() == 2);

    const ExactRational both_negative(-3, -6);
    CHECK(both_negative.num() == 1);
    CHECK(both_negative.den() == 2);

    const ExactRational zero(0, 7);
    CHECK(zero.num() == 0);
    CHECK(zero.den() == 1);
    CHECK(zero.is_zero());

    const ExactRational negative(3, -6);
    CHECK(negative.num() == -1);
    CHECK(negative.den() == 2);

    CHECK_THROWS_AS(ExactRational(1, 0), std::invalid_argument);
}

TEST_CASE("reduction is canonical and idempotent on a grid") {
    for (int num = -40; num <= 40; ++num)
        for (int den = -40; den <= 40; ++den) {
            if (den == 0) continue;
            const ExactRational r(num, den);
            CHECK(r.den() >= 1);
            CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(r.num()), r.den()) == 1);
            CHECK(ExactRational(r.num(), r.den()) == r);
        }
}

TEST_CASE("rational arithmetic stays reduced") {
    const ExactRational a(1, 2);
    const ExactRational b(1, 3);
    CHECK(a + b == ExactRational(5, 6));
    CHECK(a - b == ExactRational(1, 6));
    CHECK(a * b == ExactRational(1, 6));
    CHECK(a / b == ExactRational(3, 2));
    CHECK((a + (-a)).is_zero());
    CHECK(ExactRational(2, 4) + ExactRational(2, 4) == ExactRational(1));
    CHECK(b < a);
    CHECK(a > b);
    CHECK(a <= a);
    CHECK_THROWS_AS(a / ExactRational(), std::invalid_argument);
    CHECK(a.str() == "1/2");
    CHECK(ExactRational(-7).str() == "-7");
}

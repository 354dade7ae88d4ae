#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdint>
#include <stdexcept>

#include "nestsum/nested_sum.hpp"

using namespace nestsum;
using namespace std::chrono_literals;

TEST_CASE("brute force follows the defining recursion") {
    CHECK(naive_nested_sum({0, 5, 3}) == 125);
    CHECK(naive_nested_sum({1, 3, 2}) == 14);  // 1 + 4 + 9
    CHECK(naive_nested_sum({2, 3, 2}) == 20);  // 1 + (1+4) + (1+4+9)
    CHECK(naive_nested_sum({3, 2, 1}) == 5);
    CHECK(naive_nested_sum({1, 1, 9}) == 1);
}

TEST_CASE("n = 0 extension and m = 0 powers") {
    CHECK(naive_nested_sum({0, 0, 0}) == 1);  // 0^0
    CHECK(naive_nested_sum({0, 0, 4}) == 0);
    CHECK(naive_nested_sum({5, 0, 3}) == 0);  // empty sum
    CHECK(naive_nested_sum({0, 7, 0}) == 1);

    SarasTriangle tri;
    CHECK(formula_nested_sum({0, 0, 0}, tri) == 1);
    CHECK(formula_nested_sum({0, 0, 4}, tri) == 0);
    CHECK(formula_nested_sum({5, 0, 3}, tri) == 0);
    CHECK(weighted_sum({3, 0, 2}) == 0);
}

TEST_CASE("weighted single sum") {
    CHECK(weighted_sum({1, 4, 1}) == 10);  // weights all 1
    CHECK(weighted_sum({2, 3, 2}) == 20);  // weights 3,2,1 against 1,4,9
    CHECK(weighted_sum({3, 2, 0}) == 4);   // C(3,2) + C(2,2)
    CHECK_THROWS_AS(weighted_sum({0, 4, 1}), std::invalid_argument);
}

TEST_CASE("closed form spot values") {
    SarasTriangle tri;
    CHECK(formula_nested_sum({1, 4, 2}, tri) == 30);
    CHECK(formula_nested_sum({2, 3, 2}, tri) == 20);
    // 1^5 + (1^5 + 2^5) = C(3,2)*1 + C(3,3)*31 = 34
    CHECK(formula_nested_sum({2, 2, 5}, tri) == 34);
    CHECK(naive_nested_sum({2, 2, 5}) == 34);
}

TEST_CASE("the three evaluators agree on a box") {
    SarasTriangle tri;
    for (std::uint64_t m = 0; m <= 3; ++m)
        for (std::uint64_t n = 0; n <= 8; ++n)
            for (std::uint64_t k = 0; k <= 5; ++k) {
                const ExactInt oracle = naive_nested_sum({m, n, k});
                CHECK(formula_nested_sum({m, n, k}, tri) == oracle);
                if (m >= 1) CHECK(weighted_sum({m, n, k}) == oracle);
            }
}

TEST_CASE("single-sum classics for k = 1..4") {
    SarasTriangle tri;
    for (std::uint64_t n = 1; n <= 50; ++n) {
        const ExactInt N(n);
        CHECK(formula_nested_sum({1, n, 1}, tri) == N * (N + 1) / 2);
        CHECK(formula_nested_sum({1, n, 2}, tri) == N * (N + 1) * (2 * N + 1) / 6);
        CHECK(formula_nested_sum({1, n, 3}, tri) == N * N * (N + 1) * (N + 1) / 4);
        CHECK(formula_nested_sum({1, n, 4}, tri) ==
              N * (N + 1) * (2 * N + 1) * (3 * N * N + 3 * N - 1) / 30);
    }
}

TEST_CASE("zero power reduces to a single binomial") {
    SarasTriangle tri;
    for (std::uint64_t m = 0; m <= 10; ++m)
        for (std::uint64_t n = 1; n <= 20; ++n)
            CHECK(formula_nested_sum({m, n, 0}, tri) == binomial(ExactInt(n + m - 1), ExactInt(m)));
}

TEST_CASE("values grow monotonically in depth and limit") {
    SarasTriangle tri;
    for (std::uint64_t k = 0; k <= 4; ++k) {
        for (std::uint64_t n = 1; n <= 10; ++n) {
            ExactInt prev = formula_nested_sum({0, n, k}, tri);
            for (std::uint64_t m = 1; m <= 5; ++m) {
                const ExactInt cur = formula_nested_sum({m, n, k}, tri);
                CHECK(cur >= prev);
                prev = cur;
            }
        }
        for (std::uint64_t m = 0; m <= 4; ++m) {
            ExactInt prev = formula_nested_sum({m, 1, k}, tri);
            for (std::uint64_t n = 2; n <= 10; ++n) {
                const ExactInt cur = formula_nested_sum({m, n, k}, tri);
                if (m == 0 && k == 0)
                    CHECK(cur == 1);  // n^0: the one constant case
                else
                    CHECK(cur > prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("power-bump recurrence also holds at n = 1 under the extension") {
    // S(m,1,k+1) = 1*S(m,1,k) - m*S(m+1,0,k); the n = 0 term is the empty sum
    for (std::uint64_t m = 0; m <= 4; ++m)
        for (std::uint64_t k = 0; k <= 4; ++k)
            CHECK(naive_nested_sum({m, 1, k + 1}) ==
                  naive_nested_sum({m, 1, k}) - ExactInt(m) * naive_nested_sum({m + 1, 0, k}));
}

TEST_CASE("identity checker passes the standard boxes") {
    SarasTriangle tri;

    const IdentityReport l52 = check_identity(Identity::L52, 3, 8, 4, tri);
    CHECK(l52.passed());
    CHECK(l52.checked == 140);

    const IdentityReport main_vs = check_identity(Identity::MainVsOracle, 4, 12, 6, tri);
    CHECK(main_vs.passed());
    CHECK(main_vs.checked == 5 * 12 * 7);

    CHECK(check_identity(Identity::L53, 3, 6, 3, tri).passed());
    CHECK(check_identity(Identity::L51, 3, 8, 4, tri).passed());
    CHECK(check_identity(Identity::L55, 1, 25, 15, tri).passed());
    CHECK(check_identity(Identity::MuEquiv, 1, 1, 12, tri).passed());
    CHECK(check_identity(Identity::WeightedVsOracle, 4, 10, 5, tri).passed());
}

TEST_CASE("identity checker validates bounds") {
    SarasTriangle tri;
    CHECK_THROWS_AS(check_identity(Identity::L51, 0, 8, 4, tri), std::invalid_argument);
    CHECK_THROWS_AS(check_identity(Identity::L51, 3, 0, 4, tri), std::invalid_argument);
    CHECK_THROWS_AS(check_identity(Identity::L51, 3, 8, 0, tri), std::invalid_argument);
}

TEST_CASE("identity names round-trip") {
    for (Identity id : kAllIdentities) CHECK(identity_from_name(identity_name(id)) == id);
    CHECK(!identity_from_name("L54").has_value());
    CHECK(!identity_from_name("").has_value());
}

TEST_CASE("budget aborts a hopeless brute-force run") {
    CHECK_THROWS_AS(naive_nested_sum({4, 3'000'000, 10}, 10ms), budget_error);
}

TEST_CASE("closed-form cost does not grow with n") {
    SarasTriangle tri;
    EvalStats small, large;
    formula_nested_sum({6, 1'000, 10}, tri, &small);
    formula_nested_sum({6, 1'000'000, 10}, tri, &large);
    CHECK(small.big_ops == large.big_ops);
    CHECK(small.big_ops > 0);

    EvalStats naive_short, naive_long;
    naive_nested_sum({2, 100, 3}, kDefaultBudget, &naive_short);
    naive_nested_sum({2, 200, 3}, kDefaultBudget, &naive_long);
    CHECK(naive_long.big_ops > naive_short.big_ops);  // brute force scales with n
}

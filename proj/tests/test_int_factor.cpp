#include "doctest.h"

#include "arbora/int_factor.hpp"

using namespace arbora;

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(677));  // orbit value of z^2+1 at level 5
    CHECK(!is_prime(1));
    CHECK(!is_prime(561));   // Carmichael
    CHECK(!is_prime(25326001));
    CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));  // 2^127 - 1
    bool probable = false;
    CHECK(is_prime(BigInt("170141183460469231731687303715884105727"), &probable));
    CHECK(probable);  // beyond the deterministic witness range
}

TEST_CASE("factor fixtures") {
    auto f = factor_integer(512);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == 2);
    CHECK(f.factors[0].second == 9);
    CHECK(f.complete);
    CHECK(f.sign == 1);

    auto g = factor_integer(-4);
    CHECK(g.sign == -1);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].first == 2);
    CHECK(g.factors[0].second == 2);

    auto h = factor_integer(677);
    REQUIRE(h.factors.size() == 1);
    CHECK(h.factors[0].first == 677);
    CHECK(h.complete);

    CHECK_THROWS_AS(factor_integer(0), std::invalid_argument);
}

TEST_CASE("reassembly invariant") {
    for (long n : {2L, 26L, 677L, 1000000007L * 3L, -360L, 2147483647L}) {
        auto f = factor_integer(n);
        CHECK(f.reassemble() == abs(BigInt(n)));
        CHECK(f.sign == (n < 0 ? -1 : 1));
        for (const auto& [p, e] : f.factors) CHECK(is_prime(p));
    }
}

TEST_CASE("rho splits a semiprime beyond the trial bound") {
    FactorBudget tight;
    tight.trial_division_bound = 100;
    BigInt n = BigInt(1000003) * BigInt(1000033);
    auto f = factor_integer(n, tight);
    CHECK(f.complete);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == 1000003);
    CHECK(f.factors[1].first == 1000033);
}

TEST_CASE("budget exhaustion reports an explicit cofactor") {
    FactorBudget tiny;
    tiny.trial_division_bound = 10;
    tiny.rho_rounds = 0;
    BigInt n = BigInt("1000000000000066600000000000001");  // large, no tiny factors
    auto f = factor_integer(n, tiny);
    CHECK(f.reassemble() == n);
    if (!f.complete) CHECK(f.cofactor > 1);
}

#ifndef ARBORA_INT_FACTOR_HPP
#define ARBORA_INT_FACTOR_HPP

#include <utility>
#include <vector>

#include "arbora/budgets.hpp"
#include "arbora/numeric.hpp"

namespace arbora {

/// Budgeted factorization of a nonzero integer.  The product of the listed
/// prime powers times the cofactor equals |n| exactly; complete iff the
/// cofactor is 1.  Primes found past the deterministic Miller-Rabin range
/// are flagged probable.
struct IntFactorization {
    int sign = 1;
    std::vector<std::pair<BigInt, int>> factors;  // (prime, exponent), primes ascending
    BigInt cofactor = 1;                          // unfactored part, > 1 iff incomplete
    bool complete = true;
    bool probable_only = false;  // some listed prime is only a strong probable prime

    BigInt reassemble() const;  // prod p^e * cofactor (absolute value)
    std::vector<BigInt> prime_support() const;
};

/// Deterministic for n < 3.3e24 (first 12 prime witnesses); beyond that 40
/// further witnesses are derived from n itself and *probable is set.
bool is_prime(const BigInt& n, bool* probable = nullptr);

IntFactorization factor_integer(const BigInt& n, const FactorBudget& budget = {});

}  // namespace arbora

#endif

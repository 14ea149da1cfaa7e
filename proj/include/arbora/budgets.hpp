#ifndef ARBORA_BUDGETS_HPP
#define ARBORA_BUDGETS_HPP

#include <cstddef>

namespace arbora {

/// Effort limits for integer factorization.  All limits are per call.
struct FactorBudget {
    unsigned long trial_division_bound = 100000;  // trial divide by primes up to this
    unsigned rho_rounds = 24;                     // Brent-rho restarts with fresh constants
    unsigned long rho_iterations = 1ul << 17;     // iterations per rho round
};

/// Effort limits for polynomial factorization over Z.
struct PolyFactorBudget {
    std::size_t max_subset_checks = 1u << 20;  // recombination trials after Hensel lifting
};

/// Shared knobs threaded through the experiment drivers and the CLI.
struct RunBudgets {
    FactorBudget factor;
    PolyFactorBudget poly;
    std::size_t degree_budget = 4096;  // max coefficient count of an iterated form
    int workers = 1;                   // worker threads for per-prime verdicts
};

}  // namespace arbora

#endif

#ifndef ARBORA_ORBIT_HPP
#define ARBORA_ORBIT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "arbora/budgets.hpp"
#include "arbora/int_factor.hpp"
#include "arbora/pcf.hpp"
#include "arbora/rational_map.hpp"

namespace arbora {

/// One row of the orbit table: phi^n(a) in coprime form with budgeted
/// factorizations of numerator and denominator.
struct OrbitRow {
    int n = 0;
    ProjPointQ value;
    IntFactorization numerator;    // of |a_n| (sign in value); empty for 0
    IntFactorization denominator;  // of b_n
};

std::vector<OrbitRow> orbit_valuation_table(const RationalMapP1& map, const ProjPointQ& a,
                                            int n_max, const FactorBudget& budget = {});

/// A prime p not in S with v_p(phi^n(a)) positive and not divisible by e.
struct Lemma12Witness {
    BigInt p;
    int n = 0;
    long v = 0;
    long v_mod_e = 0;
};

struct preperiodic_point_error : std::invalid_argument {
    preperiodic_point_error(CycleInfo info_, const std::string& what)
        : std::invalid_argument(what), cycle(std::move(info_)) {}
    CycleInfo cycle;
};

/// Searches orbit numerators for n = 1..n_max.  An empty result means
/// "none found within budget", never "none exist" (the search is a
/// semi-decision procedure).  Preperiodic starting points are rejected
/// with the detected cycle.
std::vector<Lemma12Witness> lemma12_search(const RationalMapP1& map, const ProjPointQ& a, int e,
                                           const std::vector<BigInt>& excluded, int n_max,
                                           const FactorBudget& budget = {});

}  // namespace arbora

#endif

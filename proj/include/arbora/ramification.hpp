#ifndef ARBORA_RAMIFICATION_HPP
#define ARBORA_RAMIFICATION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arbora/budgets.hpp"
#include "arbora/dedekind.hpp"
#include "arbora/pcf.hpp"
#include "arbora/rational_map.hpp"

namespace arbora {

/// Level-n preimage polynomial P = b F_n(x,1) - a G_n(x,1), primitive;
/// the degree drop counts preimages at infinity (with multiplicity).
struct PreimagePoly {
    int level = 0;
    UniPoly poly;
    int degree_drop = 0;
    BigInt content_removed = 1;
};

/// alpha is a critical value of phi^n, so P is not squarefree and the
/// level is rejected; carries the offending gcd.
struct postcritical_alpha_error : std::invalid_argument {
    postcritical_alpha_error(int level_, UniPoly gcd_)
        : std::invalid_argument("alpha is postcritical at level " + std::to_string(level_) +
                                "; replace alpha by one of its preimages"),
          level(level_),
          blocking_gcd(std::move(gcd_)) {}
    int level;
    UniPoly blocking_gcd;
};

/// alpha has a finite backward orbit; the preimage tower is trivial.
struct exceptional_alpha_error : std::invalid_argument {
    explicit exceptional_alpha_error(ExceptionalityCertificate cert_)
        : std::invalid_argument("alpha is exceptional: backward orbit support is " +
                                cert_.backward_support.to_string()),
          cert(std::move(cert_)) {}
    ExceptionalityCertificate cert;
};

PreimagePoly preimage_poly(const RationalMapP1& map, const ProjPointQ& alpha, int n,
                           std::size_t degree_budget = 4096);

struct RamVerdict {
    BigInt p;
    RamStatus status = RamStatus::Unknown;
    bool wild_candidate = false;
    std::string reduction_pattern;
    std::string detail;
};

struct LevelReport {
    int n = 0;
    int poly_degree = 0;
    int degree_drop = 0;
    std::size_t disc_bits = 0;
    std::vector<RamVerdict> verdicts;       // candidate primes, ascending
    std::size_t unknown_cofactor_bits = 0;  // disc/lc factorization leftover
    bool factorization_complete = true;
};

/// Verdicts at every candidate prime (support of disc(P) and of lc(P)).
/// Throws postcritical_alpha_error when P is not squarefree.
LevelReport ramified_primes_at_level(const RationalMapP1& map, const ProjPointQ& alpha, int n,
                                     const RunBudgets& budgets = {});

struct PredictedBadSet {
    std::vector<BigInt> primes;  // ascending
    std::vector<std::pair<BigInt, std::string>> provenance;
    std::string pcf_status;
    bool pcf_certified = false;
    bool complete = true;
    std::string warning;
};

/// The finite-ramification theorem's bad set: bad reduction, inseparable
/// reduction, and collision of alpha with the postcritical divisor.
PredictedBadSet predicted_bad_set(const RationalMapP1& map, const ProjPointQ& alpha,
                                  const RunBudgets& budgets = {});

struct RamificationReport {
    std::string map_text;
    std::string alpha_text;
    std::vector<LevelReport> levels;
    PredictedBadSet predicted;
    std::vector<BigInt> cumulative;          // ramified primes through the last level
    std::vector<BigInt> cumulative_unknown;  // primes left unknown at some level
    std::optional<int> stabilized_at;        // null = still growing at budget
    bool contained_in_predicted = true;
    std::string pcf_status;
    std::string budget_note;  // set when a budget truncated the run
};

/// Runs ramified_primes_at_level for n = 1..n_max.  Throws
/// exceptional_alpha_error for exceptional alpha; budget exhaustion
/// truncates the report rather than throwing.
RamificationReport stabilization_experiment(const RationalMapP1& map, const ProjPointQ& alpha,
                                            int n_max, const RunBudgets& budgets = {});

/// Per-prime wild-ramification evidence aggregated over levels: flagged
/// when some repeated irreducible factor mod p has multiplicity divisible
/// by p.  Necessary evidence only, not a proof of wildness.
std::vector<std::pair<BigInt, bool>> wildness_indicator(const RamificationReport& report);

std::string report_to_json(const RamificationReport& report, int indent = 2);
std::string report_to_csv(const RamificationReport& report);
std::string report_to_markdown(const RamificationReport& report);
std::string report_to_text(const RamificationReport& report);

}  // namespace arbora

#endif

#ifndef ARBORA_POLY_FACTOR_HPP
#define ARBORA_POLY_FACTOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "arbora/budgets.hpp"
#include "arbora/unipoly.hpp"

namespace arbora {

/// Budgeted factorization over Z.  input = content_unit * prod factors^e
/// * prod unsplit^e exactly.  factors are irreducible, primitive, with
/// positive leading coefficient; unsplit entries are squarefree parts the
/// recombination budget could not finish (complete = false).
struct PolyFactorization {
    BigInt content_unit = 1;
    std::vector<std::pair<UniPoly, int>> factors;
    std::vector<std::pair<UniPoly, int>> unsplit;
    bool complete = true;

    UniPoly reassemble() const;
    /// factors and unsplit merged, for callers that only need divisors.
    std::vector<std::pair<UniPoly, int>> all_parts() const;
};

/// Zassenhaus: squarefree decomposition, factorization modulo a good
/// prime, linear Hensel lifting, bounded subset recombination.
PolyFactorization factor_poly(const UniPoly& p, const PolyFactorBudget& budget = {});

/// Monicize: (lc^(d-1) * g(x/lc), lc).  Generates the same stem field.
std::pair<UniPoly, BigInt> monicize(const UniPoly& g);

/// Test-support: degree multisets of f mod each given prime (squarefree
/// reduction required; primes failing that are skipped). A factor degree
/// m is possible only if every pattern has a subset summing to m; an
/// empty intersection over 0 < m < deg f certifies irreducibility.
struct DegreePatternCertificate {
    std::vector<std::pair<BigInt, std::vector<int>>> patterns;  // (prime, sorted degrees)
    bool certifies_irreducible = false;
};
DegreePatternCertificate degree_pattern_check(const UniPoly& f, const std::vector<BigInt>& primes);

}  // namespace arbora

#endif

#ifndef ARBORA_DEDEKIND_HPP
#define ARBORA_DEDEKIND_HPP

#include <string>
#include <vector>

#include "arbora/unipoly.hpp"

namespace arbora {

enum class RamStatus { Ramified, Unramified, Unknown };

std::string to_string(RamStatus s);

/// Dedekind's criterion for a monic integer polynomial at p: decides
/// whether p divides the index [O_K : Z[theta]].
struct DedekindOutcome {
    bool p_divides_index = false;
    bool reduction_squarefree = false;
    std::vector<std::pair<UniPoly, int>> reduction_factors;  // monic irreducible mod p
};
DedekindOutcome dedekind_criterion(const UniPoly& monic_g, const BigInt& p);

/// Ramification of p in the stem field Q[x]/(g), g irreducible primitive.
/// Certificates, in order: p coprime to disc; Dedekind p-maximality plus
/// the reduction pattern; odd disc valuation (disc = index^2 * field
/// disc); valuation-2 disc with nonmaximal order.  Anything else is an
/// honest Unknown.
struct StemVerdict {
    RamStatus status = RamStatus::Unknown;
    std::string certificate;   // short machine-readable reason
    long disc_valuation = -1;  // v_p(disc of the generator used)
    bool dedekind_maximal = false;
    std::string reduction_pattern;  // e.g. "1^2" for (deg 1)^2
};
StemVerdict stem_field_verdict(const UniPoly& g, const BigInt& p);

}  // namespace arbora

#endif

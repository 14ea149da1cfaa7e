#ifndef ARBORA_VERIFIERS_HPP
#define ARBORA_VERIFIERS_HPP

#include <string>
#include <vector>

#include "arbora/map_pn.hpp"

namespace arbora {

struct VerificationCheck {
    std::string check_id;
    bool passed = false;
    std::string evidence;
};

struct VerificationReport {
    std::string example;
    std::vector<VerificationCheck> checks;

    bool all_passed() const;
    std::string to_json(int indent = 2) const;
    std::string to_text() const;
};

/// Dupont's quadratic PCF morphism of P^2:
/// [(x-y+z)^2 : (x+y-z)^2 : (-x+y+z)^2].
MapPN dupont_map();

/// The generalized Tchebyshev morphism [x^2-2yz : y^2-2xz : z^2].
MapPN tchebyshev_map();

/// Degree-2 semiconjugacy witness for the Tchebyshev map: the cleared
/// form of (x + y + 1/(xy), 1/x + 1/y + xy) as a triple with common
/// denominator xy (arity 2).
std::vector<MultiPoly> tchebyshev_pi();

/// Checks (on the given map, so perturbed maps can be fed in by tests):
///  a. Jacobian factors into the three critical lines (unit 32)
///  b. forward closure of the critical lines stays inside
///     xyz(x-y)(y-z)(z-x)
///  c. the three diagonal components form a 3-cycle
///  d. the cube restricted to x=y has total critical multiplicity 14
///  e. the restricted critical values are exactly {0, 1, inf}
///  f. the restricted map is PCF
VerificationReport verify_dupont_with(const MapPN& phi);
VerificationReport verify_dupont();

/// Checks: a. semiconjugacy phi(pi(x,y)) = pi(x^2,y^2) exactly;
/// b. the cleared ramification locus of pi is (x-y)(x*y^2-1)(x^2*y-1)
/// up to a monomial unit; c. critical component images lie in the
/// postcritical quintic times z.
VerificationReport verify_tchebyshev_with(const MapPN& phi, const std::vector<MultiPoly>& pi);
VerificationReport verify_tchebyshev();

}  // namespace arbora

#endif

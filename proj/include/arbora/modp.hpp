#ifndef ARBORA_MODP_HPP
#define ARBORA_MODP_HPP

#include <utility>
#include <vector>

#include "arbora/unipoly.hpp"

namespace arbora {

/// F_p[x] arithmetic on UniPoly values with coefficients held in [0, p).
/// p must be prime; callers are responsible for the primality check.
namespace fp {

UniPoly reduce(const UniPoly& a, const BigInt& p);
UniPoly add(const UniPoly& a, const UniPoly& b, const BigInt& p);
UniPoly sub(const UniPoly& a, const UniPoly& b, const BigInt& p);
UniPoly mul(const UniPoly& a, const UniPoly& b, const BigInt& p);
/// (quotient, remainder) with b nonzero mod p.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b, const BigInt& p);
UniPoly rem(const UniPoly& a, const UniPoly& b, const BigInt& p);
UniPoly make_monic(const UniPoly& a, const BigInt& p);
/// Monic gcd.
UniPoly gcd(const UniPoly& a, const UniPoly& b, const BigInt& p);
/// base^e mod (f, p)
UniPoly powmod(const UniPoly& base, const BigInt& e, const UniPoly& f, const BigInt& p);
/// Extended gcd: returns (g, s, t) monic g with s*a + t*b = g mod p.
struct XGcd {
    UniPoly g, s, t;
};
XGcd xgcd(const UniPoly& a, const UniPoly& b, const BigInt& p);

/// Centered representative in (-p^k/2, p^k/2].
UniPoly symmetric(const UniPoly& a, const BigInt& modulus);

/// Squarefree decomposition over F_p (handles the derivative-zero,
/// p-th-power case of characteristic p).
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f, const BigInt& p);

/// Full factorization into monic irreducibles with multiplicities,
/// deterministic for fixed input (splitting randomness is seeded from
/// the input itself).
std::vector<std::pair<UniPoly, int>> factor(const UniPoly& f, const BigInt& p);

/// Roots of f in F_p (each once), ascending.
std::vector<BigInt> roots(const UniPoly& f, const BigInt& p);

}  // namespace fp

}  // namespace arbora

#endif

#ifndef ARBORA_PCF_HPP
#define ARBORA_PCF_HPP

#include <optional>
#include <string>
#include <vector>

#include "arbora/rational_map.hpp"
#include "arbora/unipoly.hpp"

namespace arbora {

/// Squarefree effective divisor on P^1(Qbar): a primitive squarefree
/// polynomial with positive leading coefficient tracking the finite
/// support, plus a flag for the point at infinity.
struct SqfDivisor {
    UniPoly poly = UniPoly::constant(1);
    bool at_infinity = false;

    int point_count() const { return std::max(poly.degree(), 0) + (at_infinity ? 1 : 0); }
    bool divides(const SqfDivisor& other) const;
    /// Union of supports (lcm of squarefree polynomials).
    SqfDivisor merged(const SqfDivisor& other) const;
    bool operator==(const SqfDivisor& o) const {
        return at_infinity == o.at_infinity && poly == o.poly;
    }
    std::string to_string() const;
};

/// Pushforward: the squarefree primitive polynomial whose roots are
/// {phi(delta) : D(delta) = 0, phi(delta) finite}, with the infinity flag
/// set when some point of D (or the tracked infinity) maps to infinity.
SqfDivisor forward_image_poly(const RationalMapP1& map, const SqfDivisor& D);

/// Effective preperiodicity bound from the Sylvester cofactor identity
/// A*F + B*G = Res * x^(2d-1) (and the y-side): h(phi(P)) >= d h(P) - C2
/// with exp(C2) = 2 (d+1) Hcof |Res|.  Preperiodic points satisfy
/// h <= C2/(d-1); the certification margin adds log 2.  All comparisons
/// are exact integer power tests.
class HeightBound {
public:
    explicit HeightBound(const RationalMapP1& map);

    const BigInt& cofactor_height() const { return hcof_; }
    /// exp(C2) as an integer: 2 (d+1) Hcof |Res|.
    const BigInt& exp_c2() const { return expc2_; }
    int map_degree() const { return d_; }

    /// Exact test h(a/b) > B(phi): max(|a|,|b|)^(d-1) > 2^(d-1) exp(C2).
    bool rational_height_exceeds(const ProjPointQ& P) const;
    /// Non-strict complement used by the preperiodicity property test.
    bool rational_height_within(const ProjPointQ& P) const { return !rational_height_exceeds(P); }
    /// Sound lower-bound test for the common height of the roots of an
    /// irreducible factor: H(f)^(d-1) > binom(k, k/2)^(d-1) 2^(k(d-1)) exp(C2)^k.
    bool factor_height_exceeds(const UniPoly& factor) const;

private:
    int d_;
    BigInt hcof_;
    BigInt res_abs_;
    BigInt expc2_;
};

struct PCFVerdict {
    enum class Status { PCF, NonPCF, Undetermined };
    Status status = Status::Undetermined;
    // PCF: stabilized postcritical divisor and the level it stabilized at
    SqfDivisor postcritical;
    int stabilized_at = -1;
    // NonPCF: an accumulated irreducible factor whose roots are critical
    // orbit values of height beyond the preperiodicity bound
    UniPoly witness_factor;
    // Undetermined: exhausted budget description
    std::string budget_note;

    bool is_pcf() const { return status == Status::PCF; }
    std::string status_string() const;
};

/// Iterates the pushforward from the critical divisor, accumulating the
/// postcritical support.  Returns PCF with the stabilized divisor, NonPCF
/// with a height witness, or Undetermined at the budget.
/// height_budget caps the bit size of accumulated coefficients.
PCFVerdict pcf_check(const RationalMapP1& map, int level_budget = 10,
                     std::size_t height_budget_bits = 100000);

/// The critical divisor (squarefree part of the dehomogenized Wronskian
/// plus the infinity-critical flag).
SqfDivisor critical_divisor(const RationalMapP1& map);

/// Critical values: pushforward of the critical divisor.
SqfDivisor critical_value_divisor(const RationalMapP1& map);

struct ExceptionalityCertificate {
    bool exceptional = false;
    SqfDivisor backward_support;  // union of level-1 and level-2 preimages
};

/// alpha is exceptional iff its first and second preimage sets together
/// have at most 2 distinct points.
ExceptionalityCertificate is_exceptional(const RationalMapP1& map, const ProjPointQ& alpha);

/// b * F_n(x,1) - a * G_n(x,1) (roles swapped at alpha = infinity),
/// without primitivization; the raw level-n preimage form.
UniPoly preimage_form(const RationalMapP1& map, const ProjPointQ& alpha, int n,
                      std::size_t degree_budget = 4096);

/// Orbit of P under the map until a repeat or max_steps evaluations.
/// Returns the cycle entry index and period when a repeat occurs.  With an
/// escape bound, iteration stops once a point's height certifiably exceeds
/// the preperiodicity bound (no cycle can occur past that point).
struct CycleInfo {
    bool cycles = false;
    int preperiod = 0;
    int period = 0;
    bool escaped = false;  // height bound certified non-preperiodicity
    std::vector<ProjPointQ> orbit;
};
CycleInfo detect_cycle(const RationalMapP1& map, const ProjPointQ& P, int max_steps,
                       const HeightBound* escape = nullptr);

}  // namespace arbora

#endif

#ifndef ARBORA_UNIPOLY_HPP
#define ARBORA_UNIPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arbora/numeric.hpp"

namespace arbora {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored lowest degree first with no high zero padding.
/// The zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly{}; }
    static UniPoly constant(BigInt a);
    static UniPoly x();
    /// c * x^k
    static UniPoly monomial(BigInt c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of x^i (zero outside the stored range).
    const BigInt& coeff(int i) const;
    const BigInt& leading() const;
    const BigInt& constant_term() const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const BigInt& k) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    UniPoly derivative() const;
    UniPoly pow(unsigned e) const;
    /// p(q(x))
    UniPoly compose(const UniPoly& q) const;
    /// x^degree * p(1/x), i.e. the coefficient vector reversed (zero
    /// constant terms shift the degree down).
    UniPoly reversed() const;
    /// p(x + a)
    UniPoly shifted(const BigInt& a) const;
    /// p(k * x)
    UniPoly scaled_arg(const BigInt& k) const;
    /// Multiply by x^k.
    UniPoly shifted_up(int k) const;

    BigInt evaluate(const BigInt& x0) const;
    BigRat evaluate(const BigRat& x0) const;
    /// b^deg * p(a/b), the homogeneous evaluation at [a : b].
    BigInt evaluate_homogeneous(const BigInt& a, const BigInt& b) const;

    /// gcd of |coefficients| (0 for the zero polynomial).
    BigInt content() const;
    /// p / content, sign preserved.
    UniPoly primitive_part() const;
    /// Primitive with positive leading coefficient.
    UniPoly normalized() const;
    /// Max |coefficient|.
    BigInt height() const;

    /// Quotient when o divides *this exactly over Z; nullopt otherwise.
    std::optional<UniPoly> exact_divide(const UniPoly& o) const;
    /// Pseudo-remainder: lc(o)^(deg-deg(o)+1) * this = q*o + r. Returns r.
    UniPoly pseudo_rem(const UniPoly& o) const;

    /// Canonical ASCII: terms in decreasing degree with explicit '*',
    /// e.g. "x^4+2*x^2+2".
    std::string to_string(char var = 'x') const;
    /// Accepts the canonical form plus optional '*', spaces and parens-free
    /// signed integer coefficients.
    static UniPoly parse(const std::string& text, char var = 'x');
    /// Parse with any single alphabetic variable; reports the variable seen.
    static UniPoly parse_any_var(const std::string& text, char* var_out = nullptr);

private:
    void trim();
    std::vector<BigInt> c_;
};

UniPoly operator*(const BigInt& k, const UniPoly& p);

/// gcd over Z[x]: primitive with positive leading coefficient (content of
/// the inputs contributes its integer gcd).
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// Res(p, q) = lc(p)^deg(q) * prod q(alpha) over roots alpha of p,
/// computed by the subresultant polynomial remainder sequence.
/// Zero inputs are invalid.
BigInt resultant(const UniPoly& p, const UniPoly& q);

/// Same value via Bareiss elimination on the Sylvester matrix; the
/// independent second route used for cross-checking.
BigInt resultant_sylvester(const UniPoly& p, const UniPoly& q);

/// Sylvester-matrix resultant with q treated as a formal degree-n
/// polynomial (n >= deg q); equals lc(p)^(n - deg q) * Res(p, q).
BigInt resultant_formal(const UniPoly& p, const UniPoly& q, int formal_deg_q);

/// disc(p) = (-1)^(d(d-1)/2) Res(p, p') / lc(p); integral for integer p.
/// Constant polynomials are invalid.
BigInt discriminant(const UniPoly& p);

/// p / gcd(p, p'), primitive with positive leading coefficient.
UniPoly squarefree_part(const UniPoly& p);

/// Yun decomposition: list of (g_i, i) with p = content * prod g_i^i and
/// the g_i squarefree, pairwise coprime, primitive. Zero input invalid.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Fraction-free determinant of a square integer matrix (Bareiss).
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

}  // namespace arbora

#endif

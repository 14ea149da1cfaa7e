#ifndef ARBORA_MULTIPOLY_HPP
#define ARBORA_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arbora/numeric.hpp"
#include "arbora/unipoly.hpp"

namespace arbora {

/// Graded lexicographic order (total degree first, then lex with earlier
/// variables larger), descending; map iteration starts at the leading term.
struct GradedLexGreater {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse multivariate integer polynomial with a fixed variable arity.
/// Canonical term order is graded lex; no zero coefficients are stored.
class MultiPoly {
public:
    explicit MultiPoly(int arity = 3) : arity_(arity) {}
    static MultiPoly constant(int arity, BigInt c);
    static MultiPoly variable(int arity, int index);
    static MultiPoly monomial(int arity, std::vector<int> exps, BigInt c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for zero
    bool is_homogeneous() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<std::vector<int>, BigInt, GradedLexGreater>& terms() const { return terms_; }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const BigInt& k) const;
    bool operator==(const MultiPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(unsigned e) const;
    MultiPoly partial(int var) const;
    /// Substitute every variable: images.size() == arity, all of one arity.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;
    /// Substitute with univariate images (result in one variable).
    UniPoly substitute_univariate(const std::vector<UniPoly>& images) const;

    /// Quotient when o divides exactly; nullopt on divisibility failure.
    std::optional<MultiPoly> exact_divide(const MultiPoly& o) const;
    BigInt content() const;
    MultiPoly primitive_part() const;
    /// Primitive, leading coefficient positive.
    MultiPoly normalized() const;

    /// Canonical ASCII, graded-lex descending: "x^2*y - 2*z^3".
    std::string to_string() const;
    static MultiPoly parse(const std::string& text, int arity = 3);

    /// Variable names are fixed as x, y, z, w (arity <= 4).
    static const char* var_names();

private:
    void add_term(const std::vector<int>& e, const BigInt& c);
    int arity_;
    std::map<std::vector<int>, BigInt, GradedLexGreater> terms_;
};

MultiPoly operator*(const BigInt& k, const MultiPoly& p);

}  // namespace arbora

#endif

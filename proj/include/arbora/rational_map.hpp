#ifndef ARBORA_RATIONAL_MAP_HPP
#define ARBORA_RATIONAL_MAP_HPP

#include <string>
#include <utility>
#include <vector>

#include "arbora/budgets.hpp"
#include "arbora/int_factor.hpp"
#include "arbora/unipoly.hpp"

namespace arbora {

/// Homogeneous binary form of fixed degree; coeff(i) multiplies x^i y^(d-i).
class BinForm {
public:
    BinForm() = default;
    /// Coefficients by ascending x-degree, length = degree + 1.
    explicit BinForm(std::vector<BigInt> coeffs);
    /// y^(d - deg p) * homogenization of p.
    static BinForm homogenize(const UniPoly& p, int d);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const;
    const BigInt& coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    UniPoly dehomogenize() const;  // F(x, 1)
    /// Exponent of y dividing the form (d - deg of dehomogenization."x side")
    int y_valuation() const;
    int x_valuation() const;

    BinForm dx() const;
    BinForm dy() const;
    BigInt evaluate(const BigInt& a, const BigInt& b) const;
    /// F(A, B) for forms A, B of equal degree.
    BinForm compose(const BinForm& A, const BinForm& B) const;

    BinForm operator*(const BinForm& o) const;
    BinForm operator*(const BigInt& k) const;
    BinForm operator-(const BinForm& o) const;
    bool operator==(const BinForm& o) const { return c_ == o.c_; }

    BigInt content() const;
    std::string to_string() const;  // terms by descending x-degree, vars x,y

private:
    std::vector<BigInt> c_;
};

/// Res(F, G) of two forms of equal degree (Sylvester determinant).
BigInt form_resultant(const BinForm& F, const BinForm& G);

/// Point of P^1(Q) in coprime normal form: b >= 0, gcd = 1, infinity = [1:0].
struct ProjPointQ {
    BigInt a = 0, b = 1;

    ProjPointQ() = default;
    ProjPointQ(BigInt a_, BigInt b_);
    static ProjPointQ infinity() { return ProjPointQ(1, 0); }
    static ProjPointQ from_rational(const BigRat& r);
    static ProjPointQ parse(const std::string& text);

    bool is_infinity() const { return b == 0; }
    BigRat to_rational() const;  // finite points only
    /// max(|a|, |b|), the multiplicative height.
    BigInt height() const;
    std::string to_string() const;
    bool operator==(const ProjPointQ& o) const { return a == o.a && b == o.b; }
    bool operator<(const ProjPointQ& o) const;
};

/// Primes of bad reduction (resultant support) and of inseparable
/// reduction (Wronskian content support), with factorization caveats.
struct BadPrimeClasses {
    std::vector<BigInt> bad_reduction;
    std::vector<BigInt> inseparable_reduction;
    bool complete = true;     // false if a factorization budget ran out
    BigInt res_cofactor = 1;  // unfactored part of |Res(F,G)|
    BigInt wr_cofactor = 1;   // unfactored part of content(W)
};

/// Degree-d >= 2 self-map of P^1 over Q as a coprime primitive pair of
/// integer forms, sign-normalized on the first form.
class RationalMapP1 {
public:
    /// Divides out common integer and polynomial content, then checks
    /// nonzero resultant and degree >= 2.
    static RationalMapP1 normalize(const BinForm& rawF, const BinForm& rawG);
    /// "z^2+1", "(z^2-1)/(z+3)" or "[x^2+y^2 : y^2]".
    static RationalMapP1 parse(const std::string& text);

    const BinForm& F() const { return F_; }
    const BinForm& G() const { return G_; }
    int degree() const { return F_.degree(); }
    const BigInt& resultant() const { return res_; }

    ProjPointQ evaluate(const ProjPointQ& P) const;
    ProjPointQ evaluate_n(const ProjPointQ& P, int n) const;

    /// (F_n, G_n): the exact n-fold composition, no content removal.
    std::pair<BinForm, BinForm> iterate_forms(int n, std::size_t degree_budget = 4096) const;
    /// Normalized map of the k-th iterate.
    RationalMapP1 iterate_map(int k, std::size_t degree_budget = 4096) const;

    struct Wronskian {
        BinForm W;               // F_x G_y - F_y G_x, degree 2d-2
        BigInt content;          // integer content of W
        bool infinity_critical;  // W vanishes at [1:0]
    };
    Wronskian critical_wronskian() const;

    BadPrimeClasses reduction_bad_primes(const FactorBudget& budget = {}) const;

    std::string to_string() const;  // "[F : G]"
    bool operator==(const RationalMapP1& o) const { return F_ == o.F_ && G_ == o.G_; }

private:
    RationalMapP1(BinForm F, BinForm G, BigInt res)
        : F_(std::move(F)), G_(std::move(G)), res_(std::move(res)) {}
    BinForm F_, G_;
    BigInt res_;
};

}  // namespace arbora

#endif

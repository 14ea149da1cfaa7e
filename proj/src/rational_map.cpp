#include "arbora/rational_map.hpp"

#include <cctype>
#include <stdexcept>

#include "arbora/errors.hpp"

namespace arbora {

namespace {
const BigInt kZero = 0;
}

BinForm::BinForm(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("BinForm: empty coefficient list");
}

BinForm BinForm::homogenize(const UniPoly& p, int d) {
    if (p.degree() > d) throw std::invalid_argument("BinForm::homogenize: degree too large");
    std::vector<BigInt> c(static_cast<std::size_t>(d) + 1, BigInt(0));
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = p.coeff(i);
    return BinForm(std::move(c));
}

bool BinForm::is_zero() const {
    for (const auto& a : c_)
        if (a != 0) return false;
    return true;
}

const BigInt& BinForm::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

UniPoly BinForm::dehomogenize() const { return UniPoly(c_); }

int BinForm::y_valuation() const {
    for (int i = degree(); i >= 0; --i)
        if (c_[static_cast<std::size_t>(i)] != 0) return degree() - i;
    return degree() + 1;  // zero form
}

int BinForm::x_valuation() const {
    for (int i = 0; i <= degree(); ++i)
        if (c_[static_cast<std::size_t>(i)] != 0) return i;
    return degree() + 1;
}

BinForm BinForm::dx() const {
    // d/dx of sum c_i x^i y^(d-i) -> sum i c_i x^(i-1) y^(d-i): degree d-1
    const int d = degree();
    if (d == 0) return BinForm(std::vector<BigInt>{BigInt(0)});
    std::vector<BigInt> r(static_cast<std::size_t>(d), BigInt(0));
    for (int i = 1; i <= d; ++i)
        r[static_cast<std::size_t>(i - 1)] = BigInt(i) * c_[static_cast<std::size_t>(i)];
    return BinForm(std::move(r));
}

BinForm BinForm::dy() const {
    const int d = degree();
    if (d == 0) return BinForm(std::vector<BigInt>{BigInt(0)});
    std::vector<BigInt> r(static_cast<std::size_t>(d), BigInt(0));
    for (int i = 0; i < d; ++i)
        r[static_cast<std::size_t>(i)] = BigInt(d - i) * c_[static_cast<std::size_t>(i)];
    return BinForm(std::move(r));
}

BigInt BinForm::evaluate(const BigInt& a, const BigInt& b) const {
    const int d = degree();
    std::vector<BigInt> bp(static_cast<std::size_t>(d) + 1);
    bp[0] = 1;
    for (int i = 1; i <= d; ++i) bp[static_cast<std::size_t>(i)] = bp[static_cast<std::size_t>(i - 1)] * b;
    BigInt r = 0, ap = 1;
    for (int i = 0; i <= d; ++i) {
        if (c_[static_cast<std::size_t>(i)] != 0)
            r += c_[static_cast<std::size_t>(i)] * ap * bp[static_cast<std::size_t>(d - i)];
        if (i < d) ap *= a;
    }
    return r;
}

BinForm BinForm::compose(const BinForm& A, const BinForm& B) const {
    if (A.degree() != B.degree()) throw std::invalid_argument("BinForm::compose: degree mismatch");
    const int d = degree();
    const int e = A.degree();
    // result degree d*e; sum c_i A^i B^(d-i)
    std::vector<BinForm> Apow(static_cast<std::size_t>(d) + 1), Bpow(static_cast<std::size_t>(d) + 1);
    Apow[0] = BinForm(std::vector<BigInt>{BigInt(1)});
    Bpow[0] = Apow[0];
    for (int i = 1; i <= d; ++i) {
        Apow[static_cast<std::size_t>(i)] = Apow[static_cast<std::size_t>(i - 1)] * A;
        Bpow[static_cast<std::size_t>(i)] = Bpow[static_cast<std::size_t>(i - 1)] * B;
    }
    std::vector<BigInt> acc(static_cast<std::size_t>(d * e) + 1, BigInt(0));
    for (int i = 0; i <= d; ++i) {
        if (c_[static_cast<std::size_t>(i)] == 0) continue;
        BinForm term = Apow[static_cast<std::size_t>(i)] * Bpow[static_cast<std::size_t>(d - i)];
        for (int j = 0; j <= term.degree(); ++j)
            acc[static_cast<std::size_t>(j)] += c_[static_cast<std::size_t>(i)] * term.coeff(j);
    }
    return BinForm(std::move(acc));
}

BinForm BinForm::operator*(const BinForm& o) const {
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return BinForm(std::move(r));
}

BinForm BinForm::operator*(const BigInt& k) const {
    std::vector<BigInt> r(c_);
    for (auto& a : r) a *= k;
    return BinForm(std::move(r));
}

BinForm BinForm::operator-(const BinForm& o) const {
    if (degree() != o.degree()) throw std::invalid_argument("BinForm: degree mismatch in subtraction");
    std::vector<BigInt> r(c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
    return BinForm(std::move(r));
}

BigInt BinForm::content() const {
    BigInt g = 0;
    for (const auto& a : c_) {
        g = gcd(g, a);
        if (g == 1) break;
    }
    return g;
}

std::string BinForm::to_string() const {
    const int d = degree();
    std::string out;
    for (int i = d; i >= 0; --i) {
        const BigInt& a = c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        const bool first = out.empty();
        if (sgn(a) < 0)
            out += '-';
        else if (!first)
            out += '+';
        BigInt m = abs(a);
        std::string vars;
        const int xe = i, ye = d - i;
        if (xe > 0) {
            vars += 'x';
            if (xe > 1) vars += "^" + std::to_string(xe);
        }
        if (ye > 0) {
            if (!vars.empty()) vars += '*';
            vars += 'y';
            if (ye > 1) vars += "^" + std::to_string(ye);
        }
        if (vars.empty()) {
            out += m.get_str();
        } else {
            if (m != 1) {
                out += m.get_str();
                out += '*';
            }
            out += vars;
        }
    }
    if (out.empty()) out = "0";
    return out;
}

BigInt form_resultant(const BinForm& F, const BinForm& G) {
    if (F.degree() != G.degree()) throw std::invalid_argument("form_resultant: unequal degrees");
    if (F.is_zero() || G.is_zero()) throw std::invalid_argument("form_resultant: zero form");
    const int d = F.degree();
    // Res of the dehomogenizations with both treated as formal degree d.
    UniPoly f = F.dehomogenize();
    UniPoly g = G.dehomogenize();
    if (f.degree() < d) {
        // swap roles so the first argument has full degree; for forms of
        // equal formal degree the resultant is symmetric up to (-1)^(d^2)
        // = (-1)^d, but if both drop, x | both, Res = 0.
        if (g.degree() < d) return 0;
        BigInt r = resultant_formal(g, f, d);
        return (d % 2 == 1) ? BigInt(-r) : r;
    }
    return resultant_formal(f, g, d);
}

ProjPointQ::ProjPointQ(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a == 0 && b == 0) throw std::invalid_argument("ProjPointQ: (0,0) is not a point");
    BigInt g = gcd(a, b);
    a = divexact(a, g);
    b = divexact(b, g);
    if (sgn(b) < 0) {
        a = -a;
        b = -b;
    }
    if (b == 0) a = 1;
}

ProjPointQ ProjPointQ::from_rational(const BigRat& r) {
    return ProjPointQ(BigInt(r.get_num()), BigInt(r.get_den()));
}

ProjPointQ ProjPointQ::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "inf" || s == "Inf" || s == "INF" || s == "oo" || s == "infinity")
        return ProjPointQ::infinity();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return ProjPointQ(BigInt(s), 1);
        return ProjPointQ(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw parse_error("point: cannot parse \"" + text + "\"");
    }
}

BigRat ProjPointQ::to_rational() const {
    if (is_infinity()) throw std::invalid_argument("ProjPointQ: infinity has no rational value");
    return BigRat(a) / BigRat(b);
}

BigInt ProjPointQ::height() const {
    BigInt aa = abs(a), bb = abs(b);
    return aa > bb ? aa : bb;
}

std::string ProjPointQ::to_string() const {
    if (is_infinity()) return "inf";
    if (b == 1) return a.get_str();
    return a.get_str() + "/" + b.get_str();
}

bool ProjPointQ::operator<(const ProjPointQ& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
}

RationalMapP1 RationalMapP1::normalize(const BinForm& rawF, const BinForm& rawG) {
    if (rawF.degree() != rawG.degree())
        throw std::invalid_argument("map: forms must have equal degree");
    if (rawF.is_zero() || rawG.is_zero()) throw std::invalid_argument("degenerate map: a form is zero");
    UniPoly f = rawF.dehomogenize();
    UniPoly g = rawG.dehomogenize();
    const int d0 = rawF.degree();
    // common polynomial factor: gcd of dehomogenizations and shared y-power
    UniPoly h = poly_gcd(f, g);
    const int yv = std::min(rawF.y_valuation(), rawG.y_valuation());
    UniPoly fr = *f.exact_divide(h);
    UniPoly gr = *g.exact_divide(h);
    const int d = d0 - h.degree() - yv;
    if (d < std::max(fr.degree(), gr.degree()))
        throw std::invalid_argument("degenerate map: inconsistent reduction");
    if (d == 0) throw std::invalid_argument("degenerate map: constant after removing common factors");
    if (d == 1) throw std::invalid_argument("degree too small: map degree must be >= 2");
    BinForm F = BinForm::homogenize(fr, d);
    BinForm G = BinForm::homogenize(gr, d);
    // joint integer content
    BigInt c = gcd(F.content(), G.content());
    if (c > 1) {
        std::vector<BigInt> fc(F.coeffs()), gc(G.coeffs());
        for (auto& a : fc) a = divexact(a, c);
        for (auto& a : gc) a = divexact(a, c);
        F = BinForm(std::move(fc));
        G = BinForm(std::move(gc));
    }
    // sign: first nonzero coefficient of F scanning from x^d down is positive
    int lead = -1;
    for (int i = d; i >= 0; --i)
        if (F.coeff(i) != 0) {
            lead = i;
            break;
        }
    if (lead >= 0 && sgn(F.coeff(lead)) < 0) {
        F = F * BigInt(-1);
        G = G * BigInt(-1);
    }
    BigInt res = form_resultant(F, G);
    if (res == 0) throw std::invalid_argument("degenerate map: resultant is zero");
    return RationalMapP1(std::move(F), std::move(G), std::move(res));
}

namespace {

/// Univariate rational-function map input: "z^2+1" or "(z^2-1)/(z+3)".
RationalMapP1 parse_univariate_map(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    std::string num = s, den = "1";
    if (!s.empty() && s[0] == '(') {
        int depth = 0;
        std::size_t close = std::string::npos;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') {
                --depth;
                if (depth == 0) {
                    close = i;
                    break;
                }
            }
        }
        if (close == std::string::npos) throw parse_error("map: unbalanced parentheses");
        if (close + 1 < s.size() && s[close + 1] == '/') {
            num = s.substr(1, close - 1);
            std::string rest = s.substr(close + 2);
            if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')')
                rest = rest.substr(1, rest.size() - 2);
            den = rest;
        }
    }
    char var = 'z';
    UniPoly pn = UniPoly::parse_any_var(num, &var);
    char var2 = var;
    UniPoly pd = den == "1" ? UniPoly::constant(1) : UniPoly::parse_any_var(den, &var2);
    if (!pd.is_constant() && var2 != var) throw parse_error("map: numerator/denominator variables differ");
    const int d = std::max(pn.degree(), pd.degree());
    return RationalMapP1::normalize(BinForm::homogenize(pn, d), BinForm::homogenize(pd, d));
}

UniPoly parse_form_side(const std::string& text) {
    // binary form in x, y: substitute y = 1 on a parsed two-variable term
    // list; degrees recovered by homogenization afterwards.  Terms look
    // like "3*x^2*y", "x", "y^2", "-x*y".
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw parse_error("map: empty form");
    UniPoly acc;
    std::size_t i = 0;
    bool first = true;
    int max_total = 0;
    std::vector<std::pair<int, BigInt>> terms;  // (x-degree, coeff) after y->1
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        } else if (!first) {
            throw parse_error("map: bad form syntax");
        }
        first = false;
        BigInt coeff = 1;
        bool saw = false;
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        if (!digits.empty()) {
            coeff = BigInt(digits);
            saw = true;
        }
        int xe = 0, ye = 0;
        while (i < s.size() && (s[i] == '*' || s[i] == 'x' || s[i] == 'y')) {
            if (s[i] == '*') {
                ++i;
                continue;
            }
            char v = s[i++];
            int e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string ds;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ds += s[i++];
                if (ds.empty()) throw parse_error("map: bad exponent");
                e = std::stoi(ds);
            }
            (v == 'x' ? xe : ye) += e;
            saw = true;
        }
        if (!saw) throw parse_error("map: bad term in form");
        if (sign < 0) coeff = -coeff;
        terms.emplace_back(xe, coeff);
        max_total = std::max(max_total, xe + ye);
        (void)ye;
    }
    // verify homogeneity and build dehomogenized poly
    // (terms with the same x-degree but different totals would collide)
    std::vector<BigInt> c(static_cast<std::size_t>(max_total) + 1, BigInt(0));
    for (auto& [xe, coeff] : terms) c[static_cast<std::size_t>(xe)] += coeff;
    acc = UniPoly(std::move(c));
    return acc;
}

}  // namespace

RationalMapP1 RationalMapP1::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw parse_error("map: missing ']'");
        std::string body = s.substr(1, s.size() - 2);
        auto colon = body.find(':');
        if (colon == std::string::npos) throw parse_error("map: expected \"[F : G]\"");
        UniPoly f = parse_form_side(body.substr(0, colon));
        UniPoly g = parse_form_side(body.substr(colon + 1));
        const int d = std::max(f.degree(), g.degree());
        return normalize(BinForm::homogenize(f, d), BinForm::homogenize(g, d));
    }
    return parse_univariate_map(text);
}

ProjPointQ RationalMapP1::evaluate(const ProjPointQ& P) const {
    BigInt fa = F_.evaluate(P.a, P.b);
    BigInt ga = G_.evaluate(P.a, P.b);
    return ProjPointQ(std::move(fa), std::move(ga));
}

ProjPointQ RationalMapP1::evaluate_n(const ProjPointQ& P, int n) const {
    ProjPointQ Q = P;
    for (int i = 0; i < n; ++i) Q = evaluate(Q);
    return Q;
}

std::pair<BinForm, BinForm> RationalMapP1::iterate_forms(int n, std::size_t degree_budget) const {
    if (n < 1) throw std::invalid_argument("iterate_forms: n must be >= 1");
    const int d = degree();
    // d^n + 1 coefficients per form
    double est = 1;
    for (int i = 0; i < n; ++i) {
        est *= d;
        if (est > static_cast<double>(degree_budget))
            throw budget_error("degree budget: d^n exceeds " + std::to_string(degree_budget) +
                               " at n = " + std::to_string(i + 1));
    }
    BinForm Fn = F_, Gn = G_;
    for (int i = 1; i < n; ++i) {
        BinForm Fn1 = F_.compose(Fn, Gn);
        BinForm Gn1 = G_.compose(Fn, Gn);
        Fn = std::move(Fn1);
        Gn = std::move(Gn1);
    }
    return {Fn, Gn};
}

RationalMapP1 RationalMapP1::iterate_map(int k, std::size_t degree_budget) const {
    if (k == 1) return *this;
    auto [Fk, Gk] = iterate_forms(k, degree_budget);
    return normalize(Fk, Gk);
}

RationalMapP1::Wronskian RationalMapP1::critical_wronskian() const {
    BinForm W = F_.dx() * G_.dy() - F_.dy() * G_.dx();
    if (W.is_zero()) throw std::domain_error("inseparable map: vanishing Wronskian");
    RationalMapP1::Wronskian out{W, W.content(), W.coeff(W.degree()) == 0};
    return out;
}

BadPrimeClasses RationalMapP1::reduction_bad_primes(const FactorBudget& budget) const {
    BadPrimeClasses out;
    BigInt r = abs(res_);
    if (r > 1) {
        IntFactorization fr = factor_integer(r, budget);
        out.bad_reduction = fr.prime_support();
        if (!fr.complete) {
            out.complete = false;
            out.res_cofactor = fr.cofactor;
        }
    }
    auto w = critical_wronskian();
    if (w.content > 1) {
        IntFactorization fw = factor_integer(w.content, budget);
        out.inseparable_reduction = fw.prime_support();
        if (!fw.complete) {
            out.complete = false;
            out.wr_cofactor = fw.cofactor;
        }
    }
    return out;
}

std::string RationalMapP1::to_string() const {
    return "[" + F_.to_string() + " : " + G_.to_string() + "]";
}

}  // namespace arbora

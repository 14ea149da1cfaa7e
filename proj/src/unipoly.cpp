#include "arbora/unipoly.hpp"

#include <cctype>
#include <stdexcept>

#include "arbora/errors.hpp"

namespace arbora {

namespace {
const BigInt kZero = 0;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(BigInt a) {
    UniPoly p;
    if (a != 0) p.c_.push_back(std::move(a));
    return p;
}

UniPoly UniPoly::x() { return monomial(1, 1); }

UniPoly UniPoly::monomial(BigInt c, int k) {
    UniPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<std::size_t>(k) + 1, BigInt(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

const BigInt& UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

const BigInt& UniPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

const BigInt& UniPoly::constant_term() const {
    if (c_.empty()) return kZero;
    return c_.front();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& a : r.c_) a = -a;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly{};
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const BigInt& k) const {
    if (k == 0) return UniPoly{};
    UniPoly r(*this);
    for (auto& a : r.c_) a *= k;
    return r;
}

UniPoly operator*(const BigInt& k, const UniPoly& p) { return p * k; }

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly{};
    std::vector<BigInt> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = BigInt(static_cast<long>(i)) * c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = UniPoly::constant(1);
    UniPoly base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

UniPoly UniPoly::compose(const UniPoly& q) const {
    UniPoly r;
    for (int i = degree(); i >= 0; --i) {
        r = r * q + UniPoly::constant(coeff(i));
    }
    return r;
}

UniPoly UniPoly::reversed() const {
    std::vector<BigInt> r(c_.rbegin(), c_.rend());
    return UniPoly(std::move(r));
}

UniPoly UniPoly::shifted(const BigInt& a) const {
    return compose(UniPoly(std::vector<BigInt>{a, BigInt(1)}));
}

UniPoly UniPoly::scaled_arg(const BigInt& k) const {
    UniPoly r(*this);
    BigInt kp = 1;
    for (std::size_t i = 1; i < r.c_.size(); ++i) {
        kp *= k;
        r.c_[i] *= kp;
    }
    r.trim();
    return r;
}

UniPoly UniPoly::shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> r(c_.size() + static_cast<std::size_t>(k), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + static_cast<std::size_t>(k)] = c_[i];
    return UniPoly(std::move(r));
}

BigInt UniPoly::evaluate(const BigInt& x0) const {
    BigInt r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x0 + c_[static_cast<std::size_t>(i)];
    return r;
}

BigRat UniPoly::evaluate(const BigRat& x0) const {
    BigRat r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x0 + BigRat(c_[static_cast<std::size_t>(i)]);
    return r;
}

BigInt UniPoly::evaluate_homogeneous(const BigInt& a, const BigInt& b) const {
    if (is_zero()) return 0;
    const int d = degree();
    std::vector<BigInt> bp(static_cast<std::size_t>(d) + 1);
    bp[0] = 1;
    for (int i = 1; i <= d; ++i) bp[static_cast<std::size_t>(i)] = bp[static_cast<std::size_t>(i - 1)] * b;
    BigInt r = 0;
    BigInt ap = 1;
    for (int i = 0; i <= d; ++i) {
        r += c_[static_cast<std::size_t>(i)] * ap * bp[static_cast<std::size_t>(d - i)];
        if (i < d) ap *= a;
    }
    return r;
}

BigInt UniPoly::content() const {
    BigInt g = 0;
    for (const auto& a : c_) {
        g = gcd(g, a);
        if (g == 1) break;
    }
    return g;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return *this;
    BigInt g = content();
    UniPoly r(*this);
    for (auto& a : r.c_) a = divexact(a, g);
    return r;
}

UniPoly UniPoly::normalized() const {
    if (is_zero()) return *this;
    UniPoly r = primitive_part();
    if (sgn(r.leading()) < 0) r = -r;
    return r;
}

BigInt UniPoly::height() const {
    BigInt h = 0;
    for (const auto& a : c_) {
        BigInt v = abs(a);
        if (v > h) h = v;
    }
    return h;
}

std::optional<UniPoly> UniPoly::exact_divide(const UniPoly& o) const {
    if (o.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
    if (is_zero()) return UniPoly{};
    if (degree() < o.degree()) return std::nullopt;
    std::vector<BigInt> rem = c_;
    std::vector<BigInt> q(c_.size() - o.c_.size() + 1, BigInt(0));
    const BigInt& lo = o.leading();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        const BigInt& top = rem[static_cast<std::size_t>(k + o.degree())];
        if (top == 0) continue;
        BigInt qk, r0;
        mpz_tdiv_qr(qk.get_mpz_t(), r0.get_mpz_t(), top.get_mpz_t(), lo.get_mpz_t());
        if (r0 != 0) return std::nullopt;
        q[static_cast<std::size_t>(k)] = qk;
        for (int j = 0; j <= o.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= qk * o.c_[static_cast<std::size_t>(j)];
    }
    for (const auto& a : rem)
        if (a != 0) return std::nullopt;
    return UniPoly(std::move(q));
}

UniPoly UniPoly::pseudo_rem(const UniPoly& o) const {
    if (o.is_zero()) throw std::invalid_argument("pseudo_rem: division by zero polynomial");
    UniPoly r(*this);
    const int db = o.degree();
    int e = degree() - db + 1;
    if (e < 0) e = 0;
    const BigInt& d = o.leading();
    while (!r.is_zero() && r.degree() >= db) {
        UniPoly t = o.shifted_up(r.degree() - db) * r.leading();
        r = r * d - t;
        --e;
    }
    if (e > 0) r = r * pow_ui(d, static_cast<unsigned long>(e));
    return r;
}

std::string UniPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& a = c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        const bool first = out.empty();
        if (sgn(a) < 0)
            out += '-';
        else if (!first)
            out += '+';
        BigInt m = abs(a);
        if (i == 0) {
            out += m.get_str();
        } else {
            if (m != 1) {
                out += m.get_str();
                out += '*';
            }
            out += var;
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t i = 0;
    char var;

    explicit PolyParser(const std::string& text, char v) : s(text), var(v) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    BigInt parse_uint() {
        skip_ws();
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        if (digits.empty()) throw parse_error("polynomial: expected integer near position " + std::to_string(i));
        return BigInt(digits);
    }

    UniPoly parse_poly() {
        UniPoly acc;
        bool first = true;
        while (!eof()) {
            int sign = 1;
            char c = peek();
            if (c == '+') {
                ++i;
            } else if (c == '-') {
                sign = -1;
                ++i;
            } else if (!first) {
                throw parse_error(std::string("polynomial: unexpected character '") + c + "'");
            }
            acc = acc + parse_term(sign);
            first = false;
        }
        if (first) throw parse_error("polynomial: empty input");
        return acc;
    }

    UniPoly parse_term(int sign) {
        skip_ws();
        BigInt coeff = 1;
        bool saw_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = parse_uint();
            saw_coeff = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
        }
        int deg = 0;
        if (i < s.size() && s[i] == var) {
            ++i;
            deg = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                deg = static_cast<int>(parse_uint().get_si());
            }
        } else if (!saw_coeff) {
            throw parse_error("polynomial: expected coefficient or variable near position " + std::to_string(i));
        }
        if (sign < 0) coeff = -coeff;
        return UniPoly::monomial(coeff, deg);
    }
};

}  // namespace

UniPoly UniPoly::parse(const std::string& text, char var) {
    PolyParser p(text, var);
    return p.parse_poly();
}

UniPoly UniPoly::parse_any_var(const std::string& text, char* var_out) {
    char var = 'x';
    for (char c : text) {
        if (std::isalpha(static_cast<unsigned char>(c))) {
            var = c;
            break;
        }
    }
    for (char c : text) {
        if (std::isalpha(static_cast<unsigned char>(c)) && c != var)
            throw parse_error("polynomial: mixed variables in univariate input");
    }
    if (var_out) *var_out = var;
    return parse(text, var);
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    BigInt c = gcd(a.content(), b.content());
    UniPoly A = a.primitive_part();
    UniPoly B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        UniPoly R = A.pseudo_rem(B).normalized();
        A = B;
        B = R;
    }
    UniPoly g = A.normalized();
    return g * c;
}

BigInt resultant_formal(const UniPoly& p, const UniPoly& q, int n) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    const int m = p.degree();
    if (n < q.degree()) throw std::invalid_argument("resultant_formal: formal degree below actual");
    if (m == 0 && n == 0) return 1;
    if (m == 0) return pow_ui(p.leading(), static_cast<unsigned long>(n));
    if (n == 0) return pow_ui(q.coeff(0), static_cast<unsigned long>(m));
    const int N = m + n;
    std::vector<std::vector<BigInt>> M(static_cast<std::size_t>(N),
                                       std::vector<BigInt>(static_cast<std::size_t>(N), BigInt(0)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = p.coeff(m - j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j)
            M[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = q.coeff(n - j);
    return bareiss_determinant(std::move(M));
}

BigInt resultant_sylvester(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    return resultant_formal(p, q, q.degree());
}

BigInt resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    int m = p.degree(), n = q.degree();
    if (m == 0 && n == 0) return 1;
    if (m == 0) return pow_ui(p.leading(), static_cast<unsigned long>(n));
    if (n == 0) return pow_ui(q.leading(), static_cast<unsigned long>(m));

    UniPoly A = p, B = q;
    int sign = 1;
    if (m < n) {
        std::swap(A, B);
        if ((m & 1) && (n & 1)) sign = -sign;
    }
    BigInt ca = A.content(), cb = B.content();
    A = A.primitive_part();
    B = B.primitive_part();
    BigInt t = pow_ui(ca, static_cast<unsigned long>(B.degree())) *
               pow_ui(cb, static_cast<unsigned long>(A.degree()));

    BigInt g = 1, h = 1;
    while (B.degree() > 0) {
        const int da = A.degree(), db = B.degree();
        const int delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        UniPoly R = A.pseudo_rem(B);
        A = B;
        BigInt divisor = g * pow_ui(h, static_cast<unsigned long>(delta));
        if (R.is_zero()) return 0;  // nontrivial gcd
        auto quo = R.exact_divide(UniPoly::constant(divisor));
        B = *quo;
        g = A.leading();
        if (delta > 0)
            h = divexact(pow_ui(g, static_cast<unsigned long>(delta)),
                         pow_ui(h, static_cast<unsigned long>(delta - 1)));
    }
    if (B.is_zero()) return 0;
    // B is a nonzero constant
    const int da = A.degree();
    BigInt res = divexact(pow_ui(B.leading(), static_cast<unsigned long>(da)),
                          pow_ui(h, static_cast<unsigned long>(da - 1)));
    return sign * t * res;
}

BigInt discriminant(const UniPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("discriminant: polynomial must have degree >= 1");
    if (p.degree() == 1) return 1;
    UniPoly dp = p.derivative();
    if (dp.is_zero()) return 0;
    BigInt r = resultant(p, dp);
    const long d = p.degree();
    BigInt res = divexact(r, p.leading());
    if (((d * (d - 1)) / 2) % 2 == 1) res = -res;
    return res;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(1);
    UniPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.normalized();
    auto q = p.exact_divide(g);
    if (!q) {
        // content mismatch only; divide primitive parts instead
        q = p.primitive_part().exact_divide(g.primitive_part());
    }
    return q->normalized();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly f = p.normalized();
    if (f.degree() == 0) return out;
    UniPoly fp = f.derivative();
    UniPoly g = poly_gcd(f, fp);
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    UniPoly c = *f.exact_divide(g);
    UniPoly d = *fp.exact_divide(g) - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        UniPoly a = poly_gcd(c, d);
        UniPoly c2 = *c.exact_divide(a);
        d = *d.exact_divide(a) - c2.derivative();
        c = c2;
        if (a.degree() > 0) out.emplace_back(a.normalized(), i);
        ++i;
    }
    return out;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divexact(t, prev);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace arbora

#include "arbora/multipoly.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "arbora/errors.hpp"

namespace arbora {

bool GradedLexGreater::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;  // lex with earlier variables dominant
}

const char* MultiPoly::var_names() { return "xyzw"; }

MultiPoly MultiPoly::constant(int arity, BigInt c) {
    MultiPoly p(arity);
    if (c != 0) p.terms_[std::vector<int>(static_cast<std::size_t>(arity), 0)] = std::move(c);
    return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
    if (index < 0 || index >= arity) throw std::invalid_argument("MultiPoly::variable: bad index");
    MultiPoly p(arity);
    std::vector<int> e(static_cast<std::size_t>(arity), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.terms_[std::move(e)] = 1;
    return p;
}

MultiPoly MultiPoly::monomial(int arity, std::vector<int> exps, BigInt c) {
    if (static_cast<int>(exps.size()) != arity)
        throw std::invalid_argument("MultiPoly::monomial: exponent arity mismatch");
    MultiPoly p(arity);
    if (c != 0) p.terms_[std::move(exps)] = std::move(c);
    return p;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;  // leading term has max total degree
    return std::accumulate(e.begin(), e.end(), 0);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree();
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    return true;
}

void MultiPoly::add_term(const std::vector<int>& e, const BigInt& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_[e] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
    MultiPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
    MultiPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
    MultiPoly r(arity_);
    std::vector<int> e(static_cast<std::size_t>(arity_));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const BigInt& k) const {
    if (k == 0) return MultiPoly(arity_);
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c *= k;
    return r;
}

MultiPoly operator*(const BigInt& k, const MultiPoly& p) { return p * k; }

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = MultiPoly::constant(arity_, 1);
    MultiPoly base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::partial(int var) const {
    if (var < 0 || var >= arity_) throw std::invalid_argument("MultiPoly::partial: bad variable");
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        std::vector<int> e2 = e;
        e2[static_cast<std::size_t>(var)] = k - 1;
        r.add_term(e2, c * k);
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != arity_)
        throw std::invalid_argument("MultiPoly::substitute: image count must equal arity");
    const int out_arity = images.empty() ? 0 : images[0].arity();
    for (const auto& im : images)
        if (im.arity() != out_arity) throw std::invalid_argument("MultiPoly::substitute: mixed arity");
    MultiPoly r(out_arity);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(out_arity, c);
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) term = term * images[v].pow(static_cast<unsigned>(e[v]));
        r = r + term;
    }
    return r;
}

UniPoly MultiPoly::substitute_univariate(const std::vector<UniPoly>& images) const {
    if (static_cast<int>(images.size()) != arity_)
        throw std::invalid_argument("MultiPoly::substitute_univariate: image count mismatch");
    UniPoly r;
    for (const auto& [e, c] : terms_) {
        UniPoly term = UniPoly::constant(c);
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) term = term * images[v].pow(static_cast<unsigned>(e[v]));
        r = r + term;
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly& o) const {
    if (o.is_zero()) throw std::invalid_argument("MultiPoly::exact_divide: zero divisor");
    if (arity_ != o.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
    MultiPoly q(arity_);
    MultiPoly r(*this);
    const auto& ltb = *o.terms_.begin();
    while (!r.is_zero()) {
        const auto& ltr = *r.terms_.begin();
        std::vector<int> e(static_cast<std::size_t>(arity_));
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = ltr.first[i] - ltb.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        BigInt qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), ltr.second.get_mpz_t(), ltb.second.get_mpz_t());
        if (rem != 0) return std::nullopt;
        MultiPoly qt = MultiPoly::monomial(arity_, e, qc);
        q = q + qt;
        r = r - qt * o;
    }
    return q;
}

BigInt MultiPoly::content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

MultiPoly MultiPoly::primitive_part() const {
    if (is_zero()) return *this;
    BigInt g = content();
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = divexact(c, g);
    return r;
}

MultiPoly MultiPoly::normalized() const {
    if (is_zero()) return *this;
    MultiPoly r = primitive_part();
    if (sgn(r.terms_.begin()->second) < 0) r = -r;
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        const bool first = out.empty();
        if (sgn(c) < 0)
            out += first ? "-" : " - ";
        else if (!first)
            out += " + ";
        BigInt m = abs(c);
        std::string vars;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += var_names()[v];
            if (e[v] > 1) vars += "^" + std::to_string(e[v]);
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
    return out;
}

MultiPoly MultiPoly::parse(const std::string& text, int arity) {
    if (arity < 1 || arity > 4) throw parse_error("MultiPoly::parse: arity must be 1..4");
    MultiPoly acc(arity);
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw parse_error("MultiPoly::parse: empty input");
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        } else if (!first) {
            throw parse_error("MultiPoly::parse: expected +/- between terms");
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
        std::vector<int> exps(static_cast<std::size_t>(arity), 0);
        while (i < s.size() && (s[i] == '*' || std::isalpha(static_cast<unsigned char>(s[i])))) {
            if (s[i] == '*') {
                ++i;
                continue;
            }
            const char* names = var_names();
            int idx = -1;
            for (int v = 0; v < arity; ++v)
                if (names[v] == s[i]) idx = v;
            if (idx < 0) throw parse_error(std::string("MultiPoly::parse: unknown variable '") + s[i] + "'");
            ++i;
            int e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string ds;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ds += s[i++];
                if (ds.empty()) throw parse_error("MultiPoly::parse: bad exponent");
                e = std::stoi(ds);
            }
            exps[static_cast<std::size_t>(idx)] += e;
            saw = true;
        }
        if (!saw) throw parse_error("MultiPoly::parse: empty term");
        if (sign < 0) coeff = -coeff;
        acc.add_term(exps, coeff);
    }
    return acc;
}

}  // namespace arbora

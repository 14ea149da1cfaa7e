#include "arbora/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace arbora::fp {

namespace {

BigInt mod_pos(const BigInt& a, const BigInt& p) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

BigInt inv_mod(const BigInt& a, const BigInt& p) {
    BigInt r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
        throw std::invalid_argument("fp: non-invertible element (composite modulus?)");
    return r;
}

std::uint64_t poly_seed(const UniPoly& f, const BigInt& p) {
    std::uint64_t s = hash_bigint(0xEDF0ULL, p);
    for (const auto& c : f.coeffs()) s = hash_bigint(s, c);
    return s;
}

}  // namespace

UniPoly reduce(const UniPoly& a, const BigInt& p) {
    std::vector<BigInt> c(a.coeffs());
    for (auto& x : c) x = mod_pos(x, p);
    return UniPoly(std::move(c));
}

UniPoly add(const UniPoly& a, const UniPoly& b, const BigInt& p) { return reduce(a + b, p); }
UniPoly sub(const UniPoly& a, const UniPoly& b, const BigInt& p) { return reduce(a - b, p); }
UniPoly mul(const UniPoly& a, const UniPoly& b, const BigInt& p) { return reduce(a * b, p); }

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b, const BigInt& p) {
    UniPoly r = reduce(a, p);
    UniPoly bb = reduce(b, p);
    if (bb.is_zero()) throw std::invalid_argument("fp::divmod: zero divisor");
    const int db = bb.degree();
    if (r.degree() < db) return {UniPoly{}, r};
    const BigInt linv = inv_mod(bb.leading(), p);
    std::vector<BigInt> q(static_cast<std::size_t>(r.degree() - db) + 1, BigInt(0));
    std::vector<BigInt> rc(r.coeffs());
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        BigInt top = mod_pos(rc[static_cast<std::size_t>(k + db)], p);
        if (top == 0) continue;
        BigInt qk = mod_pos(top * linv, p);
        q[static_cast<std::size_t>(k)] = qk;
        for (int j = 0; j <= db; ++j)
            rc[static_cast<std::size_t>(k + j)] =
                mod_pos(rc[static_cast<std::size_t>(k + j)] - qk * bb.coeff(j), p);
    }
    rc.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(q)), UniPoly(std::move(rc))};
}

UniPoly rem(const UniPoly& a, const UniPoly& b, const BigInt& p) { return divmod(a, b, p).second; }

UniPoly make_monic(const UniPoly& a, const BigInt& p) {
    UniPoly r = reduce(a, p);
    if (r.is_zero()) return r;
    if (r.leading() == 1) return r;
    const BigInt linv = inv_mod(r.leading(), p);
    std::vector<BigInt> c(r.coeffs());
    for (auto& x : c) x = mod_pos(x * linv, p);
    return UniPoly(std::move(c));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b, const BigInt& p) {
    UniPoly A = reduce(a, p), B = reduce(b, p);
    while (!B.is_zero()) {
        UniPoly R = rem(A, B, p);
        A = B;
        B = R;
    }
    return make_monic(A, p);
}

UniPoly powmod(const UniPoly& base, const BigInt& e, const UniPoly& f, const BigInt& p) {
    UniPoly result = UniPoly::constant(1);
    UniPoly b = rem(base, f, p);
    const std::size_t nbits = bit_length(e);
    for (std::size_t i = nbits; i-- > 0;) {
        result = rem(mul(result, result, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
            result = rem(mul(result, b, p), f, p);
    }
    return result;
}

XGcd xgcd(const UniPoly& a, const UniPoly& b, const BigInt& p) {
    UniPoly r0 = reduce(a, p), r1 = reduce(b, p);
    UniPoly s0 = UniPoly::constant(1), s1;
    UniPoly t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1, p);
        UniPoly s2 = sub(s0, mul(q, s1, p), p);
        UniPoly t2 = sub(t0, mul(q, t1, p), p);
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const BigInt linv = inv_mod(r0.leading(), p);
    UniPoly c = UniPoly::constant(mod_pos(linv, p));
    return {make_monic(r0, p), mul(s0, c, p), mul(t0, c, p)};
}

UniPoly symmetric(const UniPoly& a, const BigInt& modulus) {
    BigInt half = modulus / 2;
    std::vector<BigInt> c(a.coeffs());
    for (auto& x : c) {
        x = mod_pos(x, modulus);
        if (x > half) x -= modulus;
    }
    return UniPoly(std::move(c));
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f_in, const BigInt& p) {
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly f = make_monic(f_in, p);
    if (f.degree() <= 0) return out;
    // If f' == 0, f = g(x^p); in the prime field the p-th root just
    // divides exponents by p.
    UniPoly fp_ = reduce(f.derivative(), p);
    if (fp_.is_zero()) {
        unsigned long pl = mpz_get_ui(p.get_mpz_t());
        std::vector<BigInt> c;
        for (int i = 0; i <= f.degree(); i += static_cast<int>(pl)) c.push_back(f.coeff(i));
        auto sub_dec = squarefree_decomposition(UniPoly(std::move(c)), p);
        for (auto& [g, m] : sub_dec) out.emplace_back(g, m * static_cast<int>(pl));
        return out;
    }
    UniPoly c = gcd(f, fp_, p);
    UniPoly w = divmod(f, c, p).first;
    int i = 1;
    while (w.degree() > 0) {
        UniPoly y = gcd(w, c, p);
        UniPoly z = divmod(w, y, p).first;
        if (z.degree() > 0) out.emplace_back(z, i);
        c = divmod(c, y, p).first;
        w = y;
        ++i;
    }
    if (c.degree() > 0) {
        // remaining part is a p-th power
        unsigned long pl = mpz_get_ui(p.get_mpz_t());
        std::vector<BigInt> cc;
        for (int j = 0; j <= c.degree(); j += static_cast<int>(pl)) cc.push_back(c.coeff(j));
        auto sub_dec = squarefree_decomposition(UniPoly(std::move(cc)), p);
        for (auto& [g, m] : sub_dec) out.emplace_back(g, m * static_cast<int>(pl));
    }
    return out;
}

namespace {

/// Distinct-degree factorization of a monic squarefree f: list of
/// (product of irreducibles of degree d, d).
std::vector<std::pair<UniPoly, int>> ddf(const UniPoly& f, const BigInt& p) {
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly fstar = f;
    UniPoly h = rem(UniPoly::x(), fstar, p);
    int d = 0;
    while (fstar.degree() > 2 * (d + 1) - 1 && fstar.degree() > 0) {
        ++d;
        h = powmod(h, p, fstar, p);
        UniPoly g = gcd(sub(h, UniPoly::x(), p), fstar, p);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            fstar = divmod(fstar, g, p).first;
            h = rem(h, fstar, p);
        }
    }
    if (fstar.degree() > 0) out.emplace_back(fstar, fstar.degree());
    return out;
}

/// Random-looking polynomial of degree < n from a deterministic stream.
UniPoly pseudo_random_poly(std::uint64_t& seed, int n, const BigInt& p) {
    std::vector<BigInt> c(static_cast<std::size_t>(n));
    for (auto& x : c) {
        seed = splitmix64(seed);
        BigInt r(static_cast<unsigned long>(seed >> 8));
        BigInt rr;
        mpz_fdiv_r(rr.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        x = rr;
    }
    return UniPoly(std::move(c));
}

/// Equal-degree splitting (Cantor-Zassenhaus; trace construction for p=2)
/// of a monic squarefree product of degree-d irreducibles.
void edf(const UniPoly& f, int d, const BigInt& p, std::uint64_t seed, std::vector<UniPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const int n = f.degree();
    UniPoly g;
    while (true) {
        seed = splitmix64(seed);
        std::uint64_t local = seed;
        UniPoly a = pseudo_random_poly(local, n, p);
        if (a.degree() < 1) continue;
        if (p == 2) {
            UniPoly t = a;
            UniPoly acc = a;
            for (int i = 1; i < d; ++i) {
                t = rem(mul(t, t, p), f, p);
                acc = add(acc, t, p);
            }
            g = gcd(acc, f, p);
        } else {
            BigInt e = (pow_ui(p, static_cast<unsigned long>(d)) - 1) / 2;
            UniPoly s = powmod(a, e, f, p);
            g = gcd(sub(s, UniPoly::constant(1), p), f, p);
        }
        if (g.degree() > 0 && g.degree() < n) break;
    }
    edf(g, d, p, splitmix64(seed ^ 0x9e37ULL), out);
    edf(divmod(f, g, p).first, d, p, splitmix64(seed ^ 0x79b9ULL), out);
}

}  // namespace

std::vector<std::pair<UniPoly, int>> factor(const UniPoly& f_in, const BigInt& p) {
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly f = make_monic(f_in, p);
    if (f.degree() <= 0) return out;
    std::uint64_t seed = poly_seed(f, p);
    for (const auto& [sqf, mult] : squarefree_decomposition(f, p)) {
        for (const auto& [prod, d] : ddf(sqf, p)) {
            std::vector<UniPoly> irr;
            edf(prod, d, p, splitmix64(seed ^ static_cast<std::uint64_t>(d)), irr);
            std::sort(irr.begin(), irr.end(), [](const UniPoly& a, const UniPoly& b) {
                if (a.degree() != b.degree()) return a.degree() < b.degree();
                for (int i = a.degree(); i >= 0; --i)
                    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
                return false;
            });
            for (auto& g : irr) out.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i)
            if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
        return a.second < b.second;
    });
    return out;
}

std::vector<BigInt> roots(const UniPoly& f, const BigInt& p) {
    std::vector<BigInt> out;
    UniPoly g = reduce(f, p);
    if (g.is_zero()) throw std::invalid_argument("fp::roots: zero polynomial mod p");
    // roots are the degree-1 factors
    for (const auto& [fac, mult] : factor(g, p)) {
        if (fac.degree() == 1) {
            BigInt r;
            mpz_fdiv_r(r.get_mpz_t(), BigInt(-fac.coeff(0)).get_mpz_t(), p.get_mpz_t());
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace arbora::fp

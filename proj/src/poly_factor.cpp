#include "arbora/poly_factor.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "arbora/int_factor.hpp"
#include "arbora/modp.hpp"

namespace arbora {

UniPoly PolyFactorization::reassemble() const {
    UniPoly r = UniPoly::constant(content_unit);
    for (const auto& [f, e] : factors) r = r * f.pow(static_cast<unsigned>(e));
    for (const auto& [f, e] : unsplit) r = r * f.pow(static_cast<unsigned>(e));
    return r;
}

std::vector<std::pair<UniPoly, int>> PolyFactorization::all_parts() const {
    std::vector<std::pair<UniPoly, int>> out = factors;
    out.insert(out.end(), unsplit.begin(), unsplit.end());
    return out;
}

std::pair<UniPoly, BigInt> monicize(const UniPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("monicize: zero polynomial");
    const BigInt lc = g.leading();
    if (lc == 1) return {g, lc};
    const int d = g.degree();
    std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
    // lc^(d-1) g(x/lc): coefficient of x^i becomes c_i * lc^(d-1-i)
    for (int i = 0; i <= d; ++i)
        c[static_cast<std::size_t>(i)] =
            g.coeff(i) * pow_ui(lc, static_cast<unsigned long>(d - 1 - i >= 0 ? d - 1 - i : 0));
    // i = d gives c_d * lc^(-1); c_d = lc so the leading entry is lc^0 = 1 * ...
    c[static_cast<std::size_t>(d)] = 1;
    return {UniPoly(std::move(c)), lc};
}

namespace {

/// One linear Hensel step: given monic f = g*h (mod p^k) with Bezout
/// s*g + t*h = 1 (mod p), produce the unique update modulo p^(k+1).
void lift_step(const UniPoly& f, UniPoly& g, UniPoly& h, const UniPoly& s, const UniPoly& t,
               const BigInt& p, const BigInt& pk) {
    UniPoly e_full = f - g * h;
    if (e_full.is_zero()) return;
    std::vector<BigInt> ec;
    ec.reserve(static_cast<std::size_t>(e_full.degree()) + 1);
    for (int i = 0; i <= e_full.degree(); ++i) ec.push_back(divexact(e_full.coeff(i), pk));
    UniPoly e = fp::reduce(UniPoly(std::move(ec)), p);
    if (e.is_zero()) return;
    auto [q, a] = fp::divmod(fp::mul(t, e, p), g, p);
    UniPoly b = fp::add(fp::mul(s, e, p), fp::mul(q, h, p), p);
    g = g + a * pk;
    h = h + b * pk;
}

/// Lift monic f = prod(modular) (mod p) to modulus p^K (tree recursion).
std::vector<UniPoly> hensel_lift(const UniPoly& f, const std::vector<UniPoly>& modular,
                                 const BigInt& p, unsigned K) {
    BigInt pK = pow_ui(p, K);
    if (modular.size() == 1) return {fp::reduce(f, pK)};
    const std::size_t half = modular.size() / 2;
    UniPoly g = UniPoly::constant(1), h = UniPoly::constant(1);
    for (std::size_t i = 0; i < half; ++i) g = fp::mul(g, modular[i], p);
    for (std::size_t i = half; i < modular.size(); ++i) h = fp::mul(h, modular[i], p);
    auto bez = fp::xgcd(g, h, p);
    assert(bez.g.degree() == 0);
    BigInt pk = p;
    for (unsigned k = 1; k < K; ++k) {
        lift_step(f, g, h, bez.s, bez.t, p, pk);
        pk *= p;
    }
    std::vector<UniPoly> left(modular.begin(), modular.begin() + static_cast<long>(half));
    std::vector<UniPoly> right(modular.begin() + static_cast<long>(half), modular.end());
    auto out = hensel_lift(g, left, p, K);
    auto rhs = hensel_lift(h, right, p, K);
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
}

BigInt l2_norm_upper(const UniPoly& f) {
    BigInt s = 0;
    for (const auto& c : f.coeffs()) s += c * c;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    return r + 1;
}

/// Factor a primitive squarefree polynomial with positive leading
/// coefficient; nullopt if the recombination budget ran out.
std::optional<std::vector<UniPoly>> factor_squarefree(const UniPoly& g, const PolyFactorBudget& budget) {
    if (g.degree() <= 1) return std::vector<UniPoly>{g};
    auto [G, lc] = monicize(g);
    const int d = G.degree();

    // pick the modular prime with the fewest factors among the first few
    // good ones (squarefree reduction)
    static const unsigned long candidate_primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                                     37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
    BigInt best_p = 0;
    std::vector<std::pair<UniPoly, int>> best_factors;
    int good_seen = 0;
    for (unsigned long pl : candidate_primes) {
        BigInt p(pl);
        UniPoly Gp = fp::reduce(G, p);
        if (Gp.degree() != d) continue;
        if (fp::gcd(Gp, fp::reduce(G.derivative(), p), p).degree() != 0) continue;
        auto fac = fp::factor(Gp, p);
        if (best_p == 0 || fac.size() < best_factors.size()) {
            best_p = p;
            best_factors = fac;
        }
        if (++good_seen >= 3 || best_factors.size() == 1) break;
    }
    if (best_p == 0) {
        // squarefree inputs always have good primes among larger ones
        for (unsigned long pl = 79;; pl += 2) {
            BigInt p(pl);
            bool prob;
            if (!is_prime(p, &prob)) continue;
            UniPoly Gp = fp::reduce(G, p);
            if (Gp.degree() != d) continue;
            if (fp::gcd(Gp, fp::reduce(G.derivative(), p), p).degree() != 0) continue;
            best_p = p;
            best_factors = fp::factor(Gp, p);
            break;
        }
    }
    if (best_factors.size() == 1) return std::vector<UniPoly>{g};

    // modulus large enough to recover any monic divisor of G
    BigInt bound = (BigInt(1) << static_cast<unsigned>(d)) * l2_norm_upper(G);
    unsigned K = 1;
    BigInt pK = best_p;
    while (pK <= 2 * bound) {
        pK *= best_p;
        ++K;
    }
    std::vector<UniPoly> modular;
    modular.reserve(best_factors.size());
    for (auto& [f, e] : best_factors) modular.push_back(f);
    std::vector<UniPoly> lifted = hensel_lift(fp::reduce(G, pK), modular, best_p, K);

    // subset recombination
    std::vector<UniPoly> out_monic;
    UniPoly remaining = G;
    std::vector<std::size_t> live(lifted.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
    std::size_t checks = 0;
    std::size_t subset_size = 1;
    while (2 * subset_size <= live.size()) {
        std::vector<std::size_t> idx(subset_size);
        for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
        bool found = false;
        while (true) {
            if (++checks > budget.max_subset_checks) return std::nullopt;
            UniPoly cand = UniPoly::constant(1);
            for (std::size_t i : idx) cand = fp::mul(cand, lifted[live[i]], pK);
            cand = fp::symmetric(cand, pK);
            auto quo = remaining.exact_divide(cand);
            if (quo) {
                out_monic.push_back(cand);
                remaining = *quo;
                std::vector<std::size_t> next_live;
                for (std::size_t i = 0, j = 0; i < live.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    next_live.push_back(live[i]);
                }
                live = next_live;
                found = true;
                break;
            }
            // next combination
            long pos = static_cast<long>(subset_size) - 1;
            while (pos >= 0 &&
                   idx[static_cast<std::size_t>(pos)] ==
                       live.size() - subset_size + static_cast<std::size_t>(pos))
                --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < subset_size; ++i)
                idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    if (remaining.degree() > 0) out_monic.push_back(remaining);

    // undo the monicization
    std::vector<UniPoly> out;
    out.reserve(out_monic.size());
    for (const auto& H : out_monic) out.push_back(H.scaled_arg(lc).normalized());
    return out;
}

}  // namespace

PolyFactorization factor_poly(const UniPoly& p, const PolyFactorBudget& budget) {
    if (p.is_zero()) throw std::invalid_argument("factor_poly: zero polynomial");
    PolyFactorization out;
    BigInt c = p.content();
    if (sgn(p.leading()) < 0) c = -c;
    out.content_unit = c;
    UniPoly f = p.normalized();
    if (f.degree() <= 0) return out;
    for (const auto& [g, mult] : squarefree_decomposition(f)) {
        auto parts = factor_squarefree(g, budget);
        if (!parts) {
            out.unsplit.emplace_back(g, mult);
            out.complete = false;
            continue;
        }
        for (const auto& h : *parts) out.factors.emplace_back(h, mult);
    }
    auto cmp = [](const std::pair<UniPoly, int>& a, const std::pair<UniPoly, int>& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i)
            if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
        return a.second < b.second;
    };
    std::sort(out.factors.begin(), out.factors.end(), cmp);
    std::sort(out.unsplit.begin(), out.unsplit.end(), cmp);
    return out;
}

DegreePatternCertificate degree_pattern_check(const UniPoly& f, const std::vector<BigInt>& primes) {
    DegreePatternCertificate cert;
    const int d = f.degree();
    std::set<int> possible;
    for (int m = 1; m < d; ++m) possible.insert(m);
    for (const BigInt& p : primes) {
        UniPoly fp_ = fp::reduce(f, p);
        if (fp_.degree() != d) continue;
        if (fp::gcd(fp_, fp::reduce(f.derivative(), p), p).degree() != 0) continue;
        std::vector<int> degrees;
        for (const auto& [g, e] : fp::factor(fp_, p)) degrees.push_back(g.degree());
        std::sort(degrees.begin(), degrees.end());
        // subset sums achievable from this pattern
        std::set<int> sums{0};
        for (int k : degrees) {
            std::set<int> next = sums;
            for (int s : sums) next.insert(s + k);
            sums = next;
        }
        for (auto it = possible.begin(); it != possible.end();) {
            if (!sums.count(*it))
                it = possible.erase(it);
            else
                ++it;
        }
        cert.patterns.emplace_back(p, degrees);
        if (possible.empty()) break;
    }
    cert.certifies_irreducible = !cert.patterns.empty() && possible.empty() && d >= 1;
    return cert;
}

}  // namespace arbora

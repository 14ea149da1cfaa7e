#include "arbora/int_factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arbora {

BigInt IntFactorization::reassemble() const {
    BigInt r = cofactor;
    for (const auto& [p, e] : factors) r *= pow_ui(p, static_cast<unsigned long>(e));
    return r;
}

std::vector<BigInt> IntFactorization::prime_support() const {
    std::vector<BigInt> out;
    out.reserve(factors.size());
    for (const auto& [p, e] : factors) out.push_back(p);
    return out;
}

namespace {

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned long s) {
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Deterministic range for the first 12 prime witnesses (2..37).
const char* kDeterministicBound = "3317044064679887385961981";

}  // namespace

bool is_prime(const BigInt& n, bool* probable) {
    if (probable) *probable = false;
    if (n < 2) return false;
    static const unsigned long small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long p : small_primes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    BigInt d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (unsigned long p : small_primes)
        if (!miller_rabin_witness(n, BigInt(p), d, s)) return false;
    static const BigInt det_bound(kDeterministicBound);
    if (n < det_bound) return true;
    // Large input: 40 witnesses derived deterministically from n.
    std::uint64_t seed = hash_bigint(0x4d52ULL, n);
    for (int i = 0; i < 40; ++i) {
        seed = splitmix64(seed);
        BigInt a = 2 + BigInt(static_cast<unsigned long>(seed % 0xffffffffULL)) % (n - 3);
        if (!miller_rabin_witness(n, a, d, s)) return false;
    }
    if (probable) *probable = true;
    return true;
}

namespace {

/// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial
/// factor of odd composite n, or 0 if the iteration budget ran out.
BigInt brent_rho(const BigInt& n, unsigned long c, unsigned long max_iters) {
    BigInt y = 2, x = 0, ys = 0, q = 1, g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    unsigned long iters = 0;
    while (g == 1 && iters < max_iters) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
        unsigned long k = 0;
        while (k < r && g == 1 && iters < max_iters) {
            ys = y;
            const unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                BigInt diff = x - y;
                if (diff == 0) diff = 1;
                q = (q * abs(diff)) % n;
                ++iters;
            }
            g = gcd(q, n);
            k += m;
        }
        r <<= 1;
    }
    if (g == n) {
        // backtrack to recover the factor lost inside the batch
        do {
            ys = (ys * ys + c) % n;
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    if (g == 1 || g == n) return 0;
    return g;
}

void add_factor(std::map<BigInt, int>& acc, const BigInt& p, int e) { acc[p] += e; }

/// Split m (no factors below the trial bound) into primes where possible.
void split_rest(const BigInt& m, const FactorBudget& budget, std::map<BigInt, int>& acc,
                BigInt& cofactor, bool& probable_any) {
    if (m == 1) return;
    bool prob = false;
    if (is_prime(m, &prob)) {
        probable_any = probable_any || prob;
        add_factor(acc, m, 1);
        return;
    }
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        BigInt r;
        mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
        std::map<BigInt, int> sub;
        BigInt subcof = 1;
        split_rest(r, budget, sub, subcof, probable_any);
        if (subcof == 1) {
            for (const auto& [p, e] : sub) add_factor(acc, p, 2 * e);
            return;
        }
    }
    BigInt d = 0;
    for (unsigned round = 0; round < budget.rho_rounds && d == 0; ++round) {
        d = brent_rho(m, 1 + round, budget.rho_iterations);
    }
    if (d == 0) {
        cofactor *= m;
        return;
    }
    split_rest(d, budget, acc, cofactor, probable_any);
    split_rest(divexact(m, d), budget, acc, cofactor, probable_any);
}

}  // namespace

IntFactorization factor_integer(const BigInt& n, const FactorBudget& budget) {
    if (n == 0) throw std::invalid_argument("factor_integer: n must be nonzero");
    IntFactorization out;
    out.sign = sgn(n) < 0 ? -1 : 1;
    BigInt m = abs(n);
    std::map<BigInt, int> acc;
    if (m > 1) {
        // trial division by 2 then odd candidates up to the bound
        int e2 = 0;
        while (mpz_even_p(m.get_mpz_t())) {
            m >>= 1;
            ++e2;
        }
        if (e2) add_factor(acc, 2, e2);
        unsigned long p = 3;
        while (m > 1 && p <= budget.trial_division_bound) {
            BigInt pp(p);
            if (pp * pp > m) {
                add_factor(acc, m, 1);
                m = 1;
                break;
            }
            int e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            }
            if (e) add_factor(acc, pp, e);
            p += 2;
        }
        bool probable_any = false;
        if (m > 1) split_rest(m, budget, acc, out.cofactor, probable_any);
        out.probable_only = probable_any;
    }
    out.factors.assign(acc.begin(), acc.end());
    out.complete = (out.cofactor == 1);
    return out;
}

}  // namespace arbora

#ifndef ARBORA_NUMERIC_HPP
#define ARBORA_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace arbora {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt divexact(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Number of bits in |n|; 0 for n = 0.
inline std::size_t bit_length(const BigInt& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Exact p-adic valuation of a nonzero integer.
inline long vp_int(const BigInt& n, const BigInt& p) {
    BigInt m = abs(n);
    long v = 0;
    BigInt q, r;
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

/// Strip all factors of p from |n|; returns the p-free part (positive).
inline BigInt remove_prime(const BigInt& n, const BigInt& p) {
    BigInt m = abs(n);
    BigInt q, r;
    while (m != 0) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        m = q;
    }
    return m;
}

/// Deterministic 64-bit mixer, used to seed reproducible pseudo-random
/// choices (polynomial splitting) from the input data itself.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_bigint(std::uint64_t seed, const BigInt& n) {
    seed = splitmix64(seed ^ static_cast<std::uint64_t>(mpz_fdiv_ui(n.get_mpz_t(), 0xfffffffbUL)));
    seed = splitmix64(seed ^ static_cast<std::uint64_t>(bit_length(n)));
    if (sgn(n) < 0) seed = splitmix64(seed ^ 0x5a5a5a5aULL);
    return seed;
}

}  // namespace arbora

#endif

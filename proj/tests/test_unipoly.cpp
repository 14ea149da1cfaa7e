#include "doctest.h"

#include <cstdint>

#include "arbora/unipoly.hpp"

using namespace arbora;

namespace {

UniPoly P(const std::string& s) { return UniPoly::parse(s); }

// small deterministic generator for randomized property checks
struct Rng {
    std::uint64_t state = 0x243f6a8885a308d3ULL;
    std::uint64_t next() { return state = splitmix64(state); }
    long next_coeff(long bound) {
        return static_cast<long>(next() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    }
    UniPoly next_poly(int max_deg, long coeff_bound) {
        int d = static_cast<int>(next() % static_cast<std::uint64_t>(max_deg + 1));
        std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
        for (auto& a : c) a = next_coeff(coeff_bound);
        UniPoly p{std::move(c)};
        return p.is_zero() ? UniPoly::constant(1) : p;
    }
};

}  // namespace

TEST_CASE("parse and canonical printing") {
    CHECK(P("x^4+2*x^2+2").to_string() == "x^4+2*x^2+2");
    CHECK(P("x^2 - 3*x").to_string() == "x^2-3*x");
    CHECK(P("-x").to_string() == "-x");
    CHECK(P("5").to_string() == "5");
    CHECK(UniPoly::zero().to_string() == "0");
    CHECK(P("x^4 + 2x^2 + 2") == P("x^4+2*x^2+2"));  // implicit '*'
    char var = 0;
    CHECK(UniPoly::parse_any_var("z^2+1", &var) == P("x^2+1"));
    CHECK(var == 'z');
    CHECK_THROWS(UniPoly::parse("x+y"));
}

TEST_CASE("resultant fixtures") {
    CHECK(resultant(P("x"), P("x-1")) == -1);
    CHECK(resultant(P("x^2+1"), P("1")) == 1);
    CHECK(resultant(P("x^2+1"), P("x^2-1")) == 4);  // prod of (a^2-1) over roots of x^2+1
    CHECK_THROWS_AS(resultant(UniPoly::zero(), P("x")), std::invalid_argument);
    CHECK(resultant(P("x^2+1"), P("x^2+1")) == 0);
}

TEST_CASE("resultant symmetry and multiplicativity") {
    Rng rng;
    for (int i = 0; i < 60; ++i) {
        UniPoly p = rng.next_poly(5, 6);
        UniPoly q = rng.next_poly(5, 6);
        BigInt lhs = resultant(p, q);
        BigInt rhs = resultant(q, p);
        if ((p.degree() * q.degree()) % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
        UniPoly r = rng.next_poly(3, 4);
        CHECK(resultant(p, q * r) == resultant(p, q) * resultant(p, r));
    }
}

TEST_CASE("subresultant PRS equals Sylvester-Bareiss on 200 random inputs") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        UniPoly p = rng.next_poly(8, 10);
        UniPoly q = rng.next_poly(8, 10);
        CHECK(resultant(p, q) == resultant_sylvester(p, q));
    }
}

TEST_CASE("discriminant fixtures") {
    CHECK(discriminant(P("x^2+1")) == -4);
    CHECK(discriminant(P("x^2-3*x")) == 9);   // preimage polynomial of z(z-3) at 0
    CHECK(discriminant(P("x^4+2*x^2+2")) == 512);
    CHECK_THROWS_AS(discriminant(P("7")), std::invalid_argument);
}

TEST_CASE("discriminant vanishes exactly on non-squarefree polynomials") {
    Rng rng;
    for (int i = 0; i < 50; ++i) {
        UniPoly p = rng.next_poly(6, 5);
        if (p.degree() < 1) continue;
        bool sf = poly_gcd(p, p.derivative()).degree() == 0;
        CHECK((discriminant(p) != 0) == sf);
    }
    CHECK(discriminant(P("x^2-2*x+1")) == 0);
}

TEST_CASE("squarefree part") {
    UniPoly p = P("x-1") * P("x-1") * P("x+2");
    CHECK(squarefree_part(p) == (P("x-1") * P("x+2")).normalized());
    CHECK(squarefree_part(P("x^2+1")) == P("x^2+1"));
    UniPoly q = P("4*x^2-4*x-1").pow(4);
    CHECK(squarefree_part(q) == P("4*x^2-4*x-1"));
}

TEST_CASE("squarefree decomposition reassembles") {
    Rng rng;
    for (int i = 0; i < 30; ++i) {
        UniPoly a = rng.next_poly(3, 3);
        UniPoly b = rng.next_poly(2, 3);
        UniPoly p = a * a * b;
        if (p.degree() < 1) continue;
        auto dec = squarefree_decomposition(p);
        UniPoly prod = UniPoly::constant(1);
        for (const auto& [g, m] : dec) prod = prod * g.pow(static_cast<unsigned>(m));
        CHECK(prod.normalized() == p.normalized());
    }
}

TEST_CASE("exact division and pseudo remainder") {
    UniPoly p = P("x^2-1");
    CHECK(*p.exact_divide(P("x-1")) == P("x+1"));
    CHECK(!P("x^2+1").exact_divide(P("x-1")).has_value());
    CHECK(!P("2*x^2").exact_divide(P("3*x")).has_value());
    CHECK(P("x^3").pseudo_rem(P("x-2")) == UniPoly::constant(8));
}

TEST_CASE("evaluation") {
    UniPoly p = P("x^4+2*x^2+2");
    CHECK(p.evaluate(BigInt(1)) == 5);
    CHECK(p.evaluate(BigRat(1, 2)) == BigRat(41, 16));
    CHECK(p.evaluate_homogeneous(1, 2) == 41);
    CHECK(P("x^2-2").compose(P("x^2-2")) == P("x^4-4*x^2+2"));
}

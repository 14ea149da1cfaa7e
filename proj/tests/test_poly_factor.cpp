#include "doctest.h"

#include "arbora/modp.hpp"
#include "arbora/poly_factor.hpp"

using namespace arbora;

namespace {
UniPoly P(const std::string& s) { return UniPoly::parse(s); }
}

TEST_CASE("mod-p factorization basics") {
    BigInt p = 5;
    auto f = fp::factor(P("x^2+1"), p);  // (x+2)(x+3) mod 5
    REQUIRE(f.size() == 2);
    CHECK(f[0].first.degree() == 1);
    CHECK(f[1].first.degree() == 1);
    UniPoly prod = fp::mul(f[0].first, f[1].first, p);
    CHECK(prod == fp::reduce(P("x^2+1"), p));

    auto g = fp::factor(P("x^2+x+1"), BigInt(2));  // irreducible mod 2
    REQUIRE(g.size() == 1);
    CHECK(g[0].first.degree() == 2);

    auto h = fp::factor(P("x^4+x^2"), BigInt(2));  // x^2 (x+1)^2 mod 2
    BigInt check = 1;
    UniPoly reprod = UniPoly::constant(1);
    for (const auto& [fac, e] : h) reprod = fp::mul(reprod, fac.pow(static_cast<unsigned>(e)), BigInt(2));
    CHECK(reprod == fp::reduce(P("x^4+x^2"), BigInt(2)));
    (void)check;
}

TEST_CASE("mod-p roots") {
    auto r = fp::roots(P("x^2-1"), BigInt(7));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == 1);
    CHECK(r[1] == 6);
}

TEST_CASE("factor_poly fixtures") {
    auto f = factor_poly(P("x^2-3*x"));
    REQUIRE(f.factors.size() == 2);  // {x, x-3}: level-1 preimages of 0 under z(z-3)
    CHECK(f.factors[0].first == P("x-3"));
    CHECK(f.factors[1].first == P("x"));
    CHECK(f.complete);

    auto g = factor_poly(P("x^4+2*x^2+2"));  // Eisenstein at 2
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].first == P("x^4+2*x^2+2"));
    CHECK(g.factors[0].second == 1);

    auto h = factor_poly(P("x^4-2*x^2"));
    REQUIRE(h.factors.size() == 2);
    CHECK(h.factors[0].first == P("x"));
    CHECK(h.factors[0].second == 2);
    CHECK(h.factors[1].first == P("x^2-2"));
}

TEST_CASE("factor_poly reassembles exactly") {
    std::vector<UniPoly> cases = {
        P("6*x^4-6"),
        P("x^6-1"),
        P("2*x^5+4*x^4+2*x^3"),
        P("x^8+4*x^6+8*x^4+8*x^2+5"),  // level-3 preimage polynomial of z^2+1 at 0
        P("-3*x^3+3*x"),
        P("x^2+x+1") * P("x^3-2") * P("x^3-2"),
    };
    for (const auto& p : cases) {
        auto f = factor_poly(p);
        CHECK(f.complete);
        CHECK(f.reassemble() == p);
        for (const auto& [g, e] : f.factors) {
            CHECK(g.leading() > 0);
            CHECK(g.content() == 1);
        }
    }
}

TEST_CASE("irreducibility cross-check via degree patterns") {
    std::vector<BigInt> primes = {3, 5, 7, 11, 13, 17, 19, 23};
    auto cert = degree_pattern_check(P("x^4+2*x^2+2"), primes);
    CHECK(cert.certifies_irreducible);
    auto cert2 = degree_pattern_check(P("x^2+x+1"), primes);
    CHECK(cert2.certifies_irreducible);
    // reducible polynomials can never be certified
    auto cert3 = degree_pattern_check(P("x^2-1"), primes);
    CHECK(!cert3.certifies_irreducible);
}

TEST_CASE("non-monic factorization") {
    UniPoly p = P("2*x+1") * P("3*x-1") * P("x^2+x+1");
    auto f = factor_poly(p);
    CHECK(f.complete);
    CHECK(f.reassemble() == p);
    CHECK(f.factors.size() == 3);
}

TEST_CASE("recombination budget degrades to unsplit squarefree parts") {
    // product of four linear factors needs subset recombination mod p
    UniPoly p = P("x-1") * P("x-2") * P("x-3") * P("x-5");
    PolyFactorBudget tiny;
    tiny.max_subset_checks = 1;
    auto f = factor_poly(p, tiny);
    CHECK(!f.complete);
    REQUIRE(f.unsplit.size() == 1);
    CHECK(f.reassemble() == p);
}

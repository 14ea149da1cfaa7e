#include "doctest.h"

#include "arbora/errors.hpp"
#include "arbora/rational_map.hpp"

using namespace arbora;

namespace {
RationalMapP1 M(const std::string& s) { return RationalMapP1::parse(s); }
ProjPointQ Pt(const std::string& s) { return ProjPointQ::parse(s); }
}

TEST_CASE("point normalization and parsing") {
    CHECK(ProjPointQ(2, 4) == ProjPointQ(1, 2));
    CHECK(ProjPointQ(-3, -6) == ProjPointQ(1, 2));
    CHECK(ProjPointQ(5, 0) == ProjPointQ::infinity());
    CHECK(Pt("inf").is_infinity());
    CHECK(Pt("-2/7") == ProjPointQ(-2, 7));
    CHECK(Pt("3") == ProjPointQ(3, 1));
    CHECK(Pt("4/2").to_string() == "2");
    CHECK_THROWS(ProjPointQ(0, 0));
}

TEST_CASE("map normalization") {
    // content removal
    CHECK(M("[2*x^2+2*y^2 : 2*y^2]") == M("z^2+1"));
    // common polynomial factor y
    CHECK(M("[x^2*y : y^3]") == M("z^2"));
    CHECK_THROWS_AS(M("[x^2 : x^2]"), std::invalid_argument);
    CHECK_THROWS_AS(M("z+3"), std::invalid_argument);  // degree too small
    CHECK(M("(z^2-1)/(z+3)").degree() == 2);
    CHECK(M("z^2+1").to_string() == "[x^2+y^2 : y^2]");
}

TEST_CASE("evaluation") {
    auto f = M("z^2+1");
    CHECK(f.evaluate(Pt("0")) == Pt("1"));
    CHECK(f.evaluate(Pt("1")) == Pt("2"));
    CHECK(f.evaluate(Pt("2")) == Pt("5"));
    CHECK(M("z^2").evaluate(Pt("inf")) == Pt("inf"));
    CHECK(M("z^2-2").evaluate(Pt("0")) == Pt("-2"));
    CHECK(M("(z^2-1)/(z+3)").evaluate(Pt("1")) == Pt("0"));
    CHECK(M("(z^2-1)/(z+3)").evaluate(Pt("-3")) == Pt("inf"));
}

TEST_CASE("iterate_forms composition and budget") {
    auto f = M("z^2+1");
    auto [F2, G2] = f.iterate_forms(2);
    CHECK(F2.dehomogenize() == UniPoly::parse("x^4+2*x^2+2"));
    CHECK(G2.dehomogenize() == UniPoly::parse("1"));
    CHECK(G2.degree() == 4);

    auto [F3, G3] = M("z^2").iterate_forms(3);
    CHECK(F3.dehomogenize() == UniPoly::parse("x^8"));
    CHECK(G3.y_valuation() == 8);

    auto [H2, K2] = M("z^2-2").iterate_forms(2);
    CHECK(H2.dehomogenize() == UniPoly::parse("x^4-4*x^2+2"));

    CHECK_THROWS_AS(f.iterate_forms(13), budget_error);
}

TEST_CASE("iterate_map") {
    CHECK(M("z^2").iterate_map(2) == M("z^4"));
    CHECK(M("z^2-2").iterate_map(2) == M("z^4-4*z^2+2"));
    auto f = M("(z^2-1)/(z+3)");
    CHECK(f.iterate_map(1) == f);
    // evaluation of the iterate agrees with iterated evaluation
    for (const char* pt : {"0", "1", "-1", "2/3", "7"}) {
        CHECK(f.iterate_map(2).evaluate(Pt(pt)) == f.evaluate(f.evaluate(Pt(pt))));
    }
}

TEST_CASE("critical wronskian") {
    auto w = M("z^2").critical_wronskian();
    CHECK(w.W.degree() == 2);
    CHECK(w.content == 4);
    CHECK(w.infinity_critical);  // W = 4xy vanishes at [1:0]
    CHECK(w.W.dehomogenize() == UniPoly::parse("4*x"));

    auto w2 = M("z^2+1").critical_wronskian();
    CHECK(w2.W.dehomogenize() == UniPoly::parse("4*x"));

    // degree count 2d-2 for a degree-3 map
    auto w3 = M("(z^3-1)/(z+2)").critical_wronskian();
    CHECK(w3.W.degree() == 4);
}

TEST_CASE("reduction bad primes") {
    auto b = M("z^2").reduction_bad_primes();
    CHECK(b.bad_reduction.empty());  // Res(x^2, y^2) = 1
    REQUIRE(b.inseparable_reduction.size() == 1);
    CHECK(b.inseparable_reduction[0] == 2);  // content(4xy) = 4

    auto b2 = M("z^2+1").reduction_bad_primes();
    CHECK(b2.bad_reduction.empty());
    CHECK(b2.inseparable_reduction == std::vector<BigInt>{2});

    // z(z-3): W = 4xy - 6y^2, content 2
    auto b3 = M("z^2-3*z").reduction_bad_primes();
    CHECK(b3.bad_reduction.empty());
    CHECK(b3.inseparable_reduction == std::vector<BigInt>{2});
}

TEST_CASE("iterate_map commutes with evaluation on random maps") {
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
    auto next = [&]() { return seed = splitmix64(seed); };
    int done = 0;
    while (done < 50) {
        const int d = 2 + static_cast<int>(next() % 2);  // degree 2 or 3
        std::vector<BigInt> fc(static_cast<std::size_t>(d) + 1), gc(fc.size());
        for (auto& c : fc) c = static_cast<long>(next() % 7) - 3;
        for (auto& c : gc) c = static_cast<long>(next() % 7) - 3;
        RationalMapP1* map = nullptr;
        RationalMapP1 holder = RationalMapP1::parse("z^2");
        try {
            holder = RationalMapP1::normalize(BinForm(fc), BinForm(gc));
            map = &holder;
        } catch (const std::invalid_argument&) {
            continue;  // degenerate draw
        }
        const int k = 1 + static_cast<int>(next() % 3);
        ProjPointQ P(static_cast<long>(next() % 11) - 5, static_cast<long>(next() % 5) + 1);
        RationalMapP1 it = map->iterate_map(k, 1u << 20);
        CHECK(it.evaluate(P) == map->evaluate_n(P, k));
        ++done;
    }
}

TEST_CASE("resultant support of iterates stays inside the level-1 support") {
    for (const char* s : {"z^2+1", "z^2-2", "(z^2-1)/(z+3)", "(2*z^2+1)/(z^2-3)"}) {
        auto f = M(s);
        BigInt r1 = abs(f.resultant());
        for (int n = 2; n <= 4; ++n) {
            auto [Fn, Gn] = f.iterate_forms(n);
            BigInt rn = abs(form_resultant(Fn, Gn));
            // strip every prime of r1 from rn; nothing may remain
            if (r1 > 1) {
                BigInt m = rn;
                for (const auto& [p, e] : factor_integer(r1).factors) m = remove_prime(m, p);
                CHECK(m == 1);
            } else {
                CHECK(rn == 1);
            }
        }
    }
}

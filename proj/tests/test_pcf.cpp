#include "doctest.h"

#include "arbora/pcf.hpp"

using namespace arbora;

namespace {
RationalMapP1 M(const std::string& s) { return RationalMapP1::parse(s); }
UniPoly P(const std::string& s) { return UniPoly::parse(s); }
SqfDivisor Div(const std::string& s, bool inf = false) { return SqfDivisor{P(s).normalized(), inf}; }
}

TEST_CASE("forward images") {
    CHECK(forward_image_poly(M("z^2"), Div("x-2")) == Div("x-4"));
    CHECK(forward_image_poly(M("z^2+1"), Div("x")) == Div("x-1"));
    CHECK(forward_image_poly(M("z^2-2"), Div("x^2-2")) == Div("x"));
    // infinity handling: poles map to infinity, infinity follows the map
    auto img = forward_image_poly(M("(z^2-1)/(z+3)"), Div("x+3"));
    CHECK(img.at_infinity);
    CHECK(img.poly.degree() <= 0);
    auto img2 = forward_image_poly(M("z^2"), SqfDivisor{UniPoly::constant(1), true});
    CHECK(img2.at_infinity);
    // for (z^2+y^2-ish maps with finite image of inf): [F(1,0):G(1,0)]
    auto img3 = forward_image_poly(M("(z^2-1)/(z^2+3)"), SqfDivisor{UniPoly::constant(1), true});
    CHECK(!img3.at_infinity);
    CHECK(img3.poly == P("x-1"));  // phi(inf) = 1
}

TEST_CASE("critical divisors") {
    SqfDivisor c = critical_divisor(M("z^2-2"));
    CHECK(c.poly == P("x"));
    CHECK(c.at_infinity);
    SqfDivisor v = critical_value_divisor(M("z^2-2"));
    CHECK(v.poly == P("x+2"));
    CHECK(v.at_infinity);
}

TEST_CASE("divisor algebra") {
    SqfDivisor a = Div("x^2-2");
    SqfDivisor b = Div("x");
    SqfDivisor m = a.merged(b);
    CHECK(m.poly == P("x^3-2*x"));
    CHECK(a.divides(m));
    CHECK(b.divides(m));
    CHECK(!m.divides(a));
    SqfDivisor inf = SqfDivisor{UniPoly::constant(1), true};
    CHECK(!inf.divides(a));
    CHECK(inf.divides(a.merged(inf)));
}

TEST_CASE("pcf fixtures: power maps and the quadratic family") {
    for (const char* s : {"z^2", "z^3", "z^4", "z^5"}) {
        PCFVerdict v = pcf_check(M(s));
        CHECK(v.is_pcf());
        CHECK(v.postcritical.poly == P("x"));
        CHECK(v.postcritical.at_infinity);
        CHECK(v.stabilized_at == 1);
    }
    PCFVerdict z2 = pcf_check(M("z^2"));
    CHECK(z2.stabilized_at == 1);

    PCFVerdict m1 = pcf_check(M("z^2-1"));
    CHECK(m1.is_pcf());
    CHECK(m1.postcritical.poly == P("x^2+x"));  // {0, -1}
    CHECK(m1.postcritical.at_infinity);

    PCFVerdict m2 = pcf_check(M("z^2-2"));
    CHECK(m2.is_pcf());
    CHECK(m2.postcritical.poly == P("x^2-4"));  // {-2, 2}
    CHECK(m2.postcritical.at_infinity);
    CHECK(m2.stabilized_at == 2);

    for (const char* s : {"z^2+1", "z^2+2", "z^2+3"}) {
        PCFVerdict v = pcf_check(M(s));
        CHECK(v.status == PCFVerdict::Status::NonPCF);
        CHECK(v.witness_factor.degree() >= 1);
    }
    // the z^2+1 witness is the orbit value 26 of the critical point 0
    PCFVerdict w = pcf_check(M("z^2+1"));
    CHECK(w.witness_factor == P("x-26"));
}

TEST_CASE("pcf closure certificate is machine-checkable") {
    for (const char* s : {"z^2", "z^2-1", "z^2-2"}) {
        RationalMapP1 f = M(s);
        PCFVerdict v = pcf_check(f);
        REQUIRE(v.is_pcf());
        SqfDivisor img = forward_image_poly(f, v.postcritical);
        CHECK(img.divides(v.postcritical));
        SqfDivisor crit_values = critical_value_divisor(f);
        CHECK(crit_values.divides(v.postcritical));
    }
}

TEST_CASE("preperiodic rational points respect the height bound") {
    // exhaustive search over multiplicative height <= 20: every point that
    // provably cycles within 50 steps must sit below B(phi)
    for (const char* s : {"z^2+1", "z^2-1", "z^2-3*z", "(z^2-1)/(z+3)"}) {
        RationalMapP1 f = M(s);
        HeightBound bound(f);
        int preperiodic_found = 0;
        for (long a = -20; a <= 20; ++a) {
            for (long b = 0; b <= 20; ++b) {
                if (a == 0 && b == 0) continue;
                if (gcd(BigInt(a), BigInt(b)) != 1) continue;
                ProjPointQ pt(a, b);
                CycleInfo cyc = detect_cycle(f, pt, 50, &bound);
                if (cyc.cycles) {
                    ++preperiodic_found;
                    CHECK(bound.rational_height_within(pt));
                }
            }
        }
        CHECK(preperiodic_found > 0);
    }
}

TEST_CASE("exceptionality") {
    auto e1 = is_exceptional(M("z^2"), ProjPointQ(0, 1));
    CHECK(e1.exceptional);
    CHECK(e1.backward_support.poly == P("x"));
    CHECK(!e1.backward_support.at_infinity);

    // infinity under any polynomial map
    auto e2 = is_exceptional(M("z^3-7*z+1"), ProjPointQ::infinity());
    CHECK(e2.exceptional);

    auto e3 = is_exceptional(M("z^2+1"), ProjPointQ(0, 1));
    CHECK(!e3.exceptional);
    CHECK(e3.backward_support.point_count() >= 3);

    // 1 is not exceptional for z^2 (preimages -1, i, -i)
    auto e4 = is_exceptional(M("z^2"), ProjPointQ(1, 1));
    CHECK(!e4.exceptional);
}

TEST_CASE("cycle detection") {
    CycleInfo c = detect_cycle(M("z^2-1"), ProjPointQ(0, 1), 10);
    CHECK(c.cycles);
    CHECK(c.preperiod == 0);
    CHECK(c.period == 2);  // 0 -> -1 -> 0
    CycleInfo d = detect_cycle(M("z^2+1"), ProjPointQ(0, 1), 10);
    CHECK(!d.cycles);
    CycleInfo e = detect_cycle(M("z^2-2"), ProjPointQ(0, 1), 10);
    CHECK(e.cycles);
    CHECK(e.preperiod == 2);  // 0 -> -2 -> 2 -> 2
    CHECK(e.period == 1);
}

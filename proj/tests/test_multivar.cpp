#include "doctest.h"

#include <cstdint>

#include "arbora/map_pn.hpp"
#include "arbora/multipoly.hpp"

using namespace arbora;

namespace {
MultiPoly MP(const std::string& s, int arity = 3) { return MultiPoly::parse(s, arity); }

MultiPoly random_poly(std::uint64_t& seed, int arity, int max_deg, int terms) {
    MultiPoly p(arity);
    for (int t = 0; t < terms; ++t) {
        seed = splitmix64(seed);
        std::vector<int> e(static_cast<std::size_t>(arity));
        std::uint64_t s = seed;
        for (auto& x : e) {
            s = splitmix64(s);
            x = static_cast<int>(s % static_cast<std::uint64_t>(max_deg + 1));
        }
        long c = static_cast<long>(splitmix64(s) % 11) - 5;
        p = p + MultiPoly::monomial(arity, e, c);
    }
    return p;
}
}  // namespace

TEST_CASE("arithmetic and printing") {
    CHECK((MP("x-y") * MP("x+y")) == MP("x^2-y^2"));
    CHECK(MP("x^2*y - 2*z^3").to_string() == "x^2*y - 2*z^3");
    CHECK(MP("x + y").substitute({MP("x^2"), MP("y^2"), MP("z")}) == MP("x^2+y^2"));
    CHECK(MultiPoly(3).to_string() == "0");
    CHECK(MP("z + x - z") == MP("x"));
    CHECK_THROWS(MP("x", 3) + MultiPoly::variable(2, 0));
}

TEST_CASE("exact division") {
    CHECK(*MP("x^2-y^2").exact_divide(MP("x-y")) == MP("x+y"));
    CHECK(!MP("x^2+y^2").exact_divide(MP("x-y")).has_value());
    std::uint64_t seed = 99;
    for (int i = 0; i < 40; ++i) {
        MultiPoly a = random_poly(seed, 3, 3, 4);
        MultiPoly b = random_poly(seed, 3, 2, 3);
        if (b.is_zero()) continue;
        auto q = (a * b).exact_divide(b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
}

TEST_CASE("ring axiom spot checks") {
    std::uint64_t seed = 7;
    for (int i = 0; i < 100; ++i) {
        MultiPoly a = random_poly(seed, 3, 4, 3);
        MultiPoly b = random_poly(seed, 3, 4, 3);
        MultiPoly c = random_poly(seed, 3, 4, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("partial derivatives and homogeneity") {
    CHECK(MP("x^2*y").partial(0) == MP("2*x*y"));
    CHECK(MP("x^2*y").partial(1) == MP("x^2"));
    CHECK(MP("x^2*y").partial(2).is_zero());
    CHECK(MP("x^2+y*z").is_homogeneous());
    CHECK(!MP("x^2+y").is_homogeneous());
    CHECK(MP("x^3*y-z").total_degree() == 4);
}

TEST_CASE("jacobian determinant fixtures") {
    MapPN identity({MP("x"), MP("y"), MP("z")});
    MultiPoly J = jacobian_det(identity);
    CHECK(J == MultiPoly::constant(3, 1));

    MapPN squares({MP("x^2"), MP("y^2"), MP("z^2")});
    CHECK(jacobian_det(squares) == MP("8*x*y*z"));
}

TEST_CASE("jacobian chain rule under composition") {
    std::uint64_t sef = 1001;
    for (int trial = 0; trial < 8; ++trial) {
        // random homogeneous degree-2 coordinate triples
        auto rand_form = [&](std::uint64_t& seed) {
            MultiPoly p(3);
            static const std::vector<std::vector<int>> monos = {
                {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
            for (const auto& e : monos) {
                seed = splitmix64(seed);
                long c = static_cast<long>(seed % 5) - 2;
                p = p + MultiPoly::monomial(3, e, c);
            }
            return p;
        };
        MapPN f({rand_form(sef), rand_form(sef), rand_form(sef)});
        MapPN g({rand_form(sef), rand_form(sef), rand_form(sef)});
        if (f.coords[0].is_zero() || g.coords[0].is_zero()) continue;
        MapPN fg = MapPN({f.coords[0].substitute(g.coords), f.coords[1].substitute(g.coords),
                          f.coords[2].substitute(g.coords)});
        MultiPoly lhs = jacobian_det(fg);
        MultiPoly rhs = jacobian_det(f).substitute(g.coords) * jacobian_det(g);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("compose_map") {
    MapPN sq({MultiPoly::parse("x^2", 2), MultiPoly::parse("y^2", 2)});
    MapPN sq2 = compose_map(sq, sq);
    CHECK(sq2.coords[0] == MultiPoly::parse("x^4", 2));
    CHECK(sq2.coords[1] == MultiPoly::parse("y^4", 2));

    MapPN identity({MP("x"), MP("y"), MP("z")});
    MapPN phi({MP("x^2-2*y*z"), MP("y^2-2*x*z"), MP("z^2")});
    MapPN comp = compose_map(phi, identity);
    CHECK(comp.coords[0] == phi.coords[0]);
    // joint content is removed
    MapPN doubled({MP("2*x"), MP("2*y"), MP("2*z")});
    MapPN comp2 = compose_map(doubled, identity);
    CHECK(comp2.coords[0] == MP("x"));
}

TEST_CASE("restrict_to_line") {
    MapPN identity({MP("x"), MP("y"), MP("z")});
    UniPoly t = UniPoly::x();
    auto [num, den] = restrict_to_line(identity, MP("x-y"), {t, t, UniPoly::constant(1)}, 0, 2);
    CHECK(num == UniPoly::parse("x"));
    CHECK(den == UniPoly::constant(1));

    // a line that is not invariant raises with the off-line witness
    MapPN phi({MP("x^2-2*y*z"), MP("y^2-2*x*z"), MP("z^2")});
    CHECK_THROWS_AS(restrict_to_line(phi, MP("x-y"), {t, UniPoly::constant(1), t}, 0, 2),
                    line_not_invariant_error);
}

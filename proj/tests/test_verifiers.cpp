#include "doctest.h"

#include "arbora/verifiers.hpp"

using namespace arbora;

namespace {
const VerificationCheck* find_check(const VerificationReport& r, const std::string& id) {
    for (const auto& c : r.checks)
        if (c.check_id == id) return &c;
    return nullptr;
}
}  // namespace

TEST_CASE("dupont verification passes in full") {
    VerificationReport r = verify_dupont();
    CHECK(r.all_passed());
    for (const auto& c : r.checks) {
        INFO(c.check_id, ": ", c.evidence);
        CHECK(c.passed);
    }
    const auto* mult = find_check(r, "restricted_critical_multiplicity");
    REQUIRE(mult);
    CHECK(mult->evidence.find("14") != std::string::npos);
    std::string json = r.to_json();
    CHECK(json.find("\"all_passed\": true") != std::string::npos);
}

TEST_CASE("dupont negative control: a perturbed map fails closure") {
    MapPN phi = dupont_map();
    // bump one coefficient of the first coordinate
    phi.coords[0] = phi.coords[0] + MultiPoly::parse("x*y", 3);
    VerificationReport r = verify_dupont_with(phi);
    const auto* closure = find_check(r, "postcritical_closure");
    REQUIRE(closure);
    CHECK(!closure->passed);
    CHECK(!r.all_passed());
}

TEST_CASE("tchebyshev verification passes in full") {
    VerificationReport r = verify_tchebyshev();
    CHECK(r.all_passed());
    for (const auto& c : r.checks) {
        INFO(c.check_id, ": ", c.evidence);
        CHECK(c.passed);
    }
}

TEST_CASE("tchebyshev negative control: altered second coordinate of pi") {
    auto pi = tchebyshev_pi();
    pi[1] = pi[1] + MultiPoly::parse("x", 2);
    VerificationReport r = verify_tchebyshev_with(tchebyshev_map(), pi);
    const auto* semi = find_check(r, "semiconjugacy");
    REQUIRE(semi);
    CHECK(!semi->passed);
}

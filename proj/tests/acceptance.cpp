// Acceptance suite: one line per criterion, every tolerance pinned in
// code.  Exit status 0 only if every criterion passes within its time
// limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "arbora/modp.hpp"
#include "arbora/newton.hpp"
#include "arbora/orbit.hpp"
#include "arbora/pcf.hpp"
#include "arbora/ramification.hpp"
#include "arbora/verifiers.hpp"

using namespace arbora;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < limit_seconds;
    if (!ok || !in_time) ++failures;
    std::printf("%s  criterion %2d  %-38s  %6.2fs/%.0fs%s%s\n", (ok && in_time) ? "PASS" : "FAIL",
                id, name.c_str(), secs, limit_seconds, detail.empty() ? "" : "  -- ",
                detail.c_str());
}

RationalMapP1 M(const std::string& s) { return RationalMapP1::parse(s); }
ProjPointQ Pt(const std::string& s) { return ProjPointQ::parse(s); }

std::set<std::string> ramified_of(const LevelReport& level) {
    std::set<std::string> out;
    for (const auto& v : level.verdicts)
        if (v.status == RamStatus::Ramified) out.insert(v.p.get_str());
    return out;
}

std::set<std::string> support_of(const BigInt& n) {
    std::set<std::string> out;
    for (const auto& p : factor_integer(n).prime_support()) out.insert(p.get_str());
    return out;
}

std::pair<UniPoly, UniPoly> dupont_cube_restriction() {
    MapPN phi = dupont_map();
    MapPN phi3 = compose_map(phi, compose_map(phi, phi));
    UniPoly t = UniPoly::x();
    return restrict_to_line(phi3, MultiPoly::parse("x-y", 3), {t, t, UniPoly::constant(1)}, 0, 2);
}

}  // namespace

int main() {
    criterion(1, "Dupont cube restriction formula", 5.0, [](std::string& detail) {
        auto [num, den] = dupont_cube_restriction();
        std::string got_num = num.to_string();
        std::string got_den = den.to_string();
        std::string want_num = UniPoly::parse("4*x^2-4*x-1").pow(4).to_string();
        std::string want_den = UniPoly::parse("16*x^4-32*x^3+40*x^2-24*x+1").pow(2).to_string();
        detail = "numerator (4x^2-4x-1)^4, denominator (16x^4-32x^3+40x^2-24x+1)^2, byte-equal";
        return got_num == want_num && got_den == want_den;
    });

    criterion(2, "Dupont restricted critical data", 10.0, [](std::string& detail) {
        auto [num, den] = dupont_cube_restriction();
        const int d = std::max(num.degree(), den.degree());
        RationalMapP1 r =
            RationalMapP1::normalize(BinForm::homogenize(num, d), BinForm::homogenize(den, d));
        auto w = r.critical_wronskian();
        bool mult14 = (w.W.degree() == 14) && !w.W.is_zero();
        SqfDivisor values = critical_value_divisor(r);
        bool values_ok =
            values.at_infinity && values.poly == UniPoly::parse("x^2-x").normalized();
        PCFVerdict v = pcf_check(r, 10);
        detail = "total multiplicity 14, critical values {0, 1, inf}, status " + v.status_string();
        return mult14 && values_ok && v.is_pcf();
    });

    criterion(3, "Tchebyshev semiconjugacy + locus", 5.0, [](std::string& detail) {
        VerificationReport r = verify_tchebyshev();
        bool semi = false, locus = false;
        for (const auto& c : r.checks) {
            if (c.check_id == "semiconjugacy") semi = c.passed;
            if (c.check_id == "pi_ramification_locus") locus = c.passed;
        }
        detail = "phi(pi(x,y)) = pi(x^2,y^2) exactly; locus (x-y)(xy^2-1)(x^2y-1) up to unit";
        return semi && locus;
    });

    criterion(4, "z(z-3) level-1 fixture: S_1(0) empty", 10.0, [](std::string& detail) {
        LevelReport level = ramified_primes_at_level(M("z^2-3*z"), Pt("0"), 1);
        bool no_ram = ramified_of(level).empty();
        bool has_candidates = !level.verdicts.empty();  // 3 divides the critical-value data
        bool all_unramified = true;
        for (const auto& v : level.verdicts) all_unramified &= v.status == RamStatus::Unramified;
        detail = "candidate primes resolve unramified despite 3 | disc";
        return no_ram && has_candidates && all_unramified;
    });

    criterion(5, "PCF dichotomy suite", 60.0, [](std::string& detail) {
        bool ok = true;
        for (const char* s : {"z^2", "z^2-1", "z^2-2"}) {
            auto t0 = std::chrono::steady_clock::now();
            PCFVerdict v = pcf_check(M(s), 10);
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            ok = ok && v.is_pcf() && secs < 10.0;
        }
        for (const char* s : {"z^2+1", "z^2+2", "z^2+3"}) {
            auto t0 = std::chrono::steady_clock::now();
            PCFVerdict v = pcf_check(M(s), 10);
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            ok = ok && v.status == PCFVerdict::Status::NonPCF &&
                 v.witness_factor.degree() >= 1 && secs < 10.0;
        }
        detail = "PCF: z^2, z^2-1, z^2-2; NonPCF with height certificate: z^2+1, z^2+2, z^2+3";
        return ok;
    });

    criterion(6, "theorem conformance at desk scale", 60.0, [](std::string& detail) {
        struct Case {
            const char* map;
            const char* alpha;
        };
        bool ok = true;
        for (const Case& c : {Case{"z^2", "2"}, Case{"z^2-1", "3"}, Case{"z^2-2", "3"}}) {
            RationalMapP1 f = M(c.map);
            ProjPointQ a = Pt(c.alpha);
            RamificationReport rep = stabilization_experiment(f, a, 4);
            std::set<std::string> predicted;
            for (const auto& p : rep.predicted.primes) predicted.insert(p.get_str());
            for (const auto& level : rep.levels)
                for (const auto& s : ramified_of(level)) ok = ok && predicted.count(s) > 0;
            ok = ok && rep.stabilized_at.has_value() && *rep.stabilized_at <= 4;
            // oracle: discriminant per level via the Sylvester resultant route
            for (int n = 1; n <= 4; ++n) {
                UniPoly P = preimage_poly(f, a, n).poly;
                UniPoly dP = P.derivative();
                BigInt res_prs = resultant(P, dP);
                BigInt res_syl = resultant_sylvester(P, dP);
                ok = ok && (res_prs == res_syl);
                BigInt disc = discriminant(P);
                ok = ok && (abs(res_prs) == abs(disc * P.leading()));
                // every candidate prime the verdicts saw divides the oracle disc
                for (const auto& v : rep.levels[static_cast<std::size_t>(n - 1)].verdicts)
                    ok = ok && (disc % v.p == 0 || P.leading() % v.p == 0);
            }
        }
        detail = "ramified within predicted, stabilized by level 4, dual-route disc oracle agrees";
        return ok;
    });

    criterion(7, "converse growth for z^2+1 at 0", 120.0, [](std::string& detail) {
        RamificationReport rep = stabilization_experiment(M("z^2+1"), Pt("0"), 5);
        if (rep.levels.size() != 5) return false;
        // frozen from the integer-factorization oracle
        const std::vector<std::set<std::string>> frozen = {
            {"2"}, {"2"}, {"2", "5"}, {"2", "5", "13"}, {"2", "5", "13", "677"}};
        bool ok = true;
        std::set<std::string> cum2, cum5;
        for (int i = 0; i < 5; ++i) {
            auto got = ramified_of(rep.levels[static_cast<std::size_t>(i)]);
            ok = ok && got == frozen[static_cast<std::size_t>(i)];
            if (i < 2) cum2.insert(got.begin(), got.end());
            cum5.insert(got.begin(), got.end());
        }
        ok = ok && (cum2 == std::set<std::string>{"2"});
        ok = ok && cum5.size() > cum2.size();
        for (const auto& p : cum2) ok = ok && cum5.count(p) > 0;  // strict containment
        detail = "level sets {2},{2},{2,5},{2,5,13},{2,5,13,677}; level-5 strictly contains {2}";
        return ok;
    });

    criterion(8, "orbit-valuation witnesses", 5.0, [](std::string& detail) {
        auto w1 = lemma12_search(M("z^2+1"), Pt("0"), 2, {BigInt(2)}, 5);
        bool found1 = false;
        for (const auto& w : w1) found1 = found1 || (w.p == 5 && w.n == 3 && w.v == 1);
        auto w2 = lemma12_search(M("z^2+1"), Pt("0"), 2, {BigInt(2), BigInt(5)}, 5);
        bool found2 = false;
        for (const auto& w : w2) found2 = found2 || (w.p == 13 && w.n == 4 && w.v == 1);
        // recompute every reported valuation from scratch
        bool verified = true;
        for (const auto& ws : {w1, w2})
            for (const auto& w : ws) {
                ProjPointQ v = M("z^2+1").evaluate_n(Pt("0"), w.n);
                PadicVal pv = vp(v.to_rational(), w.p);
                verified = verified && !pv.is_infinite && pv.v == w.v && pv.v > 0 && pv.v % 2 != 0;
            }
        detail = "S={2} gives (5,3,1); S={2,5} gives (13,4,1); valuations recomputed";
        return found1 && found2 && verified;
    });

    criterion(9, "Newton polygon laws", 30.0, [](std::string& detail) {
        std::uint64_t seed = 0x5eedULL;
        auto next = [&]() { return seed = splitmix64(seed); };
        int done = 0;
        bool ok = true;
        while (done < 100 && ok) {
            std::vector<BigInt> ca(1 + next() % 6), cb(1 + next() % 6);
            for (auto& a : ca) a = static_cast<long>(next() % 399) - 199;
            for (auto& a : cb) a = static_cast<long>(next() % 399) - 199;
            UniPoly a{std::move(ca)}, b{std::move(cb)};
            if (a.is_zero() || b.is_zero()) continue;
            ++done;
            for (long q : {2L, 3L, 5L}) {
                auto mp = root_valuation_multiset(newton_polygon(a * b, q));
                auto ma = root_valuation_multiset(newton_polygon(a, q));
                auto mb = root_valuation_multiset(newton_polygon(b, q));
                ma.insert(ma.end(), mb.begin(), mb.end());
                std::sort(ma.begin(), ma.end());
                std::sort(mp.begin(), mp.end());
                ok = ok && (ma == mp);
                auto np = newton_polygon(a * b, q);
                for (std::size_t k = 1; k < np.segments.size(); ++k)
                    ok = ok && np.segments[k].slope > np.segments[k - 1].slope;
            }
        }
        // Eisenstein single-segment property
        for (const char* s : {"x^3+2*x+2", "x^5+4*x^2+2", "x^7+2"}) {
            UniPoly p = UniPoly::parse(s);
            auto np = newton_polygon(p, 2);
            ok = ok && np.segments.size() == 1 &&
                 np.segments[0].slope == BigRat(BigInt(-1), BigInt(p.degree())) &&
                 np.segments[0].length == p.degree();
        }
        detail = "100 product-merge cases at p in {2,3,5}, Eisenstein, monotone slopes";
        return ok;
    });

    criterion(10, "quadratic ramification oracle", 60.0, [](std::string& detail) {
        auto squarefree = [](long d) {
            for (long q = 2; q * q <= std::labs(d); ++q)
                if (d % (q * q) == 0) return false;
            return true;
        };
        bool ok = true;
        int tested = 0;
        for (long d = -50; d <= 50; ++d) {
            if (d == 0 || d == 1 || !squarefree(d)) continue;
            UniPoly pol = UniPoly::parse("x^2") - UniPoly::constant(d);
            for (const auto& p : factor_integer(discriminant(pol)).prime_support()) {
                StemVerdict v = stem_field_verdict(pol, p);
                bool classical;
                if (p == 2)
                    classical = ((d % 4 + 4) % 4) != 1;
                else
                    classical = (BigInt(d) % p == 0);
                ok = ok && v.status != RamStatus::Unknown;
                ok = ok && ((v.status == RamStatus::Ramified) == classical);
                ++tested;
            }
        }
        detail = std::to_string(tested) + " verdicts, all classical, no unknowns";
        return ok && tested > 0;
    });

    criterion(11, "worker-count determinism", 60.0, [](std::string& detail) {
        RunBudgets one;
        one.workers = 1;
        RunBudgets eight;
        eight.workers = 8;
        auto ra = stabilization_experiment(M("z^2+1"), Pt("0"), 5, one);
        auto rb = stabilization_experiment(M("z^2+1"), Pt("0"), 5, eight);
        auto rc = stabilization_experiment(M("z^2+1"), Pt("0"), 5, eight);
        detail = "ramify with 1 and 8 workers: byte-identical JSON";
        return report_to_json(ra) == report_to_json(rb) && report_to_json(rb) == report_to_json(rc);
    });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}

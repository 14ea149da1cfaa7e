#include "arbora/verifiers.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

#include "arbora/pcf.hpp"
#include "arbora/rational_map.hpp"

namespace arbora {

bool VerificationReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return !checks.empty();
}

std::string VerificationReport::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["example"] = example;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"check_id", c.check_id}, {"passed", c.passed}, {"evidence", c.evidence}});
    j["all_passed"] = all_passed();
    return j.dump(indent);
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << example << ":\n";
    for (const auto& c : checks)
        out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.check_id << ": " << c.evidence
            << '\n';
    return out.str();
}

namespace {

MultiPoly mp(const std::string& s) { return MultiPoly::parse(s, 3); }

/// Two independent points spanning the projective line lambda = 0.
std::pair<std::vector<BigInt>, std::vector<BigInt>> span_of_line(const MultiPoly& lambda) {
    BigInt a = 0, b = 0, c = 0;
    for (const auto& [e, coeff] : lambda.terms()) {
        if (e == std::vector<int>{1, 0, 0}) a = coeff;
        if (e == std::vector<int>{0, 1, 0}) b = coeff;
        if (e == std::vector<int>{0, 0, 1}) c = coeff;
    }
    if (a != 0) return {{-b, a, BigInt(0)}, {-c, BigInt(0), a}};
    if (b != 0) return {{BigInt(1), BigInt(0), BigInt(0)}, {BigInt(0), -c, b}};
    return {{BigInt(1), BigInt(0), BigInt(0)}, {BigInt(0), BigInt(1), BigInt(0)}};
}

/// Image of a line under the map, as the parametrized arity-2 triple.
std::vector<MultiPoly> image_of_line(const MapPN& phi, const MultiPoly& lambda) {
    auto [P, Q] = span_of_line(lambda);
    const MultiPoly s = MultiPoly::variable(2, 0), t = MultiPoly::variable(2, 1);
    std::vector<MultiPoly> param;
    for (int i = 0; i < 3; ++i)
        param.push_back(s * MultiPoly::constant(2, P[static_cast<std::size_t>(i)]) +
                        t * MultiPoly::constant(2, Q[static_cast<std::size_t>(i)]));
    std::vector<MultiPoly> image;
    image.reserve(3);
    for (const auto& coord : phi.coords) image.push_back(coord.substitute(param));
    return image;
}

/// Candidate lines containing the parametrized image.
std::vector<MultiPoly> matching_lines(const std::vector<MultiPoly>& image,
                                      const std::vector<MultiPoly>& candidates) {
    std::vector<MultiPoly> out;
    for (const auto& cand : candidates)
        if (cand.substitute(image).is_zero()) out.push_back(cand);
    return out;
}

}  // namespace

MapPN dupont_map() {
    return MapPN({mp("x^2+y^2+z^2-2*x*y+2*x*z-2*y*z"), mp("x^2+y^2+z^2+2*x*y-2*x*z-2*y*z"),
                  mp("x^2+y^2+z^2-2*x*y-2*x*z+2*y*z")});
}

MapPN tchebyshev_map() { return MapPN({mp("x^2-2*y*z"), mp("y^2-2*x*z"), mp("z^2")}); }

std::vector<MultiPoly> tchebyshev_pi() {
    return {MultiPoly::parse("x^2*y+x*y^2+1", 2), MultiPoly::parse("x+y+x^2*y^2", 2),
            MultiPoly::parse("x*y", 2)};
}

VerificationReport verify_dupont_with(const MapPN& phi) {
    VerificationReport report;
    report.example = "dupont";
    const MultiPoly l1 = mp("x-y+z"), l2 = mp("x+y-z"), l3 = mp("0-x+y+z");
    const MultiPoly sextic = mp("x") * mp("y") * mp("z") * mp("x-y") * mp("y-z") * mp("z-x");

    // (a) the Jacobian is 32 l1 l2 l3
    {
        VerificationCheck c{"jacobian_factors", false, ""};
        MultiPoly J = jacobian_det(phi);
        auto q1 = J.exact_divide(l1);
        auto q2 = q1 ? q1->exact_divide(l2) : std::nullopt;
        auto q3 = q2 ? q2->exact_divide(l3) : std::nullopt;
        if (q3 && q3->total_degree() == 0 && !q3->is_zero()) {
            BigInt unit = q3->terms().begin()->second;
            c.passed = (unit == 32);
            c.evidence = "J = " + unit.get_str() + " * (x-y+z)(x+y-z)(-x+y+z)";
        } else {
            c.evidence = "J does not factor through the three critical lines";
        }
        report.checks.push_back(std::move(c));
    }

    // (b) forward closure of the critical lines inside the sextic
    std::vector<MultiPoly> postcritical_lines = {mp("x"),   mp("y"),   mp("z"),
                                                 mp("x-y"), mp("y-z"), mp("z-x")};
    std::vector<MultiPoly> candidates = postcritical_lines;
    candidates.push_back(l1);
    candidates.push_back(l2);
    candidates.push_back(l3);
    {
        VerificationCheck c{"postcritical_closure", true, ""};
        std::vector<MultiPoly> worklist = {l1, l2, l3};
        std::set<std::string> seen;
        std::vector<std::string> reached;
        int rounds = 0;
        while (!worklist.empty() && rounds++ < 32) {
            MultiPoly line = worklist.back().normalized();
            worklist.pop_back();
            auto image = image_of_line(phi, line);
            if (!sextic.substitute(image).is_zero()) {
                c.passed = false;
                c.evidence = "image of " + line.to_string() + " leaves the postcritical sextic";
                break;
            }
            auto matches = matching_lines(image, postcritical_lines);
            if (matches.empty()) {
                c.passed = false;
                c.evidence = "image of " + line.to_string() + " is not a postcritical component";
                break;
            }
            for (const auto& m : matches) {
                std::string key = m.normalized().to_string();
                if (seen.insert(key).second) {
                    worklist.push_back(m);
                    reached.push_back(key);
                }
            }
        }
        if (c.passed) {
            std::sort(reached.begin(), reached.end());
            std::string ev = "closure reaches {";
            for (std::size_t i = 0; i < reached.size(); ++i)
                ev += (i ? ", " : "") + reached[i];
            c.evidence = ev + "}, all dividing xyz(x-y)(y-z)(z-x)";
        }
        report.checks.push_back(std::move(c));
    }

    // (c) the diagonal components form a 3-cycle
    {
        VerificationCheck c{"diagonal_three_cycle", false, ""};
        std::vector<MultiPoly> diag = {mp("x-y"), mp("y-z"), mp("z-x")};
        std::vector<int> sigma(3, -1);
        for (int i = 0; i < 3; ++i) {
            auto image = image_of_line(phi, diag[static_cast<std::size_t>(i)]);
            auto matches = matching_lines(image, diag);
            if (matches.size() == 1)
                for (int j = 0; j < 3; ++j)
                    if (matches[0] == diag[static_cast<std::size_t>(j)]) sigma[static_cast<std::size_t>(i)] = j;
        }
        bool is_perm = sigma[0] >= 0 && sigma[1] >= 0 && sigma[2] >= 0 &&
                       sigma[0] != sigma[1] && sigma[1] != sigma[2] && sigma[0] != sigma[2];
        bool no_fixed = sigma[0] != 0 && sigma[1] != 1 && sigma[2] != 2;
        c.passed = is_perm && no_fixed;
        if (is_perm) {
            c.evidence = "x-y -> " + diag[static_cast<std::size_t>(sigma[0])].to_string() +
                         ", y-z -> " + diag[static_cast<std::size_t>(sigma[1])].to_string() +
                         ", z-x -> " + diag[static_cast<std::size_t>(sigma[2])].to_string();
        } else {
            c.evidence = "images of the diagonal components are not the diagonal components";
        }
        report.checks.push_back(std::move(c));
    }

    // (d)-(f): the cube restricted to x = y, z = 1
    MapPN phi3 = compose_map(phi, compose_map(phi, phi));
    bool have_restriction = false;
    UniPoly num, den;
    try {
        const UniPoly t = UniPoly::x();
        auto pair = restrict_to_line(phi3, mp("x-y"), {t, t, UniPoly::constant(1)}, 0, 2);
        num = pair.first;
        den = pair.second;
        have_restriction = true;
    } catch (const line_not_invariant_error& e) {
        report.checks.push_back({"restriction", false, e.what()});
    }
    if (have_restriction) {
        {
            VerificationCheck c{"restriction_formula", false, ""};
            UniPoly exp_num = UniPoly::parse("4*x^2-4*x-1").pow(4);
            UniPoly exp_den = UniPoly::parse("16*x^4-32*x^3+40*x^2-24*x+1").pow(2);
            c.passed = (num == exp_num) && (den == exp_den);
            c.evidence = "restriction to x=y, z=1 is (" + num.to_string() + ") / (" +
                         den.to_string() + ")";
            report.checks.push_back(std::move(c));
        }
        const int d = std::max(num.degree(), den.degree());
        RationalMapP1 restricted = RationalMapP1::normalize(BinForm::homogenize(num, d),
                                                            BinForm::homogenize(den, d));
        {
            VerificationCheck c{"restricted_critical_multiplicity", false, ""};
            auto w = restricted.critical_wronskian();
            UniPoly wd = w.W.dehomogenize();
            const int inf_mult = w.W.degree() - wd.degree();
            auto mult_of = [&](const UniPoly& q) {
                int m = 0;
                UniPoly r = wd;
                while (true) {
                    auto quo = r.exact_divide(q);
                    if (!quo) break;
                    r = *quo;
                    ++m;
                }
                return m;
            };
            const int m1 = mult_of(UniPoly::parse("4*x^2-4*x-1"));
            const int m2 = mult_of(UniPoly::parse("16*x^4-32*x^3+40*x^2-24*x+1"));
            const int m3 = mult_of(UniPoly::parse("2*x-1"));
            const int total = wd.degree() + inf_mult;
            c.passed = (total == 14) && (2 * m1 + 4 * m2 + m3 + inf_mult == 14);
            std::ostringstream ev;
            ev << "total critical multiplicity " << total << " = " << m1
               << "x(zeros) + " << m2 << "x(poles) + " << m3 << "x(x=1/2) + " << inf_mult
               << "x(inf)";
            c.evidence = ev.str();
            report.checks.push_back(std::move(c));
        }
        {
            VerificationCheck c{"restricted_critical_values", false, ""};
            SqfDivisor values = critical_value_divisor(restricted);
            UniPoly expected = UniPoly::parse("x^2-x");
            c.passed = values.at_infinity && values.poly == expected.normalized();
            c.evidence = "critical values: roots of " + values.poly.to_string() +
                         (values.at_infinity ? " and inf" : "");
            report.checks.push_back(std::move(c));
        }
        {
            VerificationCheck c{"restricted_pcf", false, ""};
            PCFVerdict v = pcf_check(restricted);
            c.passed = v.is_pcf();
            c.evidence = "pcf status " + v.status_string() +
                         (v.is_pcf() ? ", postcritical " + v.postcritical.to_string() : "");
            report.checks.push_back(std::move(c));
        }
    }
    return report;
}

VerificationReport verify_dupont() { return verify_dupont_with(dupont_map()); }

VerificationReport verify_tchebyshev_with(const MapPN& phi, const std::vector<MultiPoly>& pi) {
    VerificationReport report;
    report.example = "tchebyshev";

    // (a) phi(pi(x, y)) = pi(x^2, y^2) coordinate-wise
    {
        VerificationCheck c{"semiconjugacy", true, ""};
        std::vector<MultiPoly> lhs;
        for (const auto& coord : phi.coords) lhs.push_back(coord.substitute(pi));
        const MultiPoly x2 = MultiPoly::variable(2, 0).pow(2), y2 = MultiPoly::variable(2, 1).pow(2);
        for (std::size_t i = 0; i < 3; ++i) {
            MultiPoly rhs = pi[i].substitute({x2, y2});
            if (lhs[i] != rhs) {
                c.passed = false;
                c.evidence = "coordinate " + std::to_string(i) + " differs";
                break;
            }
        }
        if (c.passed) c.evidence = "phi(pi(x,y)) = pi(x^2,y^2) exactly (denominators cleared by xy)";
        report.checks.push_back(std::move(c));
    }

    // (b) cleared ramification locus of pi
    {
        VerificationCheck c{"pi_ramification_locus", false, ""};
        const MultiPoly D = pi[2];  // common denominator xy
        const MultiPoly N1 = pi[0], N2 = pi[1];
        auto d_dx = [&](const MultiPoly& N) { return N.partial(0) * D - N * D.partial(0); };
        auto d_dy = [&](const MultiPoly& N) { return N.partial(1) * D - N * D.partial(1); };
        MultiPoly Jnum = d_dx(N1) * d_dy(N2) - d_dy(N1) * d_dx(N2);  // det * D^4
        MultiPoly f1 = MultiPoly::parse("x-y", 2);
        MultiPoly f2 = MultiPoly::parse("x*y^2-1", 2);
        MultiPoly f3 = MultiPoly::parse("x^2*y-1", 2);
        auto q1 = Jnum.exact_divide(f1);
        auto q2 = q1 ? q1->exact_divide(f2) : std::nullopt;
        auto q3 = q2 ? q2->exact_divide(f3) : std::nullopt;
        if (q3 && !q3->is_zero() && q3->term_count() == 1) {
            const auto& [e, coeff] = *q3->terms().begin();
            c.passed = (abs(coeff) == 1);  // monomial unit in the Laurent ring
            c.evidence = "cleared Jacobian = (x-y)(x*y^2-1)(x^2*y-1) * " + q3->to_string();
        } else {
            c.evidence = "cleared Jacobian is not (x-y)(x*y^2-1)(x^2*y-1) times a monomial";
        }
        report.checks.push_back(std::move(c));
    }

    // (c) critical component images lie in z * quintic
    {
        VerificationCheck c{"critical_images_in_postcritical", false, ""};
        MultiPoly J = jacobian_det(phi);
        MultiPoly zline = mp("z");
        MultiPoly conic = mp("x*y-z^2");
        auto q1 = J.exact_divide(zline);
        auto q2 = q1 ? q1->exact_divide(conic) : std::nullopt;
        bool jac_ok = q2 && q2->total_degree() == 0;
        const MultiPoly quintic = mp("x^2*y^2-4*x^3*z-4*y^3*z+18*x*y*z^2-27*z^4");
        // image of z = 0: [s^2 : t^2 : 0]
        auto line_image = image_of_line(phi, zline);
        bool line_ok = line_image[2].is_zero();
        // image of the conic via [s^2 : t^2 : st]
        const MultiPoly s = MultiPoly::variable(2, 0), t = MultiPoly::variable(2, 1);
        std::vector<MultiPoly> conic_param = {s.pow(2), t.pow(2), s * t};
        std::vector<MultiPoly> conic_image;
        for (const auto& coord : phi.coords) conic_image.push_back(coord.substitute(conic_param));
        bool conic_ok = quintic.substitute(conic_image).is_zero();
        c.passed = jac_ok && line_ok && conic_ok;
        std::ostringstream ev;
        ev << "jacobian = 8 z (xy - z^2): " << (jac_ok ? "yes" : "no")
           << "; image of z=0 inside z=0: " << (line_ok ? "yes" : "no")
           << "; conic image on the quintic: " << (conic_ok ? "yes" : "no");
        c.evidence = ev.str();
        report.checks.push_back(std::move(c));
    }
    return report;
}

VerificationReport verify_tchebyshev() {
    return verify_tchebyshev_with(tchebyshev_map(), tchebyshev_pi());
}

}  // namespace arbora

#include "arbora/ramification.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "arbora/errors.hpp"
#include "arbora/int_factor.hpp"
#include "arbora/modp.hpp"
#include "arbora/poly_factor.hpp"

namespace arbora {

PreimagePoly preimage_poly(const RationalMapP1& map, const ProjPointQ& alpha, int n,
                           std::size_t degree_budget) {
    UniPoly raw = preimage_form(map, alpha, n, degree_budget);
    PreimagePoly out;
    out.level = n;
    out.content_removed = raw.content();
    out.poly = raw.normalized();
    double full = 1;
    for (int i = 0; i < n; ++i) full *= map.degree();
    out.degree_drop = static_cast<int>(full) - out.poly.degree();
    return out;
}

namespace {

std::vector<BigInt> sorted_union(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

std::string fp_pattern(const std::vector<std::pair<UniPoly, int>>& factors) {
    std::string s;
    for (const auto& [g, e] : factors) {
        if (!s.empty()) s += '*';
        s += std::to_string(g.degree());
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

RamVerdict analyze_prime(const UniPoly& P, const PolyFactorization& zfac, const BigInt& p) {
    RamVerdict v;
    v.p = p;
    const long vlc = vp_int(P.leading(), p);

    // reduction pattern of the full polynomial (evidence + wildness)
    auto red_factors = fp::factor(fp::reduce(P, p), p);
    v.reduction_pattern = fp_pattern(red_factors);
    bool reduction_squarefree = true;
    for (const auto& [g, e] : red_factors) {
        if (e > 1) {
            reduction_squarefree = false;
            if (BigInt(e) % p == 0) v.wild_candidate = true;
        }
    }

    if (vlc == 0 && reduction_squarefree) {
        v.status = RamStatus::Unramified;
        v.detail = "squarefree reduction, no degree drop";
        return v;
    }

    // factor-level analysis over the complete irreducible factors
    bool any_unknown = !zfac.complete;
    std::string details;
    for (const auto& [g, e] : zfac.factors) {
        StemVerdict sv = stem_field_verdict(g, p);
        if (!details.empty()) details += "; ";
        details += "deg" + std::to_string(g.degree()) + ":" + to_string(sv.status) + " (" +
                   sv.certificate + ")";
        if (sv.status == RamStatus::Ramified) {
            v.status = RamStatus::Ramified;
            v.detail = details;
            return v;
        }
        if (sv.status == RamStatus::Unknown) any_unknown = true;
    }
    if (!zfac.complete) details += details.empty() ? "" : "; ";
    if (!zfac.complete) details += "factorization over Z incomplete";
    v.status = any_unknown ? RamStatus::Unknown : RamStatus::Unramified;
    v.detail = details.empty() ? "all stem fields unramified" : details;
    return v;
}

}  // namespace

LevelReport ramified_primes_at_level(const RationalMapP1& map, const ProjPointQ& alpha, int n,
                                     const RunBudgets& budgets) {
    PreimagePoly P = preimage_poly(map, alpha, n, budgets.degree_budget);
    LevelReport out;
    out.n = n;
    out.poly_degree = P.poly.degree();
    out.degree_drop = P.degree_drop;
    if (P.poly.degree() < 1) return out;  // all preimages at infinity

    UniPoly g = poly_gcd(P.poly, P.poly.derivative());
    if (g.degree() > 0) throw postcritical_alpha_error(n, g);

    BigInt disc = discriminant(P.poly);
    out.disc_bits = bit_length(disc);

    IntFactorization fd = factor_integer(disc, budgets.factor);
    std::vector<BigInt> candidates = fd.prime_support();
    if (!fd.complete) {
        out.factorization_complete = false;
        out.unknown_cofactor_bits = bit_length(fd.cofactor);
    }
    if (abs(P.poly.leading()) > 1) {
        IntFactorization fl = factor_integer(P.poly.leading(), budgets.factor);
        candidates = sorted_union(candidates, fl.prime_support());
        if (!fl.complete) {
            out.factorization_complete = false;
            out.unknown_cofactor_bits = std::max(out.unknown_cofactor_bits, bit_length(fl.cofactor));
        }
    }
    std::sort(candidates.begin(), candidates.end());

    PolyFactorization zfac = factor_poly(P.poly, budgets.poly);

    out.verdicts.resize(candidates.size());
    const int workers = std::max(1, budgets.workers);
    if (workers == 1 || candidates.size() <= 1) {
        for (std::size_t i = 0; i < candidates.size(); ++i)
            out.verdicts[i] = analyze_prime(P.poly, zfac, candidates[i]);
    } else {
        std::vector<std::thread> pool;
        std::size_t next = 0;
        std::mutex mtx;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                while (true) {
                    std::size_t i;
                    {
                        std::lock_guard<std::mutex> lock(mtx);
                        if (next >= candidates.size()) return;
                        i = next++;
                    }
                    out.verdicts[i] = analyze_prime(P.poly, zfac, candidates[i]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    return out;
}

PredictedBadSet predicted_bad_set(const RationalMapP1& map, const ProjPointQ& alpha,
                                  const RunBudgets& budgets) {
    PredictedBadSet out;
    std::map<BigInt, std::set<std::string>> classes;

    BadPrimeClasses red = map.reduction_bad_primes(budgets.factor);
    for (const auto& p : red.bad_reduction) classes[p].insert("bad-reduction");
    for (const auto& p : red.inseparable_reduction) classes[p].insert("inseparable-reduction");
    if (!red.complete) out.complete = false;

    PCFVerdict pcf = pcf_check(map);
    out.pcf_status = pcf.status_string();
    out.pcf_certified = pcf.is_pcf();
    if (!pcf.is_pcf())
        out.warning =
            "map not certified PCF; the finite-ramification prediction applies only to PCF maps "
            "(collision class computed against the partial postcritical accumulation)";

    const SqfDivisor& D = pcf.postcritical;
    BigInt collide = 1;
    if (D.poly.degree() > 0) collide = D.poly.evaluate_homogeneous(alpha.a, alpha.b);
    if (collide == 0 || (D.at_infinity && alpha.is_infinity()))
        throw postcritical_alpha_error(0, D.poly);
    if (abs(collide) > 1) {
        IntFactorization fc = factor_integer(collide, budgets.factor);
        for (const auto& p : fc.prime_support()) classes[p].insert("collision");
        if (!fc.complete) out.complete = false;
    }
    if (D.at_infinity && abs(alpha.b) > 1) {
        IntFactorization fb = factor_integer(alpha.b, budgets.factor);
        for (const auto& p : fb.prime_support()) classes[p].insert("collision");
        if (!fb.complete) out.complete = false;
    }

    for (const auto& [p, cls] : classes) {
        out.primes.push_back(p);
        std::string joined;
        for (const auto& c : cls) joined += (joined.empty() ? "" : "|") + c;
        out.provenance.emplace_back(p, joined);
    }
    return out;
}

RamificationReport stabilization_experiment(const RationalMapP1& map, const ProjPointQ& alpha,
                                            int n_max, const RunBudgets& budgets) {
    if (n_max < 1) throw std::invalid_argument("stabilization_experiment: n_max must be >= 1");
    auto exc = is_exceptional(map, alpha);
    if (exc.exceptional) throw exceptional_alpha_error(exc);

    RamificationReport report;
    report.map_text = map.to_string();
    report.alpha_text = alpha.to_string();
    report.predicted = predicted_bad_set(map, alpha, budgets);
    report.pcf_status = report.predicted.pcf_status;

    std::set<BigInt> cumulative, unknown;
    std::vector<std::size_t> cum_sizes;
    for (int n = 1; n <= n_max; ++n) {
        LevelReport level;
        try {
            level = ramified_primes_at_level(map, alpha, n, budgets);
        } catch (const budget_error& e) {
            report.budget_note = e.what();
            break;
        }
        for (const auto& v : level.verdicts) {
            if (v.status == RamStatus::Ramified) cumulative.insert(v.p);
            if (v.status == RamStatus::Unknown) unknown.insert(v.p);
        }
        if (!level.factorization_complete)
            report.budget_note = "integer factorization incomplete at level " + std::to_string(n);
        report.levels.push_back(std::move(level));
        cum_sizes.push_back(cumulative.size());
    }
    report.cumulative.assign(cumulative.begin(), cumulative.end());
    report.cumulative_unknown.assign(unknown.begin(), unknown.end());

    if (!cum_sizes.empty()) {
        // first level from which the cumulative set no longer grew
        std::size_t final_size = cum_sizes.back();
        int level = static_cast<int>(cum_sizes.size());
        for (int i = static_cast<int>(cum_sizes.size()) - 1; i >= 0; --i) {
            if (cum_sizes[static_cast<std::size_t>(i)] == final_size)
                level = i + 1;
            else
                break;
        }
        if (static_cast<int>(cum_sizes.size()) >= 2 &&
            cum_sizes.back() > cum_sizes[cum_sizes.size() - 2]) {
            report.stabilized_at = std::nullopt;  // still growing at budget
        } else {
            report.stabilized_at = level;
        }
    }

    std::set<BigInt> predicted(report.predicted.primes.begin(), report.predicted.primes.end());
    report.contained_in_predicted = true;
    for (const auto& p : report.cumulative)
        if (!predicted.count(p)) report.contained_in_predicted = false;
    return report;
}

std::vector<std::pair<BigInt, bool>> wildness_indicator(const RamificationReport& report) {
    std::map<BigInt, bool> flags;
    for (const auto& level : report.levels)
        for (const auto& v : level.verdicts) flags[v.p] = flags[v.p] || v.wild_candidate;
    return {flags.begin(), flags.end()};
}

namespace {

nlohmann::ordered_json verdict_json(const RamVerdict& v) {
    nlohmann::ordered_json j;
    j["p"] = v.p.get_str();
    j["status"] = to_string(v.status);
    j["wild_candidate"] = v.wild_candidate;
    j["evidence"] = {{"reduction_pattern", v.reduction_pattern}, {"detail", v.detail}};
    return j;
}

}  // namespace

std::string report_to_json(const RamificationReport& report, int indent) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["map"] = report.map_text;
    j["alpha"] = report.alpha_text;
    j["pcf_status"] = report.pcf_status;
    j["levels"] = nlohmann::ordered_json::array();
    for (const auto& level : report.levels) {
        nlohmann::ordered_json lj;
        lj["n"] = level.n;
        lj["poly_degree"] = level.poly_degree;
        lj["degree_drop"] = level.degree_drop;
        lj["disc_bits"] = level.disc_bits;
        lj["verdicts"] = nlohmann::ordered_json::array();
        for (const auto& v : level.verdicts) lj["verdicts"].push_back(verdict_json(v));
        lj["unknown_cofactor_bits"] = level.unknown_cofactor_bits;
        j["levels"].push_back(std::move(lj));
    }
    nlohmann::ordered_json pb;
    pb["primes"] = nlohmann::ordered_json::array();
    for (const auto& p : report.predicted.primes) pb["primes"].push_back(p.get_str());
    pb["provenance"] = nlohmann::ordered_json::object();
    for (const auto& [p, cls] : report.predicted.provenance) pb["provenance"][p.get_str()] = cls;
    pb["pcf_certified"] = report.predicted.pcf_certified;
    pb["complete"] = report.predicted.complete;
    if (!report.predicted.warning.empty()) pb["warning"] = report.predicted.warning;
    j["predicted_bad_set"] = std::move(pb);
    j["cumulative"] = nlohmann::ordered_json::array();
    for (const auto& p : report.cumulative) j["cumulative"].push_back(p.get_str());
    j["cumulative_unknown"] = nlohmann::ordered_json::array();
    for (const auto& p : report.cumulative_unknown) j["cumulative_unknown"].push_back(p.get_str());
    if (report.stabilized_at)
        j["stabilized_at"] = *report.stabilized_at;
    else
        j["stabilized_at"] = nullptr;
    j["contained_in_predicted"] = report.contained_in_predicted;
    if (!report.budget_note.empty()) j["incomplete"] = report.budget_note;
    return j.dump(indent);
}

std::string report_to_csv(const RamificationReport& report) {
    std::ostringstream out;
    out << "level,poly_degree,disc_bits,p,status,wild_candidate,reduction_pattern\n";
    for (const auto& level : report.levels)
        for (const auto& v : level.verdicts)
            out << level.n << ',' << level.poly_degree << ',' << level.disc_bits << ','
                << v.p.get_str() << ',' << to_string(v.status) << ','
                << (v.wild_candidate ? "true" : "false") << ',' << v.reduction_pattern << '\n';
    return out.str();
}

namespace {

std::string join_primes(const std::vector<BigInt>& primes) {
    if (primes.empty()) return "(none)";
    std::string s;
    for (const auto& p : primes) s += (s.empty() ? "" : ", ") + p.get_str();
    return s;
}

}  // namespace

std::string report_to_markdown(const RamificationReport& report) {
    std::ostringstream out;
    out << "# Ramification report\n\n";
    out << "- map: `" << report.map_text << "`\n";
    out << "- alpha: `" << report.alpha_text << "`\n";
    out << "- pcf status: " << report.pcf_status << "\n";
    out << "- predicted bad set: " << join_primes(report.predicted.primes) << "\n";
    out << "- cumulative ramified: " << join_primes(report.cumulative) << "\n";
    if (!report.cumulative_unknown.empty())
        out << "- unknown verdicts at: " << join_primes(report.cumulative_unknown) << "\n";
    if (report.stabilized_at)
        out << "- stabilized at level " << *report.stabilized_at << "\n";
    else
        out << "- still growing at budget\n";
    if (!report.budget_note.empty()) out << "- incomplete: " << report.budget_note << "\n";
    out << "\n| level | p | status | wild? | reduction |\n|---|---|---|---|---|\n";
    for (const auto& level : report.levels)
        for (const auto& v : level.verdicts)
            out << "| " << level.n << " | " << v.p.get_str() << " | " << to_string(v.status)
                << " | " << (v.wild_candidate ? "yes" : "no") << " | " << v.reduction_pattern
                << " |\n";
    return out.str();
}

std::string report_to_text(const RamificationReport& report) {
    std::ostringstream out;
    out << "map " << report.map_text << ", alpha " << report.alpha_text << " ("
        << report.pcf_status << ")\n";
    out << "predicted bad set: " << join_primes(report.predicted.primes) << "\n";
    for (const auto& level : report.levels) {
        out << "level " << level.n << " (degree " << level.poly_degree << ", disc "
            << level.disc_bits << " bits):";
        if (level.verdicts.empty()) out << " no candidate primes";
        for (const auto& v : level.verdicts)
            out << ' ' << v.p.get_str() << '=' << to_string(v.status)
                << (v.wild_candidate ? "(wild?)" : "");
        out << '\n';
    }
    out << "cumulative ramified: " << join_primes(report.cumulative);
    if (!report.cumulative_unknown.empty())
        out << "  unknown: " << join_primes(report.cumulative_unknown);
    out << '\n';
    if (report.stabilized_at)
        out << "stabilized at level " << *report.stabilized_at << '\n';
    else
        out << "still growing at budget\n";
    if (!report.budget_note.empty()) out << "incomplete: " << report.budget_note << '\n';
    return out.str();
}

}  // namespace arbora

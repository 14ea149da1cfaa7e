// Python bindings: the main operations, with exact integers carried as
// decimal strings and structured results as plain dicts (via JSON).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"

#include "arbora/errors.hpp"
#include "arbora/newton.hpp"
#include "arbora/orbit.hpp"
#include "arbora/pcf.hpp"
#include "arbora/poly_factor.hpp"
#include "arbora/ramification.hpp"
#include "arbora/verifiers.hpp"

namespace py = pybind11;
using namespace arbora;
using nlohmann::ordered_json;

namespace {

py::object json_to_py(const std::string& dumped) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(dumped);
}

RunBudgets budgets_from(unsigned long prime_bound, unsigned rho_rounds, std::size_t degree_budget,
                        int workers) {
    RunBudgets b;
    b.factor.trial_division_bound = prime_bound;
    b.factor.rho_rounds = rho_rounds;
    b.degree_budget = degree_budget;
    b.workers = workers;
    return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact ramification of iterated preimage fields for rational self-maps of P^1(Q)";

    py::class_<RationalMapP1>(m, "Map")
        .def_static("parse", &RationalMapP1::parse, py::arg("text"))
        .def_property_readonly("degree", &RationalMapP1::degree)
        .def_property_readonly("resultant",
                               [](const RationalMapP1& f) { return f.resultant().get_str(); })
        .def("evaluate",
             [](const RationalMapP1& f, const std::string& pt) {
                 return f.evaluate(ProjPointQ::parse(pt)).to_string();
             })
        .def("iterate", &RationalMapP1::iterate_map, py::arg("k"), py::arg("degree_budget") = 4096)
        .def("__repr__", &RationalMapP1::to_string)
        .def("__eq__", [](const RationalMapP1& a, const RationalMapP1& b) { return a == b; });

    m.def("parse_map", &RationalMapP1::parse, py::arg("text"));

    m.def(
        "pcf_check",
        [](const std::string& map, int level_budget) {
            PCFVerdict v = pcf_check(RationalMapP1::parse(map), level_budget);
            ordered_json j;
            j["status"] = v.status_string();
            if (v.is_pcf()) {
                j["postcritical_divisor"] = v.postcritical.poly.to_string();
                j["postcritical_contains_infinity"] = v.postcritical.at_infinity;
                j["stabilized_at"] = v.stabilized_at;
            }
            if (v.status == PCFVerdict::Status::NonPCF)
                j["height_witness"] = v.witness_factor.to_string();
            if (v.status == PCFVerdict::Status::Undetermined) j["budget"] = v.budget_note;
            return json_to_py(j.dump());
        },
        py::arg("map"), py::arg("level_budget") = 10);

    m.def(
        "preimage_poly",
        [](const std::string& map, const std::string& alpha, int n) {
            auto p = preimage_poly(RationalMapP1::parse(map), ProjPointQ::parse(alpha), n);
            ordered_json j;
            j["level"] = p.level;
            j["poly"] = p.poly.to_string();
            j["degree_drop"] = p.degree_drop;
            return json_to_py(j.dump());
        },
        py::arg("map"), py::arg("alpha"), py::arg("n"));

    m.def(
        "ramification_report",
        [](const std::string& map, const std::string& alpha, int levels, unsigned long prime_bound,
           unsigned rho_rounds, std::size_t degree_budget, int workers) {
            auto rep = stabilization_experiment(
                RationalMapP1::parse(map), ProjPointQ::parse(alpha), levels,
                budgets_from(prime_bound, rho_rounds, degree_budget, workers));
            return json_to_py(report_to_json(rep, -1));
        },
        py::arg("map"), py::arg("alpha"), py::arg("levels") = 4, py::arg("prime_bound") = 100000,
        py::arg("rho_rounds") = 24, py::arg("degree_budget") = 4096, py::arg("workers") = 1);

    m.def(
        "ramification_report_json",
        [](const std::string& map, const std::string& alpha, int levels, int workers) {
            auto rep = stabilization_experiment(RationalMapP1::parse(map), ProjPointQ::parse(alpha),
                                                levels, budgets_from(100000, 24, 4096, workers));
            return report_to_json(rep);
        },
        py::arg("map"), py::arg("alpha"), py::arg("levels") = 4, py::arg("workers") = 1);

    m.def(
        "predicted_bad_set",
        [](const std::string& map, const std::string& alpha) {
            auto s = predicted_bad_set(RationalMapP1::parse(map), ProjPointQ::parse(alpha));
            ordered_json j;
            j["pcf_status"] = s.pcf_status;
            j["primes"] = ordered_json::array();
            for (const auto& p : s.primes) j["primes"].push_back(p.get_str());
            j["provenance"] = ordered_json::object();
            for (const auto& [p, cls] : s.provenance) j["provenance"][p.get_str()] = cls;
            if (!s.warning.empty()) j["warning"] = s.warning;
            return json_to_py(j.dump());
        },
        py::arg("map"), py::arg("alpha"));

    m.def(
        "newton_polygon",
        [](const std::string& poly, const std::string& p) {
            return json_to_py(newton_polygon(UniPoly::parse_any_var(poly), BigInt(p)).to_json());
        },
        py::arg("poly"), py::arg("p"));

    m.def(
        "lemma12_search",
        [](const std::string& map, const std::string& a, int e,
           const std::vector<std::string>& excluded, int n_max) {
            std::vector<BigInt> S;
            for (const auto& s : excluded) S.emplace_back(s);
            auto ws =
                lemma12_search(RationalMapP1::parse(map), ProjPointQ::parse(a), e, S, n_max);
            ordered_json j = ordered_json::array();
            for (const auto& w : ws)
                j.push_back({{"p", w.p.get_str()}, {"n", w.n}, {"v", w.v}, {"v_mod_e", w.v_mod_e}});
            return json_to_py(j.dump());
        },
        py::arg("map"), py::arg("a"), py::arg("e") = 2,
        py::arg("excluded") = std::vector<std::string>{}, py::arg("n_max") = 6);

    m.def(
        "orbit_values",
        [](const std::string& map, const std::string& a, int n_max) {
            auto rows = orbit_valuation_table(RationalMapP1::parse(map), ProjPointQ::parse(a), n_max);
            ordered_json j = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json row;
                row["n"] = r.n;
                row["value"] = r.value.to_string();
                ordered_json nf = ordered_json::array();
                for (const auto& [p, e] : r.numerator.factors)
                    nf.push_back({{"p", p.get_str()}, {"e", e}});
                row["numerator_factors"] = nf;
                row["numerator_complete"] = r.numerator.complete;
                j.push_back(std::move(row));
            }
            return json_to_py(j.dump());
        },
        py::arg("map"), py::arg("a"), py::arg("n_max") = 6);

    m.def("resultant", [](const std::string& p, const std::string& q) {
        return resultant(UniPoly::parse(p), UniPoly::parse(q)).get_str();
    });
    m.def("discriminant",
          [](const std::string& p) { return discriminant(UniPoly::parse(p)).get_str(); });
    m.def("squarefree_part",
          [](const std::string& p) { return squarefree_part(UniPoly::parse(p)).to_string(); });
    m.def(
        "factor_integer",
        [](const std::string& n, unsigned long trial_bound, unsigned rho_rounds) {
            FactorBudget b;
            b.trial_division_bound = trial_bound;
            b.rho_rounds = rho_rounds;
            auto f = factor_integer(BigInt(n), b);
            ordered_json j;
            j["sign"] = f.sign;
            j["factors"] = ordered_json::array();
            for (const auto& [p, e] : f.factors) j["factors"].push_back({{"p", p.get_str()}, {"e", e}});
            j["cofactor"] = f.cofactor.get_str();
            j["complete"] = f.complete;
            return json_to_py(j.dump());
        },
        py::arg("n"), py::arg("trial_bound") = 100000, py::arg("rho_rounds") = 24);
    m.def(
        "factor_poly",
        [](const std::string& p) {
            auto f = factor_poly(UniPoly::parse(p));
            ordered_json j;
            j["content_unit"] = f.content_unit.get_str();
            j["factors"] = ordered_json::array();
            for (const auto& [g, e] : f.factors)
                j["factors"].push_back({{"poly", g.to_string()}, {"multiplicity", e}});
            j["unsplit"] = ordered_json::array();
            for (const auto& [g, e] : f.unsplit)
                j["unsplit"].push_back({{"poly", g.to_string()}, {"multiplicity", e}});
            j["complete"] = f.complete;
            return json_to_py(j.dump());
        },
        py::arg("p"));

    m.def("is_exceptional", [](const std::string& map, const std::string& alpha) {
        auto c = is_exceptional(RationalMapP1::parse(map), ProjPointQ::parse(alpha));
        ordered_json j;
        j["exceptional"] = c.exceptional;
        j["backward_support"] = c.backward_support.to_string();
        return json_to_py(j.dump());
    });

    m.def("verify_dupont", []() { return json_to_py(verify_dupont().to_json()); });
    m.def("verify_tchebyshev", []() { return json_to_py(verify_tchebyshev().to_json()); });

    py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);
}

#include "arbora/orbit.hpp"

#include <algorithm>
#include <set>

namespace arbora {

std::vector<OrbitRow> orbit_valuation_table(const RationalMapP1& map, const ProjPointQ& a,
                                            int n_max, const FactorBudget& budget) {
    std::vector<OrbitRow> rows;
    ProjPointQ cur = a;
    for (int n = 1; n <= n_max; ++n) {
        cur = map.evaluate(cur);
        OrbitRow row;
        row.n = n;
        row.value = cur;
        if (cur.a != 0) row.numerator = factor_integer(cur.a, budget);
        if (cur.b != 0) row.denominator = factor_integer(cur.b, budget);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Lemma12Witness> lemma12_search(const RationalMapP1& map, const ProjPointQ& a, int e,
                                           const std::vector<BigInt>& excluded, int n_max,
                                           const FactorBudget& budget) {
    if (e < 2) throw std::invalid_argument("lemma12_search: e must be >= 2");
    HeightBound escape(map);
    CycleInfo cyc = detect_cycle(map, a, n_max, &escape);
    if (cyc.cycles) {
        std::string what = "starting point is preperiodic (enters a " +
                           std::to_string(cyc.period) + "-cycle after " +
                           std::to_string(cyc.preperiod) + " steps)";
        throw preperiodic_point_error(cyc, what);
    }
    std::set<BigInt> S(excluded.begin(), excluded.end());
    std::vector<Lemma12Witness> out;
    ProjPointQ cur = a;
    for (int n = 1; n <= n_max; ++n) {
        cur = map.evaluate(cur);
        if (cur.a == 0 || cur.is_infinity()) continue;  // no positive finite valuations
        IntFactorization f = factor_integer(cur.a, budget);
        for (const auto& [p, v] : f.factors) {
            if (S.count(p)) continue;
            if (v > 0 && v % e != 0) out.push_back({p, n, static_cast<long>(v), v % e});
        }
    }
    std::sort(out.begin(), out.end(), [](const Lemma12Witness& x, const Lemma12Witness& y) {
        if (x.n != y.n) return x.n < y.n;
        return x.p < y.p;
    });
    return out;
}

}  // namespace arbora

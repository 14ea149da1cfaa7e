#include "arbora/newton.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "arbora/int_factor.hpp"

namespace arbora {

PadicVal vp(const BigInt& x, const BigInt& p) {
    if (!is_prime(p)) throw std::invalid_argument("vp: p = " + p.get_str() + " is not prime");
    if (x == 0) return PadicVal::infinite();
    return PadicVal::finite(vp_int(x, p));
}

PadicVal vp(const BigRat& x, const BigInt& p) {
    if (!is_prime(p)) throw std::invalid_argument("vp: p = " + p.get_str() + " is not prime");
    if (x == 0) return PadicVal::infinite();
    return PadicVal::finite(vp_int(BigInt(x.get_num()), p) - vp_int(BigInt(x.get_den()), p));
}

NewtonPolygon newton_polygon(const UniPoly& P, const BigInt& p) {
    if (P.is_zero()) throw std::invalid_argument("newton_polygon: zero polynomial");
    if (!is_prime(p)) throw std::invalid_argument("newton_polygon: p is not prime");
    NewtonPolygon np;
    np.p = p;
    std::vector<std::pair<long, long>> pts;  // (index, valuation), finite coefficients only
    for (int i = 0; i <= P.degree(); ++i) {
        if (P.coeff(i) == 0) continue;
        pts.emplace_back(i, vp_int(P.coeff(i), p));
    }
    // monotone-chain lower hull over points already sorted by index
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // drop b when it lies on or above the chord a -> pt
            long cross_lhs = (b.first - a.first) * (pt.second - a.second);
            long cross_rhs = (b.second - a.second) * (pt.first - a.first);
            if (cross_lhs <= cross_rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    np.vertices = hull;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        NewtonSegment seg;
        seg.length = hull[i].first - hull[i - 1].first;
        seg.slope = BigRat(BigInt(hull[i].second - hull[i - 1].second), BigInt(seg.length));
        seg.slope.canonicalize();
        np.segments.push_back(std::move(seg));
    }
    return np;
}

std::vector<BigRat> root_valuation_multiset(const NewtonPolygon& np) {
    std::vector<BigRat> out;
    for (const auto& seg : np.segments) {
        BigRat val = -seg.slope;
        for (long i = 0; i < seg.length; ++i) out.push_back(val);
    }
    return out;
}

bool integrality_obstruction(const NewtonPolygon& np, int e) {
    if (e < 2) throw std::invalid_argument("integrality_obstruction: e must be >= 2");
    for (const auto& seg : np.segments)
        if (seg.slope.get_den() != 1) return true;
    return false;
}

std::string NewtonPolygon::to_ascii() const {
    std::ostringstream out;
    out << "p = " << p.get_str() << "\nvertices:";
    for (const auto& [i, v] : vertices) out << " (" << i << "," << v << ")";
    out << "\nsegments:";
    if (segments.empty()) out << " (none)";
    for (const auto& seg : segments)
        out << " [slope " << seg.slope.get_str() << ", length " << seg.length << "]";
    out << '\n';
    return out.str();
}

std::string NewtonPolygon::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["p"] = p.get_str();
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& [i, v] : vertices) j["vertices"].push_back({i, v});
    j["segments"] = nlohmann::ordered_json::array();
    for (const auto& seg : segments)
        j["segments"].push_back({{"slope", seg.slope.get_str()}, {"length", seg.length}});
    return j.dump(indent);
}

}  // namespace arbora

#include "arbora/map_pn.hpp"

#include <stdexcept>

namespace arbora {

MapPN::MapPN(std::vector<MultiPoly> coords_) : coords(std::move(coords_)) {
    if (coords.empty()) throw std::invalid_argument("MapPN: no coordinates");
    const int ar = coords[0].arity();
    const int d = coords[0].total_degree();
    for (const auto& c : coords) {
        if (c.arity() != ar) throw std::invalid_argument("MapPN: mixed arity");
        if (c.is_zero()) continue;
        if (!c.is_homogeneous() || c.total_degree() != d)
            throw std::invalid_argument("MapPN: coordinates must be homogeneous of one degree");
    }
}

std::string MapPN::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += " : ";
        s += coords[i].to_string();
    }
    return s + "]";
}

namespace {

MultiPoly det_recursive(const std::vector<std::vector<MultiPoly>>& m, std::vector<int> cols) {
    const std::size_t row = m.size() - cols.size();
    const int arity = m[0][0].arity();
    if (cols.size() == 1) return m[row][static_cast<std::size_t>(cols[0])];
    MultiPoly acc(arity);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        MultiPoly minor = det_recursive(m, rest);
        MultiPoly term = m[row][static_cast<std::size_t>(cols[k])] * minor;
        if (k % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

}  // namespace

MultiPoly jacobian_det(const MapPN& map) {
    const int n = static_cast<int>(map.coords.size());
    if (n != map.arity())
        throw std::invalid_argument("jacobian_det: coordinate count must equal variable count");
    std::vector<std::vector<MultiPoly>> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int v = 0; v < n; ++v) m[static_cast<std::size_t>(i)].push_back(map.coords[static_cast<std::size_t>(i)].partial(v));
    std::vector<int> cols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(i)] = i;
    return det_recursive(m, cols);
}

MapPN compose_map(const MapPN& f, const MapPN& g) {
    if (f.arity() != static_cast<int>(g.coords.size()))
        throw std::invalid_argument("compose_map: arity mismatch");
    std::vector<MultiPoly> out;
    out.reserve(f.coords.size());
    for (const auto& c : f.coords) out.push_back(c.substitute(g.coords));
    // joint integer content
    BigInt content = 0;
    for (const auto& c : out) content = gcd(content, c.content());
    if (content > 1)
        for (auto& c : out) c = *c.exact_divide(MultiPoly::constant(c.arity(), content));
    return MapPN(std::move(out));
}

std::pair<UniPoly, UniPoly> restrict_to_line(const MapPN& map, const MultiPoly& line,
                                             const std::vector<UniPoly>& subs, int num_idx,
                                             int den_idx) {
    if (static_cast<int>(subs.size()) != map.arity())
        throw std::invalid_argument("restrict_to_line: substitution arity mismatch");
    std::vector<UniPoly> images;
    images.reserve(map.coords.size());
    for (const auto& c : map.coords) images.push_back(c.substitute_univariate(subs));
    // invariance: the image must satisfy the line equation identically
    std::vector<MultiPoly> image_multis;
    image_multis.reserve(images.size());
    for (const auto& im : images) {
        MultiPoly m(1);
        for (int i = 0; i <= im.degree(); ++i)
            if (im.coeff(i) != 0) m = m + MultiPoly::monomial(1, {i}, im.coeff(i));
        image_multis.push_back(std::move(m));
    }
    MultiPoly off = line.substitute(image_multis);
    if (!off.is_zero())
        throw line_not_invariant_error(
            "restriction: line " + line.to_string() +
                " is not invariant; image fails the line equation (off-line part " +
                off.to_string() + ")",
            off);
    UniPoly num = images[static_cast<std::size_t>(num_idx)];
    UniPoly den = images[static_cast<std::size_t>(den_idx)];
    if (den.is_zero()) throw std::invalid_argument("restrict_to_line: zero denominator coordinate");
    UniPoly g = poly_gcd(num, den);
    num = *num.exact_divide(g);
    den = *den.exact_divide(g);
    BigInt c = gcd(num.content(), den.content());
    if (c > 1) {
        num = *num.exact_divide(UniPoly::constant(c));
        den = *den.exact_divide(UniPoly::constant(c));
    }
    if (sgn(num.leading()) < 0) {
        num = -num;
        den = -den;
    }
    return {num, den};
}

}  // namespace arbora

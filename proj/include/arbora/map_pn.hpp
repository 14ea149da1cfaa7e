#ifndef ARBORA_MAP_PN_HPP
#define ARBORA_MAP_PN_HPP

#include <string>
#include <utility>
#include <vector>

#include "arbora/multipoly.hpp"
#include "arbora/unipoly.hpp"

namespace arbora {

/// Morphism of P^N as N+1 homogeneous coordinates of a common degree.
struct MapPN {
    std::vector<MultiPoly> coords;

    MapPN() = default;
    explicit MapPN(std::vector<MultiPoly> coords_);

    int arity() const { return coords.empty() ? 0 : coords[0].arity(); }
    int degree() const { return coords.empty() ? -1 : coords[0].total_degree(); }
    std::string to_string() const;
};

/// Determinant of the (N+1)x(N+1) matrix of partial derivatives.
MultiPoly jacobian_det(const MapPN& map);

/// f after g (coordinate-wise substitution), joint integer content removed.
MapPN compose_map(const MapPN& f, const MapPN& g);

struct line_not_invariant_error : std::invalid_argument {
    line_not_invariant_error(const std::string& what, MultiPoly off_)
        : std::invalid_argument(what), off_line(std::move(off_)) {}
    MultiPoly off_line;  // the nonvanishing image coordinate combination
};

/// Restrict map to the invariant line cut out by `line`, parametrized by
/// `subs` (one univariate polynomial per variable).  The image parameter
/// is coords[num_idx]/coords[den_idx]; the result is in lowest terms with
/// positive leading numerator.  Throws line_not_invariant_error when
/// line(map o subs) is not identically zero.
std::pair<UniPoly, UniPoly> restrict_to_line(const MapPN& map, const MultiPoly& line,
                                             const std::vector<UniPoly>& subs, int num_idx,
                                             int den_idx);

}  // namespace arbora

#endif

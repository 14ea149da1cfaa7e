#ifndef ARBORA_NEWTON_HPP
#define ARBORA_NEWTON_HPP

#include <string>
#include <vector>

#include "arbora/unipoly.hpp"

namespace arbora {

/// Exact p-adic valuation with an explicit +infinity sentinel for 0.
struct PadicVal {
    long v = 0;
    bool is_infinite = false;

    static PadicVal infinite() { return {0, true}; }
    static PadicVal finite(long v) { return {v, false}; }
    bool operator==(const PadicVal& o) const {
        return is_infinite == o.is_infinite && (is_infinite || v == o.v);
    }
    std::string to_string() const { return is_infinite ? "+inf" : std::to_string(v); }
};

/// v_p of an integer (composite p rejected).
PadicVal vp(const BigInt& x, const BigInt& p);
/// v_p of a rational.
PadicVal vp(const BigRat& x, const BigInt& p);

struct NewtonSegment {
    BigRat slope;  // exact rational, increasing segment to segment
    long length;   // horizontal length
};

/// Lower convex hull of {(i, v_p(a_i)) : a_i != 0}.
struct NewtonPolygon {
    BigInt p;
    std::vector<std::pair<long, long>> vertices;  // (index, valuation)
    std::vector<NewtonSegment> segments;

    std::string to_ascii() const;
    std::string to_json(int indent = 2) const;
};

NewtonPolygon newton_polygon(const UniPoly& P, const BigInt& p);

/// Segment of slope -s and length l certifies l roots of valuation s;
/// one value per root, zero roots (the x-power offset) excluded.
std::vector<BigRat> root_valuation_multiset(const NewtonPolygon& np);

/// True iff some segment certifies a root valuation v/e with e not
/// dividing v, i.e. a non-integral slope: such roots cannot live in an
/// extension where they are forced to have integral valuation.
bool integrality_obstruction(const NewtonPolygon& np, int e);

}  // namespace arbora

#endif

#include "arbora/dedekind.hpp"

#include <stdexcept>

#include "arbora/modp.hpp"
#include "arbora/poly_factor.hpp"

namespace arbora {

std::string to_string(RamStatus s) {
    switch (s) {
        case RamStatus::Ramified:
            return "ramified";
        case RamStatus::Unramified:
            return "unramified";
        default:
            return "unknown";
    }
}

DedekindOutcome dedekind_criterion(const UniPoly& monic_g, const BigInt& p) {
    if (monic_g.leading() != 1) throw std::invalid_argument("dedekind_criterion: polynomial must be monic");
    DedekindOutcome out;
    out.reduction_factors = fp::factor(fp::reduce(monic_g, p), p);
    out.reduction_squarefree = true;
    UniPoly gstar = UniPoly::constant(1);  // radical: prod g_i
    for (const auto& [gi, ei] : out.reduction_factors) {
        gstar = fp::mul(gstar, gi, p);
        if (ei > 1) out.reduction_squarefree = false;
    }
    UniPoly hstar = fp::divmod(fp::reduce(monic_g, p), gstar, p).first;  // prod g_i^(e_i-1)
    if (out.reduction_squarefree) {
        out.p_divides_index = false;
        return out;
    }
    // T = (g* h* - g)/p over Z with the canonical [0,p) lifts
    UniPoly prod = gstar * hstar;
    UniPoly diff = prod - monic_g;
    std::vector<BigInt> tc;
    tc.reserve(static_cast<std::size_t>(diff.degree()) + 1);
    for (int i = 0; i <= diff.degree(); ++i) tc.push_back(divexact(diff.coeff(i), p));
    UniPoly T = fp::reduce(UniPoly(std::move(tc)), p);
    UniPoly u = fp::gcd(T, fp::gcd(gstar, hstar, p), p);
    out.p_divides_index = u.degree() > 0;
    return out;
}

namespace {

std::string pattern_string(const std::vector<std::pair<UniPoly, int>>& factors) {
    std::string s;
    for (const auto& [g, e] : factors) {
        if (!s.empty()) s += '*';
        s += std::to_string(g.degree());
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

StemVerdict verdict_for_generator(const UniPoly& monic_g, const BigInt& p) {
    StemVerdict v;
    BigInt disc = discriminant(monic_g);
    if (disc == 0) throw std::invalid_argument("stem_field_verdict: generator not squarefree");
    v.disc_valuation = vp_int(disc, p);
    if (v.disc_valuation == 0) {
        v.status = RamStatus::Unramified;
        v.certificate = "p coprime to generator discriminant";
        return v;
    }
    DedekindOutcome ded = dedekind_criterion(monic_g, p);
    v.reduction_pattern = pattern_string(ded.reduction_factors);
    v.dedekind_maximal = !ded.p_divides_index;
    if (v.dedekind_maximal) {
        // equation order p-maximal: splitting of p mirrors the reduction
        v.status = ded.reduction_squarefree ? RamStatus::Unramified : RamStatus::Ramified;
        v.certificate = "dedekind: order p-maximal, reduction pattern decides";
        return v;
    }
    if (v.disc_valuation % 2 == 1) {
        // v_p(field disc) = v_p(disc) - 2 v_p(index) keeps parity
        v.status = RamStatus::Ramified;
        v.certificate = "odd discriminant valuation";
        return v;
    }
    if (v.disc_valuation == 2) {
        // index valuation >= 1 forces v_p(field disc) = 0
        v.status = RamStatus::Unramified;
        v.certificate = "index accounts for the full discriminant valuation";
        return v;
    }
    v.status = RamStatus::Unknown;
    v.certificate = "p divides index; discriminant valuation ambiguous";
    return v;
}

}  // namespace

StemVerdict stem_field_verdict(const UniPoly& g, const BigInt& p) {
    if (g.degree() < 1) throw std::invalid_argument("stem_field_verdict: constant polynomial");
    if (g.degree() == 1) {
        StemVerdict v;
        v.status = RamStatus::Unramified;
        v.certificate = "degree-one stem field";
        v.disc_valuation = 0;
        return v;
    }
    // Candidate generators of the same field: g monicized; if p divides
    // lc(g) the monicization inflates v_p(disc), so also try the reversal
    // (roots inverted) and small shifts of it.
    std::vector<UniPoly> generators;
    generators.push_back(monicize(g).first);
    if (vp_int(g.leading(), p) > 0) {
        UniPoly base = g;
        for (int shift = 0; shift <= 8; ++shift) {
            UniPoly cand = shift == 0 ? base : base.shifted(BigInt(shift));
            if (cand.constant_term() == 0) continue;
            if (vp_int(cand.constant_term(), p) == 0) {
                generators.push_back(monicize(cand.reversed()).first);
                break;
            }
        }
    }
    StemVerdict best;
    for (const auto& gen : generators) {
        StemVerdict v = verdict_for_generator(gen, p);
        if (v.status != RamStatus::Unknown) return v;
        best = v;
    }
    return best;
}

}  // namespace arbora

#include "arbora/pcf.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

#include "arbora/errors.hpp"
#include "arbora/poly_factor.hpp"

namespace arbora {

bool SqfDivisor::divides(const SqfDivisor& other) const {
    if (at_infinity && !other.at_infinity) return false;
    if (poly.degree() <= 0) return true;
    return other.poly.exact_divide(poly).has_value();
}

SqfDivisor SqfDivisor::merged(const SqfDivisor& other) const {
    SqfDivisor out;
    UniPoly g = poly_gcd(poly, other.poly);
    UniPoly prod = poly * (*other.poly.exact_divide(g));
    out.poly = prod.normalized();
    out.at_infinity = at_infinity || other.at_infinity;
    return out;
}

std::string SqfDivisor::to_string() const {
    std::string s = poly.to_string();
    if (at_infinity) s += s == "1" ? "; inf" : " ; inf";
    return s;
}

SqfDivisor forward_image_poly(const RationalMapP1& map, const SqfDivisor& D) {
    SqfDivisor out;
    const int d = map.degree();
    UniPoly f = map.F().dehomogenize();
    UniPoly g = map.G().dehomogenize();
    UniPoly image_poly = UniPoly::constant(1);
    bool image_inf = false;

    if (D.poly.degree() > 0) {
        const int m = D.poly.degree();
        // finite points mapping to infinity
        if (poly_gcd(D.poly, g).degree() > 0) image_inf = true;
        // R(w) = Res_z(D(z), F(z,1) - w G(z,1)), F - wG formal degree d in z;
        // interpolate from m+1 samples.
        std::vector<BigRat> xs, ys;
        BigInt w0 = 0;
        int produced = 0;
        while (produced < m + 1) {
            UniPoly B = f - g * w0;
            BigInt val = B.is_zero() ? BigInt(0)
                                     : pow_ui(D.poly.leading(),
                                              static_cast<unsigned long>(d - B.degree())) *
                                           resultant(D.poly, B);
            xs.emplace_back(w0);
            ys.emplace_back(val);
            ++produced;
            // 0, 1, -1, 2, -2, ...
            if (w0 > 0)
                w0 = -w0;
            else
                w0 = 1 - w0;
        }
        // exact Lagrange interpolation
        std::vector<BigRat> coeffs(static_cast<std::size_t>(m) + 1, BigRat(0));
        for (std::size_t i = 0; i < xs.size(); ++i) {
            // basis polynomial prod_{j != i} (w - x_j) / (x_i - x_j)
            std::vector<BigRat> basis{BigRat(1)};
            BigRat denom(1);
            for (std::size_t j = 0; j < xs.size(); ++j) {
                if (j == i) continue;
                std::vector<BigRat> next(basis.size() + 1, BigRat(0));
                for (std::size_t k = 0; k < basis.size(); ++k) {
                    next[k + 1] += basis[k];
                    next[k] -= basis[k] * xs[j];
                }
                basis = std::move(next);
                denom *= xs[i] - xs[j];
            }
            BigRat scale = ys[i] / denom;
            for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * scale;
        }
        std::vector<BigInt> ic(coeffs.size());
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            coeffs[k].canonicalize();
            if (coeffs[k].get_den() != 1)
                throw std::logic_error("forward_image_poly: non-integral interpolation");
            ic[k] = coeffs[k].get_num();
        }
        UniPoly R(std::move(ic));
        if (!R.is_zero() && R.degree() > 0) image_poly = squarefree_part(R);
    }

    if (D.at_infinity) {
        const BigInt& fl = map.F().coeff(d);
        const BigInt& gl = map.G().coeff(d);
        if (gl == 0) {
            image_inf = true;
        } else {
            UniPoly lin(std::vector<BigInt>{-fl, gl});
            SqfDivisor extra{lin.normalized(), false};
            SqfDivisor base{image_poly, image_inf};
            SqfDivisor merged = base.merged(extra);
            image_poly = merged.poly;
        }
    }
    out.poly = image_poly.normalized();
    out.at_infinity = image_inf;
    return out;
}

SqfDivisor critical_divisor(const RationalMapP1& map) {
    auto w = map.critical_wronskian();
    SqfDivisor out;
    UniPoly wd = w.W.dehomogenize();
    out.poly = wd.degree() > 0 ? squarefree_part(wd) : UniPoly::constant(1);
    out.at_infinity = w.infinity_critical;
    return out;
}

SqfDivisor critical_value_divisor(const RationalMapP1& map) {
    return forward_image_poly(map, critical_divisor(map));
}

HeightBound::HeightBound(const RationalMapP1& map) : d_(map.degree()) {
    res_abs_ = abs(map.resultant());
    const int d = d_;
    const int N = 2 * d;
    // coefficient matrix of a F + b G = rhs over columns a_0..a_{d-1}, b_0..b_{d-1}
    auto build = [&](const std::vector<BigInt>& fc, const std::vector<BigInt>& gc) {
        std::vector<std::vector<BigInt>> M(static_cast<std::size_t>(N),
                                           std::vector<BigInt>(static_cast<std::size_t>(N), BigInt(0)));
        auto at = [&](const std::vector<BigInt>& c, int i) -> BigInt {
            if (i < 0 || i > d) return 0;
            return c[static_cast<std::size_t>(i)];
        };
        for (int k = 0; k < N; ++k)
            for (int j = 0; j < d; ++j) {
                M[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = at(fc, k - j);
                M[static_cast<std::size_t>(k)][static_cast<std::size_t>(d + j)] = at(gc, k - j);
            }
        return M;
    };
    hcof_ = 0;
    const std::vector<BigInt>& fc = map.F().coeffs();
    const std::vector<BigInt>& gc = map.G().coeffs();
    std::vector<BigInt> fr(fc.rbegin(), fc.rend());
    std::vector<BigInt> gr(gc.rbegin(), gc.rend());
    for (int side = 0; side < 2; ++side) {
        auto M = side == 0 ? build(fc, gc) : build(fr, gr);
        // Cramer with rhs = unit vector at the x^(2d-1) equation
        for (int col = 0; col < N; ++col) {
            auto Mi = M;
            for (int k = 0; k < N; ++k)
                Mi[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)] =
                    (k == N - 1) ? BigInt(1) : BigInt(0);
            BigInt minor = abs(bareiss_determinant(std::move(Mi)));
            if (minor > hcof_) hcof_ = minor;
        }
    }
    expc2_ = 2 * BigInt(d + 1) * hcof_ * res_abs_;
}

bool HeightBound::rational_height_exceeds(const ProjPointQ& P) const {
    BigInt lhs = pow_ui(P.height(), static_cast<unsigned long>(d_ - 1));
    BigInt rhs = (BigInt(1) << static_cast<unsigned>(d_ - 1)) * expc2_;
    return lhs > rhs;
}

bool HeightBound::factor_height_exceeds(const UniPoly& factor) const {
    const int k = factor.degree();
    if (k <= 0) return false;
    if (k == 1) {
        return rational_height_exceeds(ProjPointQ(-factor.coeff(0), factor.coeff(1)));
    }
    BigInt lhs = pow_ui(factor.height(), static_cast<unsigned long>(d_ - 1));
    BigInt rhs = pow_ui(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(k / 2)),
                        static_cast<unsigned long>(d_ - 1));
    rhs *= BigInt(1) << static_cast<unsigned>(k * (d_ - 1));
    rhs *= pow_ui(expc2_, static_cast<unsigned long>(k));
    return lhs > rhs;
}

std::string PCFVerdict::status_string() const {
    switch (status) {
        case Status::PCF:
            return "PCF";
        case Status::NonPCF:
            return "NonPCF";
        default:
            return "Undetermined";
    }
}

PCFVerdict pcf_check(const RationalMapP1& map, int level_budget, std::size_t height_budget_bits) {
    PCFVerdict out;
    HeightBound bound(map);
    SqfDivisor acc = critical_value_divisor(map);
    PolyFactorBudget fb;
    for (int n = 1; n <= level_budget; ++n) {
        // NonPCF certificate: some accumulated component's roots are
        // critical orbit values of height above the bound
        if (acc.poly.degree() > 0) {
            for (const auto& [f, e] : factor_poly(acc.poly, fb).all_parts()) {
                if (bound.factor_height_exceeds(f)) {
                    out.status = PCFVerdict::Status::NonPCF;
                    out.witness_factor = f;
                    return out;
                }
            }
        }
        SqfDivisor img = forward_image_poly(map, acc);
        if (img.divides(acc)) {
            out.status = PCFVerdict::Status::PCF;
            out.postcritical = acc;
            out.stabilized_at = n;
            return out;
        }
        acc = acc.merged(img);
        if (bit_length(acc.poly.height()) > height_budget_bits) {
            out.status = PCFVerdict::Status::Undetermined;
            out.budget_note = "height budget: accumulated divisor coefficients exceed " +
                              std::to_string(height_budget_bits) + " bits";
            return out;
        }
    }
    out.status = PCFVerdict::Status::Undetermined;
    out.budget_note = "level budget: no stabilization within " + std::to_string(level_budget) +
                      " pushforward rounds";
    return out;
}

UniPoly preimage_form(const RationalMapP1& map, const ProjPointQ& alpha, int n,
                      std::size_t degree_budget) {
    auto [Fn, Gn] = map.iterate_forms(n, degree_budget);
    if (alpha.is_infinity()) return Gn.dehomogenize();
    return Fn.dehomogenize() * alpha.b - Gn.dehomogenize() * alpha.a;
}

ExceptionalityCertificate is_exceptional(const RationalMapP1& map, const ProjPointQ& alpha) {
    const int d = map.degree();
    UniPoly p1 = preimage_form(map, alpha, 1);
    UniPoly p2 = preimage_form(map, alpha, 2);
    bool inf_preimage = (p1.degree() < d) || (p2.degree() < d * d);
    UniPoly prod = p1 * p2;
    UniPoly support = prod.degree() > 0 ? squarefree_part(prod) : UniPoly::constant(1);
    ExceptionalityCertificate cert;
    cert.backward_support = SqfDivisor{support, inf_preimage};
    cert.exceptional = cert.backward_support.point_count() <= 2;
    return cert;
}

CycleInfo detect_cycle(const RationalMapP1& map, const ProjPointQ& P, int max_steps,
                       const HeightBound* escape) {
    CycleInfo info;
    std::map<ProjPointQ, int> seen;
    ProjPointQ cur = P;
    info.orbit.push_back(cur);
    seen[cur] = 0;
    if (escape && escape->rational_height_exceeds(cur)) {
        info.escaped = true;
        return info;
    }
    for (int i = 1; i <= max_steps; ++i) {
        cur = map.evaluate(cur);
        auto it = seen.find(cur);
        if (it != seen.end()) {
            info.cycles = true;
            info.preperiod = it->second;
            info.period = i - it->second;
            return info;
        }
        info.orbit.push_back(cur);
        seen[cur] = i;
        if (escape && escape->rational_height_exceeds(cur)) {
            info.escaped = true;
            return info;
        }
    }
    return info;
}

}  // namespace arbora

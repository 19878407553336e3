#pragma once

#include "ellcorr/laurent.hpp"
#include "ellcorr/mobius.hpp"

namespace ellcorr {

struct EllipticInvariants {
    Cx g2{0}, g3{0};
    bool degenerate() const;
};

/// Value and first three derivatives of a scalar function at a point.
struct DerivativeJet {
    Cx u, u1, u2, u3;
};

/// Laurent expansion of wp at the origin, nterms recursion coefficients.
LaurentSeries wp_series(const EllipticInvariants& inv, int nterms = LaurentSeries::kDefaultTerms);

struct WpPair {
    Cx p, pprime;
};

/// Series summation inside the convergence radius proxy, then repeated
/// duplication back out. No lattice data involved.
WpPair wp_eval_pair(Cx z, const EllipticInvariants& inv);
Cx wp_eval(Cx z, const EllipticInvariants& inv);
Cx wp_prime_eval(Cx z, const EllipticInvariants& inv);

enum class FamilyKind { WP, WP_PRIME, WP2, WP3, A_OVER_SINH, MOBIUS_EXP };

const char* family_name(FamilyKind k);

/// One of the closed-form solution families: u(z) = m(base(z - z0)) where
/// base is wp, wp', wp^2, wp^3, a/sinh(az), or e^(az). The front map m
/// defaults to the identity.
struct SolutionFamily {
    FamilyKind kind;
    EllipticInvariants inv;
    Cx a{0};
    Mobius m;
    Cx z0{0};

    static SolutionFamily wp(EllipticInvariants inv);
    static SolutionFamily wp_prime(Cx g3);
    static SolutionFamily wp2(Cx g2);
    static SolutionFamily wp3(Cx g3);
    static SolutionFamily a_over_sinh(Cx a);
    static SolutionFamily mobius_exp(Cx a, Mobius m);

    SolutionFamily with_front(Mobius front) const;
    SolutionFamily with_shift(Cx shift) const;
};

/// Exact derivative chains per family, with the front map applied by the
/// chain rule. Cross-checked elsewhere against finite differences.
DerivativeJet jet(const SolutionFamily& fam, Cx z);

/// Local expansion of the family's base function at its pole; defined for
/// the four wp-backed kinds only. The front map is not applied here.
LaurentSeries family_base_series(const SolutionFamily& fam,
                                 int nterms = LaurentSeries::kDefaultTerms);

} // namespace ellcorr

#pragma once

#include "ellcorr/schwarzian.hpp"

namespace ellcorr {

struct BinomialEquation {
    int k;
    RationalFn R;
    Cx L{0};
};

/// ((u')^k - R(u)) / (1 + |R(u)|) at one jet.
Cx residual_binomial(const BinomialEquation& eq, const DerivativeJet& j);

/// A binomial equation paired with its closed-form solution family and the
/// elliptic invariant derived for it by series matching.
struct ThmInstance {
    BinomialEquation eq;
    SolutionFamily family;
    Cx derived_invariant; // g3 for the cubic case, g2 for the quartic case
};

/// (u')^3 = L^3 u^2 (u-1)^2 (u+1)^2, solved by a scaled reciprocal of wp';
/// the g3 invariant is derived at build time, not assumed.
ThmInstance thm5_instance(Cx L);

/// (u')^4 = L^4 u^2 (u-1)^3 (u+1)^3, solved by a homographic image of wp^2;
/// the g2 invariant is derived at build time.
ThmInstance thm6_instance(Cx L);

/// Negative control: same construction with the sign of the front map
/// flipped; keeps the correct-branch invariant so the residual exposes the
/// wrong branch.
ThmInstance thm6_instance_flipped(Cx L);

/// Independent re-derivation of the Thm 5/6 invariant: coarse grid scan of
/// the series-residual norm over a real interval, then golden-section
/// refinement. Cross-checks the series-matching value.
Cx scan_invariant(int which, Cx L);

/// Least-squares fit of (u')^k = N(u)/D(u) from the series of u, D monic,
/// deg N <= degN, deg D <= degD. Exact within 1e-6 or NoExactFit.
RationalFn fit_binomial_from_series(const LaurentSeries& u, int k, int degN, int degD);

/// Degree sweep ordered by total degree; first exact fit wins.
RationalFn fit_binomial_sweep(const LaurentSeries& u, int k, int maxN = 8, int maxD = 4);

struct CorrespondenceEntry {
    int schwarzianRow;
    BinomialEquation binomial;
    SolutionFamily family;
};

/// The four wp-backed rows paired with their fitted first-order equations,
/// k = (2, 3, 4, 6). Both residual certifications run at shared sample
/// points; a failure raises CorrespondenceBroken.
std::vector<CorrespondenceEntry> correspondence_table(const RowParams& params = {},
                                                      int samples = 32, double tol = 1e-8,
                                                      uint64_t seed = 42);

} // namespace ellcorr

#pragma once

#include <array>
#include <string>

#include "ellcorr/laurent.hpp"
#include "ellcorr/schwarzian.hpp"

namespace ellcorr {

/// Leading behavior u0 * z^q of a movable-singularity expansion. When no
/// such balance exists in u itself, the equation is rewritten in a chart
/// v = 1/(u - tau) at a pole tau of R; chart then maps u to v.
struct DominantBalance {
    int q;
    Cx u0;
    bool charted = false;
    Mobius chart{};
};

struct IndicialPolynomial {
    std::array<Cx, 4> coeffs; // ascending, monic
    std::array<Cx, 3> roots;

    Cx eval(Cx j) const {
        return coeffs[0] + j * (coeffs[1] + j * (coeffs[2] + j * coeffs[3]));
    }
};

/// All pole-type balances with integer q in [-8, -2], sorted by (q, u0).
/// Falls back to charts at the poles of R; throws NoBalanceFound when the
/// right side is constant or no chart admits a balance.
std::vector<DominantBalance> dominant_balances(const SchwarzianEquation& eq);

/// Equation seen through the balance's chart (identity when uncharted).
SchwarzianEquation chart_equation(const SchwarzianEquation& eq, const DominantBalance& bal);

/// Laurent solution through z^(q+n) in the balance's variable, built by
/// order-by-order linear solves on the denominator-cleared equation.
LaurentSeries local_series(const SchwarzianEquation& eq, const DominantBalance& bal, int n);

/// Monic cubic in the resonance index j: the Frechet derivative of the
/// cleared equation at the balance, applied to z^(q+j), sampled at
/// j = 10..13 and interpolated; a fifth sample cross-checks.
IndicialPolynomial indicial_polynomial(const SchwarzianEquation& eq, const DominantBalance& bal,
                                       const LaurentSeries& s);

/// Same with an explicit sample set: js[0..3] interpolate, js[4] checks.
IndicialPolynomial indicial_polynomial_sampled(const SchwarzianEquation& eq,
                                               const DominantBalance& bal, const LaurentSeries& s,
                                               const std::array<int, 5>& js);

struct BalanceAnalysis {
    DominantBalance bal;
    LaurentSeries series;
    IndicialPolynomial indicial;
    double K;                // from the factored shape (j+1)(j^2-j-K)
    int integer_index_count; // non-(-1) indices within 1e-6 of an integer
    bool indices_nonintegral;
    int free_constants;
};

struct FuchsReport {
    std::vector<BalanceAnalysis> balances;
    std::string note; // set when the equation has no pole balance
};

FuchsReport fuchs_report(const SchwarzianEquation& eq);

/// Counting rule shared by fuchs_report and tests: one constant for the
/// free singularity location plus one per passing nonnegative-integer
/// resonance.
int free_constant_count(const std::array<Cx, 3>& indices,
                        const std::vector<int>& passing_resonances);

} // namespace ellcorr

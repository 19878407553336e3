#pragma once

#include <functional>
#include <vector>

#include "ellcorr/rng.hpp"
#include "ellcorr/weierstrass.hpp"

namespace ellcorr {

struct SchwarzianEquation {
    int p;
    RationalFn R;
};

/// One row of the canonical list: the equation in invariant form together
/// with its closed-form solution family.
struct CanonicalRow {
    int index;
    SchwarzianEquation eq;
    SolutionFamily family;
};

/// Free parameters of the six rows; defaults chosen nondegenerate.
struct RowParams {
    EllipticInvariants inv1{Cx(3), Cx(2)};
    Cx g3_row2{2};
    Cx g2_row3{5};
    Cx g3_row4{1};
    Cx a_row5{2};
    Cx a_row6{1.3};
    Mobius m_row6{};
};

CanonicalRow canonical_row(int index, const RowParams& params = {});

/// Shape of the first canonical list: exponent p and the multiplicity
/// patterns of the numerator and denominator root factors. Recorded as
/// data; the residual certification runs on the second list.
struct FactoredShape {
    int p;
    std::vector<int> sigma_mults;
    std::vector<int> tau_mults;
};

const std::vector<FactoredShape>& first_list_shapes();

Cx schwarzian_from_jet(const DerivativeJet& j);

/// Richardson-extrapolated five-point differences at steps h and h/2.
DerivativeJet numeric_jet(const std::function<Cx(Cx)>& f, Cx z);
Cx schwarzian_numeric(const std::function<Cx(Cx)>& f, Cx z);

/// ({u;z})^p - R(u) over (1 + |R(u)|) at one point.
Cx residual(const CanonicalRow& row, Cx z);

/// {m(u); z} - {u; z}, both sides by exact jets.
Cx mobius_conjugate_check(const CanonicalRow& row, const Mobius& m, Cx z);

/// Deterministic pole-avoiding samples in an annulus scaled by the family's
/// natural length; resamples on |u| > 1e6 or |u'| < 1e-6 or when `avoid`
/// has a pole at u, up to 100 tries per point.
std::vector<Cx> sample_family_points(const SolutionFamily& fam, const RationalFn& avoid,
                                     int count, SplitMix64& rng);
std::vector<Cx> sample_points(const CanonicalRow& row, int count, SplitMix64& rng);

} // namespace ellcorr

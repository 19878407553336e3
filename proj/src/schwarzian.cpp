#include "ellcorr/schwarzian.hpp"

#include <cmath>
#include <numbers>

namespace ellcorr {

namespace {

Poly sq(const Poly& p) { return p * p; }
Poly cube(const Poly& p) { return p * p * p; }

double family_scale(const SolutionFamily& fam) {
    switch (fam.kind) {
    case FamilyKind::WP:
    case FamilyKind::WP_PRIME:
    case FamilyKind::WP2:
    case FamilyKind::WP3: {
        double r = 1.0;
        if (std::abs(fam.inv.g2) > 0)
            r = std::min(r, std::pow(std::abs(fam.inv.g2), -0.25));
        if (std::abs(fam.inv.g3) > 0)
            r = std::min(r, std::pow(std::abs(fam.inv.g3), -1.0 / 6.0));
        return r;
    }
    case FamilyKind::A_OVER_SINH:
    case FamilyKind::MOBIUS_EXP:
        return std::min(1.0, 1.0 / std::abs(fam.a));
    }
    return 1.0;
}

Cx pow_int(Cx v, int p) {
    Cx acc(1);
    for (int k = 0; k < p; ++k)
        acc *= v;
    return acc;
}

} // namespace

CanonicalRow canonical_row(int index, const RowParams& prm) {
    Poly u = Poly::variable();
    switch (index) {
    case 1: {
        Cx g2 = prm.inv1.g2, g3 = prm.inv1.g3;
        Poly num = sq(Poly{{g2, Cx(0), Cx(4)}}) + Poly{{Cx(0), 32.0 * g3}};
        RationalFn R(Cx(-3.0 / 8.0) * num, Poly{{-g3, -g2, Cx(0), Cx(4)}});
        return {1, {1, R}, SolutionFamily::wp(prm.inv1)};
    }
    case 2: {
        Cx g3 = prm.g3_row2;
        RationalFn R(Cx(-16) * cube(Poly{{-3.0 * g3, Cx(0), Cx(1)}}),
                     sq(Poly{{g3, Cx(0), Cx(1)}}));
        return {2, {3, R}, SolutionFamily::wp_prime(g3)};
    }
    case 3: {
        Cx g2 = prm.g2_row3;
        RationalFn R(Cx(9) * sq(Poly{{5.0 * g2 * g2, -24.0 * g2, Cx(80)}}),
                     Cx(64) * (u * sq(Poly{{-g2, Cx(4)}})));
        return {3, {2, R}, SolutionFamily::wp2(g2)};
    }
    case 4: {
        Cx g3 = prm.g3_row4;
        RationalFn R(Cx(-8) * cube(Poly{{2.0 * g3 * g3, -10.0 * g3, Cx(35)}}),
                     sq(u) * cube(Poly{{-g3, Cx(4)}}));
        return {4, {3, R}, SolutionFamily::wp3(g3)};
    }
    case 5: {
        Cx a = prm.a_row5;
        RationalFn R(a * a * Poly{{-a * a, Cx(0), Cx(2)}}, Cx(2) * Poly{{a * a, Cx(0), Cx(1)}});
        return {5, {1, R}, SolutionFamily::a_over_sinh(a)};
    }
    case 6: {
        Cx a = prm.a_row6;
        RationalFn R = RationalFn::constant(-a * a / 2.0);
        return {6, {1, R}, SolutionFamily::mobius_exp(a, prm.m_row6)};
    }
    default:
        throw Error("row index must be 1..6");
    }
}

const std::vector<FactoredShape>& first_list_shapes() {
    static const std::vector<FactoredShape> shapes = {
        {1, {1, 1, 1, 1}, {1, 1, 1, 1}}, {3, {3, 3}, {2, 2, 2}}, {2, {2, 2}, {2, 1, 1}},
        {3, {3, 3}, {3, 2, 1}},          {1, {1, 1}, {1, 1}},    {1, {}, {}},
    };
    return shapes;
}

Cx schwarzian_from_jet(const DerivativeJet& j) {
    if (std::abs(j.u1) <= 1e-300)
        throw CriticalPoint();
    Cx r = j.u2 / j.u1;
    return j.u3 / j.u1 - 1.5 * r * r;
}

DerivativeJet numeric_jet(const std::function<Cx(Cx)>& f, Cx z) {
    double h0 = 5e-3 * (1.0 + std::abs(z));
    Cx f0 = f(z);
    auto stencil = [&](double h) -> DerivativeJet {
        Cx fp1 = f(z + h), fm1 = f(z - h);
        Cx fp2 = f(z + 2.0 * h), fm2 = f(z - 2.0 * h);
        Cx d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
        Cx d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
        Cx d3 = (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);
        return {f0, d1, d2, d3};
    };
    DerivativeJet A = stencil(h0);
    DerivativeJet B = stencil(h0 / 2.0);
    auto rel = [](Cx a, Cx b) { return std::abs(a - b) / (1.0 + std::abs(b)); };
    if (rel(A.u1, B.u1) > 1e-2 || rel(A.u2, B.u2) > 1e-2 || rel(A.u3, B.u3) > 1e-2)
        throw UnstableStencil();
    return {f0, (16.0 * B.u1 - A.u1) / 15.0, (16.0 * B.u2 - A.u2) / 15.0,
            (4.0 * B.u3 - A.u3) / 3.0};
}

Cx schwarzian_numeric(const std::function<Cx(Cx)>& f, Cx z) {
    return schwarzian_from_jet(numeric_jet(f, z));
}

Cx residual(const CanonicalRow& row, Cx z) {
    DerivativeJet j = jet(row.family, z);
    Cx S = schwarzian_from_jet(j);
    Cx Ru = row.eq.R.eval(j.u);
    return (pow_int(S, row.eq.p) - Ru) / (1.0 + std::abs(Ru));
}

Cx mobius_conjugate_check(const CanonicalRow& row, const Mobius& m, Cx z) {
    Cx base = schwarzian_from_jet(jet(row.family, z));
    SolutionFamily conj = row.family.with_front(m.compose(row.family.m));
    Cx moved = schwarzian_from_jet(jet(conj, z));
    return moved - base;
}

std::vector<Cx> sample_family_points(const SolutionFamily& fam, const RationalFn& avoid,
                                     int count, SplitMix64& rng) {
    double lam = family_scale(fam);
    std::vector<Cx> pts;
    pts.reserve(count);
    for (int n = 0; n < count; ++n) {
        bool found = false;
        for (int tries = 0; tries < 100 && !found; ++tries) {
            double r = rng.uniform(0.2 * lam, 1.2 * lam);
            double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
            Cx z = fam.z0 + Cx(r * std::cos(th), r * std::sin(th));
            try {
                DerivativeJet j = jet(fam, z);
                if (std::abs(j.u) > 1e6 || std::abs(j.u1) < 1e-6)
                    continue;
                avoid.eval(j.u);
                pts.push_back(z);
                found = true;
            } catch (const Error&) {
            }
        }
        if (!found)
            throw SamplingExhausted();
    }
    return pts;
}

std::vector<Cx> sample_points(const CanonicalRow& row, int count, SplitMix64& rng) {
    return sample_family_points(row.family, row.eq.R, count, rng);
}

} // namespace ellcorr

#include "ellcorr/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ellcorr {

namespace {

constexpr double kPoleMagnitude = 1e8;
constexpr int kMaxHalvings = 40;

double radius_proxy(const EllipticInvariants& inv) {
    double r = 1.0;
    if (std::abs(inv.g2) > 0)
        r = std::min(r, std::pow(std::abs(inv.g2), -0.25));
    if (std::abs(inv.g3) > 0)
        r = std::min(r, std::pow(std::abs(inv.g3), -1.0 / 6.0));
    return 0.5 * r;
}

} // namespace

bool EllipticInvariants::degenerate() const {
    Cx disc = g2 * g2 * g2 - 27.0 * g3 * g3;
    double scale = std::max({std::abs(g2 * g2 * g2), std::abs(27.0 * g3 * g3), 1.0});
    return std::abs(disc) <= 1e-12 * scale;
}

LaurentSeries wp_series(const EllipticInvariants& inv, int nterms) {
    nterms = std::max(nterms, 2);
    std::vector<Cx> c(nterms + 1, Cx(0));
    c[2] = inv.g2 / 20.0;
    c[3] = inv.g3 / 28.0;
    for (int k = 4; k <= nterms; ++k) {
        Cx acc(0);
        for (int m = 2; m <= k - 2; ++m)
            acc += c[m] * c[k - m];
        c[k] = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * acc;
    }
    int order = 2 * nterms;
    std::vector<Cx> coeffs(order + 2, Cx(0));
    coeffs[0] = Cx(1); // z^-2
    for (int k = 2; k <= nterms; ++k)
        coeffs[2 * k - 2 + 2] = c[k];
    return LaurentSeries::from_coeffs(-2, std::move(coeffs), order);
}

WpPair wp_eval_pair(Cx z, const EllipticInvariants& inv) {
    if (std::abs(z) < 1e-300)
        throw PoleProximity();
    double r0 = radius_proxy(inv);
    int depth = 0;
    Cx w = z;
    while (std::abs(w) > r0) {
        w /= 2.0;
        if (++depth > kMaxHalvings)
            throw ReductionDepthExceeded();
    }

    static thread_local LaurentSeries cached_p, cached_dp;
    static thread_local Cx cached_g2{1e308}, cached_g3{1e308};
    if (cached_g2 != inv.g2 || cached_g3 != inv.g3) {
        cached_p = wp_series(inv);
        cached_dp = cached_p.derivative();
        cached_g2 = inv.g2;
        cached_g3 = inv.g3;
    }
    Cx p = cached_p.eval(w);
    Cx dp = cached_dp.eval(w);

    for (int k = 0; k < depth; ++k) {
        if (std::abs(p) > kPoleMagnitude)
            throw PoleProximity();
        if (std::abs(dp) < 1e-300)
            throw PoleProximity();
        Cx p2 = 6.0 * p * p - inv.g2 / 2.0;
        Cx A = p2 / (2.0 * dp);
        Cx Ad = (12.0 * p * dp * dp - p2 * p2) / (2.0 * dp * dp);
        Cx pd = A * A - 2.0 * p;
        dp = A * Ad - dp;
        p = pd;
    }
    if (std::abs(p) > kPoleMagnitude)
        throw PoleProximity();
    return {p, dp};
}

Cx wp_eval(Cx z, const EllipticInvariants& inv) { return wp_eval_pair(z, inv).p; }

Cx wp_prime_eval(Cx z, const EllipticInvariants& inv) { return wp_eval_pair(z, inv).pprime; }

const char* family_name(FamilyKind k) {
    switch (k) {
    case FamilyKind::WP: return "wp";
    case FamilyKind::WP_PRIME: return "wp_prime";
    case FamilyKind::WP2: return "wp2";
    case FamilyKind::WP3: return "wp3";
    case FamilyKind::A_OVER_SINH: return "a_over_sinh";
    case FamilyKind::MOBIUS_EXP: return "mobius_exp";
    }
    return "?";
}

SolutionFamily SolutionFamily::wp(EllipticInvariants inv) {
    return {FamilyKind::WP, inv, Cx(0), Mobius(), Cx(0)};
}

SolutionFamily SolutionFamily::wp_prime(Cx g3) {
    return {FamilyKind::WP_PRIME, {Cx(0), g3}, Cx(0), Mobius(), Cx(0)};
}

SolutionFamily SolutionFamily::wp2(Cx g2) {
    return {FamilyKind::WP2, {g2, Cx(0)}, Cx(0), Mobius(), Cx(0)};
}

SolutionFamily SolutionFamily::wp3(Cx g3) {
    return {FamilyKind::WP3, {Cx(0), g3}, Cx(0), Mobius(), Cx(0)};
}

SolutionFamily SolutionFamily::a_over_sinh(Cx a) {
    if (a == Cx(0))
        throw Error("a_over_sinh requires a != 0");
    return {FamilyKind::A_OVER_SINH, {}, a, Mobius(), Cx(0)};
}

SolutionFamily SolutionFamily::mobius_exp(Cx a, Mobius m) {
    if (a == Cx(0))
        throw Error("mobius_exp requires a != 0");
    return {FamilyKind::MOBIUS_EXP, {}, a, m, Cx(0)};
}

SolutionFamily SolutionFamily::with_front(Mobius front) const {
    SolutionFamily f = *this;
    f.m = front;
    return f;
}

SolutionFamily SolutionFamily::with_shift(Cx shift) const {
    SolutionFamily f = *this;
    f.z0 = shift;
    return f;
}

DerivativeJet jet(const SolutionFamily& fam, Cx z) {
    Cx w = z - fam.z0;
    DerivativeJet base;
    switch (fam.kind) {
    case FamilyKind::WP: {
        auto [p, dp] = wp_eval_pair(w, fam.inv);
        base = {p, dp, 6.0 * p * p - fam.inv.g2 / 2.0, 12.0 * p * dp};
        break;
    }
    case FamilyKind::WP_PRIME: {
        auto [p, dp] = wp_eval_pair(w, fam.inv);
        Cx g2 = fam.inv.g2, g3 = fam.inv.g3;
        base = {dp, 6.0 * p * p - g2 / 2.0, 12.0 * p * dp,
                120.0 * p * p * p - 18.0 * g2 * p - 12.0 * g3};
        break;
    }
    case FamilyKind::WP2: {
        auto [p, dp] = wp_eval_pair(w, fam.inv);
        Cx g2 = fam.inv.g2, g3 = fam.inv.g3;
        base = {p * p, 2.0 * p * dp, 20.0 * p * p * p - 3.0 * g2 * p - 2.0 * g3,
                (60.0 * p * p - 3.0 * g2) * dp};
        break;
    }
    case FamilyKind::WP3: {
        auto [p, dp] = wp_eval_pair(w, fam.inv);
        Cx g2 = fam.inv.g2, g3 = fam.inv.g3;
        base = {p * p * p, 3.0 * p * p * dp,
                42.0 * p * p * p * p - 7.5 * g2 * p * p - 6.0 * g3 * p,
                (168.0 * p * p * p - 15.0 * g2 * p - 6.0 * g3) * dp};
        break;
    }
    case FamilyKind::A_OVER_SINH: {
        Cx a = fam.a;
        Cx sh = std::sinh(a * w), ch = std::cosh(a * w);
        if (std::abs(sh) < 1e-6)
            throw PoleProximity();
        Cx s2 = sh * sh, s3 = s2 * sh, s4 = s3 * sh;
        base = {a / sh, -a * a * ch / s2, a * a * a * (2.0 + s2) / s3,
                -a * a * a * a * ch * (s2 + 6.0) / s4};
        break;
    }
    case FamilyKind::MOBIUS_EXP: {
        Cx a = fam.a;
        Cx e = std::exp(a * w);
        base = {e, a * e, a * a * e, a * a * a * e};
        break;
    }
    }

    const Mobius& m = fam.m;
    if (m.a == Cx(1) && m.b == Cx(0) && m.c == Cx(0) && m.d == Cx(1))
        return base;
    Cx v = base.u;
    if (std::abs(m.c * v + m.d) < 1e-8)
        throw PoleProximity();
    Cx m1 = m.d1(v), m2 = m.d2(v), m3 = m.d3(v);
    Cx v1 = base.u1, v2 = base.u2, v3 = base.u3;
    return {m.apply(v), m1 * v1, m2 * v1 * v1 + m1 * v2,
            m3 * v1 * v1 * v1 + 3.0 * m2 * v1 * v2 + m1 * v3};
}

LaurentSeries family_base_series(const SolutionFamily& fam, int nterms) {
    switch (fam.kind) {
    case FamilyKind::WP:
        return wp_series(fam.inv, nterms);
    case FamilyKind::WP_PRIME:
        return wp_series(fam.inv, nterms).derivative();
    case FamilyKind::WP2: {
        LaurentSeries p = wp_series(fam.inv, nterms);
        return p * p;
    }
    case FamilyKind::WP3: {
        LaurentSeries p = wp_series(fam.inv, nterms);
        return p * p * p;
    }
    default:
        throw Error("base series defined only for wp-backed families");
    }
}

} // namespace ellcorr

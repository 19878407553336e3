#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "ellcorr/briot.hpp"
#include "ellcorr/errors.hpp"
#include "ellcorr/rng.hpp"

using namespace ellcorr;

namespace {

double dist(Cx a, Cx b) { return std::abs(a - b); }

double max_binomial_residual(const ThmInstance& inst, int count, uint64_t tag) {
    SplitMix64 rng = SplitMix64::split(42, tag);
    auto pts = sample_family_points(inst.family, inst.eq.R, count, rng);
    double worst = 0.0;
    for (Cx z : pts)
        worst = std::max(worst, std::abs(residual_binomial(inst.eq, jet(inst.family, z))));
    return worst;
}

double fit_certificate(const LaurentSeries& u, const RationalFn& R, int k) {
    LaurentSeries rhs = ls_compose_rational(R, u);
    LaurentSeries res = ls_pow(u.derivative(), k) - rhs;
    double ref = 0.0;
    for (int e = rhs.lead(); e < std::min(rhs.order(), rhs.lead() + rhs.terms()); ++e)
        ref = std::max(ref, std::abs(rhs.coeff(e)));
    double worst = 0.0;
    for (int e = res.lead(); e < std::min(res.order(), res.lead() + res.terms()); ++e)
        worst = std::max(worst, std::abs(res.coeff(e)));
    return worst / (1.0 + ref);
}

} // namespace

TEST_CASE("binomial residual on the lattice defining identity") {
    EllipticInvariants inv{Cx(3), Cx(2)};
    Poly u = Poly::variable();
    Poly cubic = Cx(4) * (u * u * u) - Cx(3) * u - Poly::constant(Cx(2));
    BinomialEquation eq{2, RationalFn(cubic, Poly::constant(Cx(1))), Cx(0)};
    SolutionFamily fam = SolutionFamily::wp(inv);
    SplitMix64 rng(401);
    auto pts = sample_family_points(fam, eq.R, 20, rng);
    for (Cx z : pts)
        CHECK(std::abs(residual_binomial(eq, jet(fam, z))) < 1e-10);
}

TEST_CASE("binomial residual flags a constant jet") {
    BinomialEquation eq{3, RationalFn::constant(Cx(5)), Cx(0)};
    Cx r = residual_binomial(eq, {Cx(2), Cx(0), Cx(0), Cx(0)});
    CHECK(dist(r, Cx(-5.0 / 6.0)) < 1e-14);
}

TEST_CASE("cubic instance derives its invariant and certifies") {
    for (Cx L : {Cx(1), Cx(0, 2), Cx(1.5)}) {
        ThmInstance inst = thm5_instance(L);
        CHECK(inst.eq.k == 3);
        Cx expect = Cx(-4) * std::pow(L, 6) / 729.0;
        CHECK(dist(inst.derived_invariant, expect) < 1e-10 * (1.0 + std::abs(expect)));
        CHECK(max_binomial_residual(inst, 32, 5) < 1e-8);
    }
}

TEST_CASE("quartic instance derives its invariant and certifies") {
    for (Cx L : {Cx(1), Cx(0, 2), Cx(1.5)}) {
        ThmInstance inst = thm6_instance(L);
        CHECK(inst.eq.k == 4);
        Cx expect = -std::pow(L, 4) / 16.0;
        CHECK(dist(inst.derived_invariant, expect) < 1e-10 * (1.0 + std::abs(expect)));
        CHECK(max_binomial_residual(inst, 32, 6) < 1e-8);
    }
}

TEST_CASE("instances are translation invariant") {
    ThmInstance inst = thm5_instance(Cx(1.5));
    Cx z0(0.21, -0.13);
    SolutionFamily shifted = inst.family.with_shift(z0);
    SplitMix64 rng(411);
    auto pts = sample_family_points(inst.family, inst.eq.R, 10, rng);
    for (Cx z : pts) {
        DerivativeJet a = jet(inst.family, z);
        DerivativeJet b = jet(shifted, z + z0);
        CHECK(dist(a.u, b.u) < 1e-10 * (1.0 + std::abs(a.u)));
        CHECK(std::abs(residual_binomial(inst.eq, b)) < 1e-8);
    }
}

TEST_CASE("scan cross-checks the derived invariants") {
    for (Cx L : {Cx(1), Cx(1.5)}) {
        Cx expect5 = Cx(-4) * std::pow(L, 6) / 729.0;
        CHECK(dist(scan_invariant(5, L), expect5) < 1e-6 * (1.0 + std::abs(expect5)));
        Cx expect6 = -std::pow(L, 4) / 16.0;
        CHECK(dist(scan_invariant(6, L), expect6) < 1e-6 * (1.0 + std::abs(expect6)));
    }
    Cx Li(0, 2);
    CHECK(dist(scan_invariant(5, Li), Cx(256.0 / 729.0)) < 1e-6);
}

TEST_CASE("derived invariants scale homogeneously in L") {
    Cx s(1.5);
    Cx g3a = thm5_instance(Cx(1)).derived_invariant;
    Cx g3b = thm5_instance(s).derived_invariant;
    CHECK(dist(g3b, std::pow(s, 6) * g3a) < 1e-8 * (1.0 + std::abs(g3b)));
    Cx g2a = thm6_instance(Cx(1)).derived_invariant;
    Cx g2b = thm6_instance(s).derived_invariant;
    CHECK(dist(g2b, std::pow(s, 4) * g2a) < 1e-8 * (1.0 + std::abs(g2b)));
}

TEST_CASE("wrong branch of the front map fails certification") {
    CHECK(max_binomial_residual(thm6_instance_flipped(Cx(1)), 32, 7) > 1e-8);
    CHECK(max_binomial_residual(thm6_instance_flipped(Cx(0, 2)), 32, 8) > 1e-2);
    CHECK(max_binomial_residual(thm6_instance_flipped(Cx(1.5)), 32, 9) > 1e-2);
}

TEST_CASE("zero L is rejected") {
    CHECK_THROWS_AS(thm5_instance(Cx(0)), ZeroL);
    CHECK_THROWS_AS(thm6_instance(Cx(0)), ZeroL);
}

TEST_CASE("fit recovers the lattice cubic") {
    LaurentSeries u = wp_series({Cx(3), Cx(1)}, 36);
    RationalFn R = fit_binomial_from_series(u, 2, 3, 0);
    CHECK(R.den().degree() == 0);
    CHECK(dist(R.scale(), Cx(4)) < 1e-9);
    CHECK(dist(R.num().coeff(3), Cx(1)) < 1e-12);
    CHECK(dist(R.num().coeff(2), Cx(0)) < 1e-9);
    CHECK(dist(R.num().coeff(1), Cx(-0.75)) < 1e-9);
    CHECK(dist(R.num().coeff(0), Cx(-0.25)) < 1e-9);
    CHECK(fit_certificate(u, R, 2) < 1e-9);
}

TEST_CASE("fit recovers the odd profile quartic") {
    LaurentSeries u = family_base_series(SolutionFamily::wp_prime(Cx(2)), 36);
    RationalFn R = fit_binomial_from_series(u, 3, 4, 0);
    CHECK(dist(R.scale(), Cx(13.5)) < 1e-8);
    CHECK(dist(R.num().coeff(4), Cx(1)) < 1e-12);
    CHECK(dist(R.num().coeff(3), Cx(0)) < 1e-9);
    CHECK(dist(R.num().coeff(2), Cx(4)) < 1e-8);
    CHECK(dist(R.num().coeff(1), Cx(0)) < 1e-8);
    CHECK(dist(R.num().coeff(0), Cx(4)) < 1e-8);
    CHECK(fit_certificate(u, R, 3) < 1e-9);
}

TEST_CASE("fit recovers the squared profile quintic") {
    LaurentSeries u = family_base_series(SolutionFamily::wp2(Cx(5)), 36);
    RationalFn R = fit_binomial_from_series(u, 4, 5, 0);
    CHECK(dist(R.scale(), Cx(256)) < 1e-6);
    CHECK(dist(R.num().coeff(5), Cx(1)) < 1e-12);
    CHECK(dist(R.num().coeff(4), Cx(-2.5)) < 1e-9);
    CHECK(dist(R.num().coeff(3), Cx(1.5625)) < 1e-9);
    CHECK(dist(R.num().coeff(2), Cx(0)) < 1e-9);
    CHECK(fit_certificate(u, R, 4) < 1e-9);
}

TEST_CASE("fit recovers the cubed profile septic") {
    LaurentSeries u = family_base_series(SolutionFamily::wp3(Cx(1)), 36);
    RationalFn R = fit_binomial_from_series(u, 6, 7, 0);
    CHECK(dist(R.scale(), Cx(46656)) < 1e-4);
    CHECK(dist(R.num().coeff(7), Cx(1)) < 1e-12);
    CHECK(dist(R.num().coeff(6), Cx(-0.75)) < 1e-9);
    CHECK(dist(R.num().coeff(5), Cx(0.1875)) < 1e-9);
    CHECK(dist(R.num().coeff(4), Cx(-0.015625)) < 1e-9);
    CHECK(dist(R.num().coeff(3), Cx(0)) < 1e-9);
    CHECK(fit_certificate(u, R, 6) < 1e-9);
}

TEST_CASE("no cube law exists for the base lattice profile") {
    LaurentSeries u = wp_series({Cx(3), Cx(1)}, 36);
    CHECK_THROWS_AS(fit_binomial_from_series(u, 3, 4, 0), NoExactFit);
    try {
        fit_binomial_sweep(u, 3);
        FAIL("sweep should not find a cube law");
    } catch (const NoExactFit& e) {
        CHECK(e.best_residual > 0.1);
    }
}

TEST_CASE("sweep discovers the minimal degrees") {
    LaurentSeries u = wp_series({Cx(3), Cx(2)}, 36);
    RationalFn R = fit_binomial_sweep(u, 2);
    CHECK(R.num().degree() == 3);
    CHECK(R.den().degree() == 0);
    CHECK(dist(R.scale(), Cx(4)) < 1e-9);
    CHECK(dist(R.num().coeff(0), Cx(-0.5)) < 1e-9);
}

TEST_CASE("fitted exponent survives homographic moves") {
    struct Case {
        SolutionFamily fam;
        int k;
        int degN;
    };
    std::vector<Case> cases = {
        {SolutionFamily::wp({Cx(3), Cx(2)}), 2, 4},
        {SolutionFamily::wp_prime(Cx(2)), 3, 10},
        {SolutionFamily::wp2(Cx(5)), 4, 8},
        {SolutionFamily::wp3(Cx(1)), 6, 12},
    };
    SplitMix64 rng(421);
    for (const auto& c : cases) {
        LaurentSeries base = family_base_series(c.fam, 48);
        int done = 0;
        while (done < 10) {
            Cx a = rng.complex_in_square(1.0), b = rng.complex_in_square(1.0);
            Cx cc = rng.complex_in_square(1.0), d = rng.complex_in_square(1.0);
            if (std::abs(a * d - b * cc) < 0.2)
                continue;
            Mobius m(a, b, cc, d);
            LaurentSeries moved = ls_compose_rational(mobius_ratfn(m), base);
            RationalFn R = fit_binomial_from_series(moved, c.k, c.degN, 0);
            CHECK(fit_certificate(moved, R, c.k) < 1e-8);
            ++done;
        }
    }
}

TEST_CASE("correspondence table pairs the four lattice rows") {
    auto table = correspondence_table();
    REQUIRE(table.size() == 4);
    int want_k[4] = {2, 3, 4, 6};
    FamilyKind want_kind[4] = {FamilyKind::WP, FamilyKind::WP_PRIME, FamilyKind::WP2,
                               FamilyKind::WP3};
    for (int i = 0; i < 4; ++i) {
        CHECK(table[i].schwarzianRow == i + 1);
        CHECK(table[i].binomial.k == want_k[i]);
        CHECK(table[i].family.kind == want_kind[i]);
        CHECK(table[i].binomial.R.den().degree() == 0);
    }
}

TEST_CASE("correspondence breaks under an impossible tolerance") {
    try {
        correspondence_table({}, 8, 1e-30, 42);
        FAIL("tolerance cannot be met");
    } catch (const CorrespondenceBroken& e) {
        CHECK(e.row == 1);
    }
}

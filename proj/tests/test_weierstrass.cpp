#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "ellcorr/errors.hpp"
#include "ellcorr/rng.hpp"
#include "ellcorr/schwarzian.hpp"
#include "ellcorr/weierstrass.hpp"

using namespace ellcorr;

namespace {

double dist(Cx a, Cx b) { return std::abs(a - b); }

double rel(Cx a, Cx b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

} // namespace

TEST_CASE("laurent coefficients follow the quadratic recursion") {
    LaurentSeries s = wp_series({Cx(3), Cx(2)});
    CHECK(s.lead() == -2);
    CHECK(dist(s.coeff(-2), Cx(1)) == 0.0);
    CHECK(dist(s.coeff(-1), Cx(0)) == 0.0);
    CHECK(dist(s.coeff(0), Cx(0)) == 0.0);
    double c2 = 3.0 / 20.0, c3 = 2.0 / 28.0;
    CHECK(dist(s.coeff(2), Cx(c2)) < 1e-15);
    CHECK(dist(s.coeff(4), Cx(c3)) < 1e-15);
    CHECK(dist(s.coeff(6), Cx(c2 * c2 / 3.0)) < 1e-15);
    CHECK(dist(s.coeff(8), Cx(3.0 / 11.0 * c2 * c3)) < 1e-15);

    CHECK(dist(wp_series({Cx(20), Cx(0)}).coeff(2), Cx(1)) < 1e-15);
    CHECK(dist(wp_series({Cx(0), Cx(28)}).coeff(4), Cx(1)) < 1e-15);
    CHECK(dist(wp_series({Cx(0), Cx(28)}).coeff(2), Cx(0)) == 0.0);

    LaurentSeries t = wp_series({Cx(0), Cx(0)});
    CHECK(t.lead() == -2);
    CHECK(dist(t.coeff(-2), Cx(1)) == 0.0);
    CHECK(dist(t.coeff(2), Cx(0)) == 0.0);
}

TEST_CASE("evaluation inside the series radius matches the series") {
    CHECK(dist(wp_eval(Cx(0.5), {Cx(0), Cx(0)}), Cx(4)) < 1e-15);
    Cx direct = wp_series({Cx(4), Cx(0)}).eval(Cx(0.3));
    CHECK(dist(wp_eval(Cx(0.3), {Cx(4), Cx(0)}), direct) < 1e-15);

    EllipticInvariants inv{Cx(3), Cx(2)};
    Cx z(0.07, 0.07);
    CHECK(rel(wp_eval(z, inv), wp_series(inv).eval(z)) < 1e-12);
}

TEST_CASE("duplication extends evaluation beyond the series radius") {
    EllipticInvariants inv{Cx(3), Cx(2)};
    Cx z(0.41, 0.44);
    Cx far = wp_eval(z, inv);
    Cx direct = wp_series(inv, 40).eval(z);
    CHECK(rel(far, direct) < 1e-10);
}

TEST_CASE("parity in z") {
    SplitMix64 rng(201);
    int done = 0;
    while (done < 50) {
        EllipticInvariants inv{rng.complex_in_square(2.0), rng.complex_in_square(2.0)};
        Cx z = rng.complex_in_square(1.0);
        if (std::abs(z) < 0.1)
            continue;
        WpPair a, b;
        try {
            a = wp_eval_pair(z, inv);
            b = wp_eval_pair(-z, inv);
        } catch (const Error&) {
            continue;
        }
        CHECK(rel(b.p, a.p) < 1e-11);
        CHECK(rel(b.pprime, -a.pprime) < 1e-11);
        ++done;
    }
}

TEST_CASE("defining differential equation holds off the lattice") {
    SplitMix64 rng(211);
    int done = 0;
    while (done < 200) {
        EllipticInvariants inv{rng.complex_in_square(2.0), rng.complex_in_square(2.0)};
        Cx z = rng.complex_in_square(1.0);
        if (std::abs(z) < 0.05)
            continue;
        WpPair w;
        try {
            w = wp_eval_pair(z, inv);
        } catch (const Error&) {
            continue;
        }
        Cx lhs = w.pprime * w.pprime;
        Cx rhs = 4.0 * w.p * w.p * w.p - inv.g2 * w.p - inv.g3;
        double denom = 1.0 + std::pow(std::abs(w.p), 3);
        CHECK(std::abs(lhs - rhs) / denom < 1e-9);
        ++done;
    }
}

TEST_CASE("duplication formula consistency") {
    SplitMix64 rng(221);
    int done = 0;
    while (done < 50) {
        EllipticInvariants inv{rng.complex_in_square(1.5), rng.complex_in_square(1.5)};
        Cx z = rng.complex_in_square(0.6);
        if (std::abs(z) < 0.1)
            continue;
        WpPair w;
        Cx doubled;
        try {
            w = wp_eval_pair(z, inv);
            doubled = wp_eval(2.0 * z, inv);
        } catch (const Error&) {
            continue;
        }
        if (std::abs(w.pprime) < 1e-3 || std::abs(doubled) > 1e6)
            continue;
        Cx A = (6.0 * w.p * w.p - inv.g2 / 2.0) / (2.0 * w.pprime);
        CHECK(rel(A * A - 2.0 * w.p, doubled) < 1e-8);
        ++done;
    }
}

TEST_CASE("degenerate invariants reduce to a trigonometric profile") {
    EllipticInvariants inv{Cx(3), Cx(1)};
    CHECK(inv.degenerate());
    CHECK(EllipticInvariants{Cx(0), Cx(0)}.degenerate());
    CHECK(!EllipticInvariants{Cx(3), Cx(2)}.degenerate());

    Cx lam = std::sqrt(Cx(1.5));
    for (Cx z : {Cx(0.3), Cx(0.7, 0.2), Cx(1.1, -0.4)}) {
        Cx s = std::sin(lam * z);
        Cx closed = Cx(-0.5) + Cx(1.5) / (s * s);
        CHECK(rel(wp_eval(z, inv), closed) < 1e-12);
    }
}

TEST_CASE("closed form jets at rational points") {
    DerivativeJet j = jet(SolutionFamily::wp({Cx(0), Cx(0)}), Cx(1));
    CHECK(dist(j.u, Cx(1)) < 1e-12);
    CHECK(dist(j.u1, Cx(-2)) < 1e-12);
    CHECK(dist(j.u2, Cx(6)) < 1e-12);
    CHECK(dist(j.u3, Cx(-24)) < 1e-12);

    DerivativeJet e = jet(SolutionFamily::mobius_exp(Cx(2), Mobius()), Cx(0));
    CHECK(dist(e.u, Cx(1)) < 1e-14);
    CHECK(dist(e.u1, Cx(2)) < 1e-14);
    CHECK(dist(e.u2, Cx(4)) < 1e-14);
    CHECK(dist(e.u3, Cx(8)) < 1e-14);
}

TEST_CASE("jets agree with finite differences for every family kind") {
    std::vector<SolutionFamily> fams = {
        SolutionFamily::wp({Cx(4), Cx(1)}),
        SolutionFamily::wp_prime(Cx(2)),
        SolutionFamily::wp2(Cx(5)),
        SolutionFamily::wp3(Cx(1)),
        SolutionFamily::a_over_sinh(Cx(2)),
        SolutionFamily::mobius_exp(Cx(1.5), Mobius(Cx(1), Cx(1), Cx(1), Cx(-1))),
    };
    Cx z(0.41, 0.33);
    for (const auto& fam : fams) {
        DerivativeJet exact = jet(fam, z);
        DerivativeJet fd = numeric_jet([&](Cx w) { return jet(fam, w).u; }, z);
        CHECK(rel(exact.u1, fd.u1) < 1e-7);
        CHECK(rel(exact.u2, fd.u2) < 1e-7);
        CHECK(rel(exact.u3, fd.u3) < 1e-4);
    }
}

TEST_CASE("squared lattice solution satisfies its quartic first integral") {
    Cx g2(5);
    SolutionFamily fam = SolutionFamily::wp2(g2);
    SplitMix64 rng(231);
    int done = 0;
    while (done < 30) {
        Cx z = rng.complex_in_square(0.8);
        if (std::abs(z) < 0.15)
            continue;
        DerivativeJet j;
        try {
            j = jet(fam, z);
        } catch (const Error&) {
            continue;
        }
        Cx lhs = std::pow(j.u1, 4);
        Cx rhs = 16.0 * std::pow(j.u, 3) * std::pow(4.0 * j.u - g2, 2);
        CHECK(std::abs(lhs - rhs) / (1.0 + std::abs(rhs)) < 1e-8);
        ++done;
    }
}

TEST_CASE("base series leads per family") {
    CHECK(family_base_series(SolutionFamily::wp({Cx(3), Cx(2)})).lead() == -2);
    LaurentSeries dp = family_base_series(SolutionFamily::wp_prime(Cx(2)));
    CHECK(dp.lead() == -3);
    CHECK(dist(dp.leading_coeff(), Cx(-2)) == 0.0);
    LaurentSeries p2 = family_base_series(SolutionFamily::wp2(Cx(5)));
    CHECK(p2.lead() == -4);
    CHECK(dist(p2.leading_coeff(), Cx(1)) == 0.0);
    LaurentSeries p3 = family_base_series(SolutionFamily::wp3(Cx(1)));
    CHECK(p3.lead() == -6);
    CHECK(dist(p3.leading_coeff(), Cx(1)) == 0.0);
    CHECK_THROWS_AS(family_base_series(SolutionFamily::a_over_sinh(Cx(1))), Error);
}

TEST_CASE("shift moves the expansion point") {
    SolutionFamily fam = SolutionFamily::wp({Cx(3), Cx(2)});
    Cx z0(0.2, -0.1), z(0.37, 0.21);
    DerivativeJet a = jet(fam.with_shift(z0), z + z0);
    DerivativeJet b = jet(fam, z);
    CHECK(dist(a.u, b.u) < 1e-12);
    CHECK(dist(a.u1, b.u1) < 1e-11);
    CHECK(rel(a.u3, b.u3) < 1e-11);
}

TEST_CASE("pole guards") {
    CHECK_THROWS_AS(wp_eval(Cx(0), {Cx(3), Cx(2)}), PoleProximity);
    CHECK_THROWS_AS(jet(SolutionFamily::a_over_sinh(Cx(2)), Cx(0)), PoleProximity);
    SolutionFamily front =
        SolutionFamily::wp({Cx(0), Cx(0)}).with_front(Mobius(Cx(1), Cx(0), Cx(1), Cx(-1)));
    CHECK_THROWS_AS(jet(front, Cx(1)), PoleProximity);
    CHECK_THROWS_AS(SolutionFamily::mobius_exp(Cx(0), Mobius()), Error);
}

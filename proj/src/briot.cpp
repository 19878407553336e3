#include "ellcorr/briot.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "ellcorr/fuchs.hpp"

namespace ellcorr {

namespace {

Cx pow_int(Cx v, int k) {
    Cx acc(1);
    for (int i = 0; i < k; ++i)
        acc *= v;
    return acc;
}

double max_abs_coeff(const LaurentSeries& s) {
    double m = 0;
    for (int e = s.lead(); e < std::min(s.order(), s.lead() + s.terms()); ++e)
        m = std::max(m, std::abs(s.coeff(e)));
    return m;
}

RationalFn thm_rational(int which, Cx L) {
    if (which == 5) {
        Poly w{{Cx(0), Cx(-1), Cx(0), Cx(1)}}; // u^3 - u
        return RationalFn(pow_int(L, 3) * (w * w), Poly::constant(Cx(1)));
    }
    Poly u2{{Cx(0), Cx(0), Cx(1)}};
    Poly w{{Cx(-1), Cx(0), Cx(1)}}; // u^2 - 1
    return RationalFn(pow_int(L, 4) * (u2 * (w * w * w)), Poly::constant(Cx(1)));
}

Mobius thm_front(int which, Cx L, bool flipped) {
    if (which == 5) {
        Cx A = -2.0 * pow_int(L, 3) / 27.0;
        return Mobius(Cx(0), A, Cx(1), Cx(0));
    }
    Cx half = pow_int(L, 4) / 2.0;
    return flipped ? Mobius(Cx(32), -half, Cx(32), half)
                   : Mobius(Cx(32), half, Cx(32), -half);
}

LaurentSeries thm_solution_series(int which, Cx L, Cx g, bool flipped) {
    LaurentSeries base;
    if (which == 5)
        base = wp_series({Cx(0), g}).derivative();
    else {
        LaurentSeries p = wp_series({g, Cx(0)});
        base = p * p;
    }
    return ls_compose_rational(mobius_ratfn(thm_front(which, L, flipped)), base);
}

LaurentSeries thm_residual_series(int which, Cx L, Cx g, bool flipped) {
    LaurentSeries u = thm_solution_series(which, L, g, flipped);
    int k = which == 5 ? 3 : 4;
    return ls_pow(u.derivative(), k) - ls_compose_rational(thm_rational(which, L), u);
}

Cx derive_invariant(int which, Cx L) {
    LaurentSeries r0 = thm_residual_series(which, L, Cx(0), false);
    LaurentSeries r1 = thm_residual_series(which, L, Cx(1), false);
    LaurentSeries d = r1 - r0;
    double dmax = max_abs_coeff(d);
    if (dmax == 0)
        throw Error("residual is insensitive to the invariant");
    int nu = d.lead();
    while (nu < d.order() && std::abs(d.coeff(nu)) <= 1e-8 * dmax)
        ++nu;
    if (nu >= d.order())
        throw Error("no usable matching order for the invariant");

    Cx ga(0), gb(1);
    Cx fa = r0.coeff(nu), fb = r1.coeff(nu);
    for (int it = 0; it < 50 && std::abs(fb) > 1e-12 * (1.0 + dmax); ++it) {
        if (std::abs(fb - fa) == 0)
            break;
        Cx gn = gb - fb * (gb - ga) / (fb - fa);
        ga = gb;
        fa = fb;
        gb = gn;
        fb = thm_residual_series(which, L, gb, false).coeff(nu);
    }

    LaurentSeries check = thm_residual_series(which, L, gb, false);
    if (max_abs_coeff(check) > 1e-7 * (1.0 + dmax))
        throw Error("series matching left a nonzero residual");
    return gb;
}

ThmInstance make_instance(int which, Cx L, bool flipped) {
    if (L == Cx(0))
        throw ZeroL();
    Cx g = derive_invariant(which, L);
    SolutionFamily fam = which == 5 ? SolutionFamily::wp_prime(g) : SolutionFamily::wp2(g);
    fam = fam.with_front(thm_front(which, L, flipped));
    int k = which == 5 ? 3 : 4;
    return {{k, thm_rational(which, L), L}, fam, g};
}

} // namespace

Cx residual_binomial(const BinomialEquation& eq, const DerivativeJet& j) {
    Cx Ru = eq.R.eval(j.u);
    return (pow_int(j.u1, eq.k) - Ru) / (1.0 + std::abs(Ru));
}

ThmInstance thm5_instance(Cx L) { return make_instance(5, L, false); }

ThmInstance thm6_instance(Cx L) { return make_instance(6, L, false); }

ThmInstance thm6_instance_flipped(Cx L) {
    if (L == Cx(0))
        throw ZeroL();
    Cx g = derive_invariant(6, L);
    SolutionFamily fam = SolutionFamily::wp2(g).with_front(thm_front(6, L, true));
    return {{4, thm_rational(6, L), L}, fam, g};
}

Cx scan_invariant(int which, Cx L) {
    if (L == Cx(0))
        throw ZeroL();
    double range = 3.0 * std::pow(std::abs(L), which == 5 ? 6 : 4);
    auto phi = [&](double g) {
        LaurentSeries r = thm_residual_series(which, L, Cx(g), false);
        double s = 0;
        int cnt = 0;
        for (int e = r.lead(); e < r.order() && cnt < 16; ++e, ++cnt)
            s += std::norm(r.coeff(e));
        return s;
    };

    int best = 0;
    double bestv = 1e300;
    const int grid = 601;
    for (int i = 0; i < grid; ++i) {
        double g = -range + 2.0 * range * i / (grid - 1);
        double v = phi(g);
        if (v < bestv) {
            bestv = v;
            best = i;
        }
    }
    double a = -range + 2.0 * range * std::max(0, best - 1) / (grid - 1);
    double b = -range + 2.0 * range * std::min(grid - 1, best + 1) / (grid - 1);

    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = phi(x1), f2 = phi(x2);
    while (b - a > 1e-12 * (1.0 + std::abs(a) + std::abs(b))) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = phi(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = phi(x2);
        }
    }
    return Cx((a + b) / 2.0);
}

RationalFn fit_binomial_from_series(const LaurentSeries& u, int k, int degN, int degD) {
    long need = static_cast<long>(k) * (degN + degD + 3);
    if (static_cast<long>(u.order()) - u.lead() < need)
        throw Error("series carries too few provable coefficients for the fit");

    LaurentSeries W = ls_pow(u.derivative(), k);
    int top = std::max(degN, degD);
    std::vector<LaurentSeries> U(top + 1);
    U[0] = LaurentSeries::monomial(Cx(1), 0);
    for (int j = 1; j <= top; ++j)
        U[j] = U[j - 1] * u;
    std::vector<LaurentSeries> WU(degD + 1);
    for (int j = 0; j <= degD; ++j)
        WU[j] = W * U[j];

    int emin = WU[0].lead(), emax = WU[0].order();
    for (int j = 0; j <= degD; ++j) {
        emin = std::min(emin, WU[j].lead());
        emax = std::min(emax, WU[j].order());
    }
    for (int j = 0; j <= degN; ++j) {
        emin = std::min(emin, U[j].lead());
        emax = std::min(emax, U[j].order());
    }
    int unknowns = degN + 1 + degD;
    int rows = emax - emin;
    if (rows < unknowns + 2)
        throw Error("series window too small for the fit degrees");

    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(rows, unknowns);
    Eigen::VectorXcd b(rows);
    for (int r = 0; r < rows; ++r) {
        int e = emin + r;
        b(r) = -WU[degD].coeff(e);
        for (int j = 0; j < degD; ++j)
            A(r, j) = WU[j].coeff(e);
        for (int j = 0; j <= degN; ++j)
            A(r, degD + j) = -U[j].coeff(e);
    }
    Eigen::VectorXcd x = A.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
    double resid = (A * x - b).lpNorm<Eigen::Infinity>();
    double rel = resid / (1.0 + b.lpNorm<Eigen::Infinity>());
    if (rel > 1e-6)
        throw NoExactFit(rel);

    std::vector<Cx> dc(degD + 1), nc(degN + 1);
    for (int j = 0; j < degD; ++j)
        dc[j] = x(j);
    dc[degD] = Cx(1);
    for (int j = 0; j <= degN; ++j)
        nc[j] = x(degD + j);
    return RationalFn(Poly(std::move(nc)), Poly(std::move(dc)));
}

RationalFn fit_binomial_sweep(const LaurentSeries& u, int k, int maxN, int maxD) {
    double best = 1e300;
    for (int total = 0; total <= maxN + maxD; ++total) {
        for (int degN = std::min(total, maxN); degN >= 0; --degN) {
            int degD = total - degN;
            if (degD < 0 || degD > maxD)
                continue;
            if (static_cast<long>(u.order()) - u.lead() <
                static_cast<long>(k) * (degN + degD + 3))
                continue;
            try {
                return fit_binomial_from_series(u, k, degN, degD);
            } catch (const NoExactFit& e) {
                best = std::min(best, e.best_residual);
            }
        }
    }
    throw NoExactFit(best);
}

std::vector<CorrespondenceEntry> correspondence_table(const RowParams& params, int samples,
                                                      double tol, uint64_t seed) {
    static const int ks[4] = {2, 3, 4, 6};
    static const int degNs[4] = {3, 4, 5, 7};
    std::vector<CorrespondenceEntry> out;
    for (int row = 1; row <= 4; ++row) {
        CanonicalRow cr = canonical_row(row, params);
        LaurentSeries base = family_base_series(cr.family, 36);
        RationalFn R;
        try {
            R = fit_binomial_from_series(base, ks[row - 1], degNs[row - 1], 0);
        } catch (const NoExactFit&) {
            R = fit_binomial_sweep(base, ks[row - 1]);
        }
        BinomialEquation beq{ks[row - 1], R, Cx(0)};

        SplitMix64 rng = SplitMix64::split(seed, 100 + row);
        std::vector<Cx> pts = sample_family_points(cr.family, cr.eq.R, samples, rng);
        for (Cx z : pts) {
            DerivativeJet j = jet(cr.family, z);
            if (std::abs(residual(cr, z)) >= tol || std::abs(residual_binomial(beq, j)) >= tol)
                throw CorrespondenceBroken(row);
        }
        out.push_back({row, beq, cr.family});
    }
    return out;
}

} // namespace ellcorr

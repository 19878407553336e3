#include "ellcorr/fuchs.hpp"

#include <algorithm>
#include <cmath>

namespace ellcorr {

namespace {

DualSeries ds_scale(const DualSeries& s, Cx c) { return {s.val.scaled(c), s.dir.scaled(c)}; }

std::vector<DominantBalance> balances_in_variable(int p, const RationalFn& R) {
    std::vector<DominantBalance> out;
    int diff = R.num().degree() - R.den().degree();
    if (diff <= 0)
        return out;
    for (int q = -8; q <= -2; ++q) {
        if (q * diff != -2 * p)
            continue;
        double lead = (1.0 - static_cast<double>(q) * q) / 2.0;
        Cx t = Cx(1);
        for (int k = 0; k < p; ++k)
            t *= lead;
        t /= R.scale();
        if (diff == 1) {
            out.push_back({q, t});
        } else if (diff == 2) {
            Cx s = std::sqrt(t);
            out.push_back({q, s});
            out.push_back({q, -s});
        } else {
            double mag = std::pow(std::abs(t), 1.0 / diff);
            double ph = std::arg(t) / diff;
            for (int k = 0; k < diff; ++k)
                out.push_back({q, std::polar(mag, ph + 2.0 * M_PI * k / diff)});
        }
    }
    return out;
}

void sort_balances(std::vector<DominantBalance>& v) {
    std::stable_sort(v.begin(), v.end(), [](const DominantBalance& a, const DominantBalance& b) {
        if (a.q != b.q)
            return a.q < b.q;
        if (a.u0.real() != b.u0.real())
            return a.u0.real() < b.u0.real();
        return a.u0.imag() < b.u0.imag();
    });
}

struct StepRead {
    Cx E, P;
};

StepRead linearized_coeff(int p, const RationalFn& R, const LaurentSeries& at, int dirExp,
                          int readExp) {
    DualSeries U{at, LaurentSeries::monomial(Cx(1), dirExp)};
    DualSeries G = ds_pow(ds_schwarzian(U), p) * ds_compose_poly(R.den(), U) -
                   ds_scale(ds_compose_poly(R.num(), U), R.scale());
    return {G.val.coeff(readExp), G.dir.coeff(readExp)};
}

} // namespace

std::vector<DominantBalance> dominant_balances(const SchwarzianEquation& eq) {
    if (eq.R.is_zero() || eq.R.is_constant())
        throw NoBalanceFound();
    std::vector<DominantBalance> out = balances_in_variable(eq.p, eq.R);
    if (out.empty() && eq.R.den().degree() > 0) {
        std::vector<Cx> seen;
        for (Cx tau : eq.R.den().roots()) {
            bool dup = std::any_of(seen.begin(), seen.end(),
                                   [&](Cx s) { return std::abs(s - tau) < 1e-8; });
            if (dup)
                continue;
            seen.push_back(tau);
            RationalFn moved = eq.R.compose(Mobius(tau, Cx(1), Cx(1), Cx(0)));
            for (DominantBalance b : balances_in_variable(eq.p, moved)) {
                b.charted = true;
                b.chart = Mobius(Cx(0), Cx(1), Cx(1), -tau);
                out.push_back(b);
            }
        }
    }
    if (out.empty())
        throw NoBalanceFound();
    sort_balances(out);
    return out;
}

SchwarzianEquation chart_equation(const SchwarzianEquation& eq, const DominantBalance& bal) {
    if (!bal.charted)
        return eq;
    return {eq.p, eq.R.compose(bal.chart.inverse())};
}

LaurentSeries local_series(const SchwarzianEquation& eq, const DominantBalance& bal, int n) {
    if (n < 1)
        throw Error("local series needs at least one correction order");
    SchwarzianEquation weq = chart_equation(eq, bal);
    int q = bal.q;
    int rho = q * weq.R.den().degree() - 2 * weq.p;
    std::vector<Cx> a{bal.u0};
    double pmax = 0;
    for (int step = 1; step <= n; ++step) {
        LaurentSeries partial =
            LaurentSeries::from_coeffs(q, a, LaurentSeries::kExact).truncated(q + step + 1);
        auto [E, P] = linearized_coeff(weq.p, weq.R, partial, q + step, rho + step);
        double ref = 1.0 + pmax;
        if (std::abs(P) < 1e-8 * ref) {
            if (std::abs(E) >= 1e-8 * ref)
                throw ResonanceObstruction(step);
            a.push_back(Cx(0));
        } else {
            a.push_back(-E / P);
        }
        pmax = std::max(pmax, std::abs(P));
    }
    return LaurentSeries::from_coeffs(q, std::move(a), q + n + 1);
}

IndicialPolynomial indicial_polynomial(const SchwarzianEquation& eq, const DominantBalance& bal,
                                       const LaurentSeries& s) {
    return indicial_polynomial_sampled(eq, bal, s, {10, 11, 12, 13, 14});
}

IndicialPolynomial indicial_polynomial_sampled(const SchwarzianEquation& eq,
                                               const DominantBalance& bal, const LaurentSeries& s,
                                               const std::array<int, 5>& js) {
    if (s.lead() != bal.q || std::abs(s.leading_coeff() - bal.u0) > 1e-8)
        throw Error("series does not start from the given balance");
    SchwarzianEquation weq = chart_equation(eq, bal);
    int q = bal.q;
    int rho = q * weq.R.den().degree() - 2 * weq.p;
    LaurentSeries point = LaurentSeries::monomial(bal.u0, q);

    Cx pv[5];
    for (int i = 0; i < 5; ++i)
        pv[i] = linearized_coeff(weq.p, weq.R, point, q + js[i], rho + js[i]).P;

    Poly cubic{};
    for (int i = 0; i < 4; ++i) {
        Poly basis = Poly::constant(Cx(1));
        for (int k = 0; k < 4; ++k) {
            if (k == i)
                continue;
            basis = (1.0 / Cx(js[i] - js[k])) * (basis * Poly{{Cx(-js[k]), Cx(1)}});
        }
        cubic = cubic + pv[i] * basis;
    }
    if (std::abs(cubic.eval(Cx(js[4])) - pv[4]) > 1e-6 * std::max(1.0, std::abs(pv[4])))
        throw InterpolationUnstable();
    double maxc = 0;
    for (int k = 0; k <= 3; ++k)
        maxc = std::max(maxc, std::abs(cubic.coeff(k)));
    Cx lead = cubic.coeff(3);
    if (std::abs(lead) <= 1e-12 * maxc)
        throw InterpolationUnstable();

    IndicialPolynomial out;
    for (int k = 0; k <= 3; ++k)
        out.coeffs[k] = cubic.coeff(k) / lead;
    out.coeffs[3] = Cx(1);
    std::vector<Cx> roots = Poly({out.coeffs[0], out.coeffs[1], out.coeffs[2], out.coeffs[3]}).roots();
    for (int k = 0; k < 3; ++k)
        out.roots[k] = roots[k];
    return out;
}

int free_constant_count(const std::array<Cx, 3>& indices,
                        const std::vector<int>& passing_resonances) {
    for (int level : passing_resonances) {
        bool matches = std::any_of(indices.begin(), indices.end(), [&](Cx r) {
            return std::abs(r - Cx(level)) < 1e-6;
        });
        if (!matches)
            throw Error("resonance level is not an index of the balance");
    }
    return 1 + static_cast<int>(passing_resonances.size());
}

FuchsReport fuchs_report(const SchwarzianEquation& eq) {
    FuchsReport rep;
    std::vector<DominantBalance> balances;
    try {
        balances = dominant_balances(eq);
    } catch (const NoBalanceFound&) {
        rep.note = "no pole balance; constant right side, three-parameter homographic family";
        return rep;
    }
    for (const DominantBalance& bal : balances) {
        BalanceAnalysis ba;
        ba.bal = bal;
        ba.series = local_series(eq, bal, 12);
        ba.indicial = indicial_polynomial(eq, bal, ba.series);
        ba.K = -ba.indicial.coeffs[0].real();

        int minus_one = 0;
        double best = 1e300;
        for (int k = 0; k < 3; ++k) {
            double d = std::abs(ba.indicial.roots[k] + Cx(1));
            if (d < best) {
                best = d;
                minus_one = k;
            }
        }
        ba.integer_index_count = 0;
        ba.indices_nonintegral = true;
        std::vector<int> passing;
        for (int k = 0; k < 3; ++k) {
            if (k == minus_one)
                continue;
            Cx r = ba.indicial.roots[k];
            double nearest = std::round(r.real());
            double dist = std::abs(r - Cx(nearest));
            if (dist < 1e-6) {
                ++ba.integer_index_count;
                if (nearest >= 0)
                    passing.push_back(static_cast<int>(nearest));
            }
            if (dist <= 0.2)
                ba.indices_nonintegral = false;
        }
        ba.free_constants = free_constant_count(ba.indicial.roots, passing);
        rep.balances.push_back(std::move(ba));
    }
    return rep;
}

} // namespace ellcorr

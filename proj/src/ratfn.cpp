#include "ellcorr/ratfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ellcorr/mobius.hpp"

namespace ellcorr {

namespace {
constexpr double kClusterTol = 1e-10;
}

RationalFn::RationalFn(Poly num, Poly den) {
    if (den.is_zero())
        throw Error("rational function with zero denominator");
    if (num.is_zero()) {
        scale_ = Cx(0);
        num_ = Poly{};
        den_ = Poly::constant(Cx(1));
        return;
    }
    scale_ = num.leading() / den.leading();
    num_ = num.monic();
    den_ = den.monic();

    if (num_.degree() > 0 && den_.degree() > 0) {
        std::vector<Cx> nr = num_.roots();
        std::vector<Cx> dr = den_.roots();
        bool cancelled = false;
        for (auto it = nr.begin(); it != nr.end();) {
            auto match = std::find_if(dr.begin(), dr.end(), [&](Cx d) {
                return std::abs(d - *it) < kClusterTol * (1.0 + std::abs(*it));
            });
            if (match != dr.end()) {
                dr.erase(match);
                it = nr.erase(it);
                cancelled = true;
            } else {
                ++it;
            }
        }
        if (cancelled) {
            num_ = nr.empty() ? Poly::constant(Cx(1)) : poly_from_roots(nr, Cx(1));
            den_ = dr.empty() ? Poly::constant(Cx(1)) : poly_from_roots(dr, Cx(1));
        }
    }
}

RationalFn RationalFn::constant(Cx v) {
    return RationalFn(Poly::constant(v), Poly::constant(Cx(1)));
}

RationalFn RationalFn::variable() {
    return RationalFn(Poly::variable(), Poly::constant(Cx(1)));
}

RationalFn RationalFn::from_parts(Cx scale, Poly monic_num, Poly monic_den) {
    return RationalFn(scale * monic_num, monic_den);
}

Cx RationalFn::eval(Cx u) const {
    if (is_zero())
        return Cx(0);
    Cx d = den_.eval(u);
    if (std::abs(d) < 1e-300)
        throw PoleAt(u);
    return scale_ * num_.eval(u) / d;
}

RationalFn RationalFn::derivative() const {
    if (is_zero() || is_constant())
        return RationalFn::constant(Cx(0));
    Poly n = scale_ * num_;
    return RationalFn(n.derivative() * den_ - n * den_.derivative(), den_ * den_);
}

RationalFn RationalFn::compose(const Mobius& m) const {
    if (is_zero())
        return *this;
    Poly up{{m.b, m.a}};   // a*u + b
    Poly down{{m.d, m.c}}; // c*u + d
    int L = std::max(num_.degree(), den_.degree());
    auto lift = [&](const Poly& p) {
        Poly acc{};
        for (int k = 0; k <= p.degree(); ++k)
            acc = acc + p.coeff(k) * (up.pow(k) * down.pow(L - k));
        return acc;
    };
    return RationalFn(scale_ * lift(num_), lift(den_));
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.scale_ * (a.num_ * b.den_) + b.scale_ * (b.num_ * a.den_),
                      a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return a + RationalFn::constant(Cx(-1)) * b;
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero())
        return RationalFn::constant(Cx(0));
    return RationalFn((a.scale_ * b.scale_) * (a.num_ * b.num_), a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero())
        throw Error("division by identically zero rational function");
    if (a.is_zero())
        return a;
    return RationalFn((a.scale_ / b.scale_) * (a.num_ * b.den_), a.den_ * b.num_);
}

RationalFn RationalFn::pow(int n) const {
    if (n == 0)
        return RationalFn::constant(Cx(1));
    if (n < 0)
        return RationalFn::constant(Cx(1)) / this->pow(-n);
    RationalFn acc = *this;
    for (int k = 1; k < n; ++k)
        acc = acc * *this;
    return acc;
}

RationalFn mobius_ratfn(const Mobius& m) {
    return RationalFn(Poly{{m.b, m.a}}, Poly{{m.d, m.c}});
}

double RationalFn::distance(const RationalFn& b) const {
    if (is_zero() && b.is_zero())
        return 0.0;
    if (num_.degree() != b.num_.degree() || den_.degree() != b.den_.degree())
        return std::numeric_limits<double>::infinity();
    double d = std::abs(scale_ - b.scale_) / (1.0 + std::abs(scale_));
    for (int k = 0; k <= num_.degree(); ++k)
        d = std::max(d, std::abs(num_.coeff(k) - b.num_.coeff(k)));
    for (int k = 0; k <= den_.degree(); ++k)
        d = std::max(d, std::abs(den_.coeff(k) - b.den_.coeff(k)));
    return d;
}

} // namespace ellcorr

#include "ellcorr/laurent.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace ellcorr {

namespace {

int sat(long long v) {
    long long cap = LaurentSeries::kExact;
    return static_cast<int>(std::min(v, cap));
}

} // namespace

LaurentSeries LaurentSeries::zero(int order) {
    LaurentSeries s;
    s.lead_ = order;
    s.order_ = order;
    return s;
}

LaurentSeries LaurentSeries::monomial(Cx c, int e) {
    if (c == Cx(0))
        return LaurentSeries();
    LaurentSeries s;
    s.lead_ = e;
    s.order_ = kExact;
    s.coeffs_ = {c};
    return s;
}

LaurentSeries LaurentSeries::from_coeffs(int lead, std::vector<Cx> coeffs, int order) {
    size_t start = 0;
    while (start < coeffs.size() && coeffs[start] == Cx(0))
        ++start;
    coeffs.erase(coeffs.begin(), coeffs.begin() + start);
    lead += static_cast<int>(start);
    if (order < kExact && !coeffs.empty()) {
        int keep = order - lead;
        if (keep <= 0)
            coeffs.clear();
        else if (keep < static_cast<int>(coeffs.size()))
            coeffs.resize(keep);
    }
    LaurentSeries s;
    s.order_ = order;
    s.lead_ = coeffs.empty() ? order : lead;
    s.coeffs_ = std::move(coeffs);
    return s;
}

Cx LaurentSeries::coeff(int e) const {
    if (e >= order_)
        throw Error("series coefficient requested at or beyond truncation order");
    if (coeffs_.empty() || e < lead_ || e >= lead_ + terms())
        return Cx(0);
    return coeffs_[e - lead_];
}

LaurentSeries LaurentSeries::truncated(int new_order) const {
    if (new_order > order_)
        throw Error("truncation cannot extend the provable order");
    std::vector<Cx> kept;
    for (int k = 0; k < terms() && lead_ + k < new_order; ++k)
        kept.push_back(coeffs_[k]);
    if (!coeffs_.empty() && kept.empty())
        throw EmptyTruncation();
    return from_coeffs(coeffs_.empty() ? new_order : lead_, std::move(kept), new_order);
}

LaurentSeries LaurentSeries::derivative() const {
    int ord = is_exact() ? kExact : order_ - 1;
    std::vector<Cx> d(coeffs_.size());
    for (int k = 0; k < terms(); ++k)
        d[k] = static_cast<double>(lead_ + k) * coeffs_[k];
    return from_coeffs(lead_ - 1, std::move(d), ord);
}

LaurentSeries LaurentSeries::reciprocal() const {
    if (coeffs_.empty() || std::abs(coeffs_[0]) <= 1e-300)
        throw DivisionByZeroSeries();
    int n = is_exact() ? (terms() == 1 ? 1 : kDefaultTerms) : order_ - lead_;
    std::vector<Cx> c(n);
    c[0] = 1.0 / coeffs_[0];
    for (int k = 1; k < n; ++k) {
        Cx acc(0);
        for (int j = 1; j <= k && j < terms() + 0; ++j)
            acc += (j < terms() ? coeffs_[j] : Cx(0)) * c[k - j];
        c[k] = -acc / coeffs_[0];
    }
    int ord = (is_exact() && terms() == 1) ? kExact : -lead_ + n;
    return from_coeffs(-lead_, std::move(c), ord);
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries s = *this;
    s.lead_ = sat(static_cast<long long>(s.lead_) + k);
    s.order_ = sat(static_cast<long long>(s.order_) + k);
    return s;
}

LaurentSeries LaurentSeries::scaled(Cx s) const {
    if (s == Cx(0))
        return is_exact() ? LaurentSeries() : zero(order_);
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_)
        c *= s;
    return r;
}

Cx LaurentSeries::eval(Cx z) const {
    Cx acc(0);
    for (int k = 0; k < terms(); ++k)
        acc += coeffs_[k] * std::pow(z, Cx(lead_ + k));
    return acc;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    int ord = std::min(a.order_, b.order_);
    int lead = std::min(a.lead(), b.lead());
    if (a.is_zero() && b.is_zero())
        return LaurentSeries::zero(ord);
    int a_end = a.is_zero() ? INT_MIN : a.lead_ + a.terms();
    int b_end = b.is_zero() ? INT_MIN : b.lead_ + b.terms();
    int top = std::min(ord, std::max(a_end, b_end));
    if (top <= lead)
        return LaurentSeries::zero(ord);
    std::vector<Cx> c(top - lead, Cx(0));
    for (int k = 0; k < a.terms(); ++k)
        if (a.lead_ + k < top)
            c[a.lead_ + k - lead] += a.coeffs_[k];
    for (int k = 0; k < b.terms(); ++k)
        if (b.lead_ + k < top)
            c[b.lead_ + k - lead] += b.coeffs_[k];
    return LaurentSeries::from_coeffs(lead, std::move(c), ord);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + b.scaled(Cx(-1));
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    long long cap = LaurentSeries::kExact;
    long long oa = a.is_exact() ? cap : static_cast<long long>(a.order_) + b.lead();
    long long ob = b.is_exact() ? cap : static_cast<long long>(b.order_) + a.lead();
    int ord = sat(std::min(oa, ob));
    if (a.is_zero() || b.is_zero())
        return LaurentSeries::zero(ord);
    int lead = a.lead_ + b.lead_;
    int top = std::min(ord, lead + a.terms() + b.terms() - 1);
    if (top <= lead)
        return LaurentSeries::zero(ord);
    std::vector<Cx> c(top - lead, Cx(0));
    for (int i = 0; i < a.terms(); ++i)
        for (int j = 0; j < b.terms(); ++j)
            if (i + j < top - lead)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentSeries::from_coeffs(lead, std::move(c), ord);
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
    return a * b.reciprocal();
}

LaurentSeries ls_pow(const LaurentSeries& s, int n) {
    if (n == 0)
        return LaurentSeries::monomial(Cx(1), 0);
    if (n < 0)
        return ls_pow(s, -n).reciprocal();
    LaurentSeries acc = s;
    for (int k = 1; k < n; ++k)
        acc = acc * s;
    return acc;
}

LaurentSeries ls_compose_poly(const Poly& p, const LaurentSeries& s) {
    LaurentSeries acc;
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * s + LaurentSeries::monomial(p.coeff(k), 0);
    return acc;
}

LaurentSeries ls_compose_rational(const RationalFn& r, const LaurentSeries& s) {
    if (r.is_zero())
        return LaurentSeries();
    LaurentSeries num = ls_compose_poly(r.num(), s).scaled(r.scale());
    if (r.den().degree() <= 0)
        return num;
    return num / ls_compose_poly(r.den(), s);
}

LaurentSeries ls_schwarzian(const LaurentSeries& s) {
    LaurentSeries d1 = s.derivative();
    if (d1.is_zero())
        throw ConstantSeries();
    LaurentSeries d2 = d1.derivative();
    LaurentSeries d3 = d2.derivative();
    LaurentSeries ratio = d2 / d1;
    return d3 / d1 - (ratio * ratio).scaled(Cx(1.5));
}

DualSeries ds_pow(const DualSeries& s, int n) {
    if (n <= 0)
        throw Error("dual series power expects a positive exponent");
    DualSeries acc = s;
    for (int k = 1; k < n; ++k)
        acc = acc * s;
    return acc;
}

DualSeries ds_compose_poly(const Poly& p, const DualSeries& s) {
    DualSeries acc = DualSeries::lift(LaurentSeries());
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * s + DualSeries::lift(LaurentSeries::monomial(p.coeff(k), 0));
    return acc;
}

DualSeries ds_schwarzian(const DualSeries& s) {
    DualSeries d1 = s.derivative();
    if (d1.val.is_zero())
        throw ConstantSeries();
    DualSeries d2 = d1.derivative();
    DualSeries d3 = d2.derivative();
    DualSeries ratio = d2 / d1;
    DualSeries sq = ratio * ratio;
    return d3 / d1 - DualSeries{sq.val.scaled(Cx(1.5)), sq.dir.scaled(Cx(1.5))};
}

} // namespace ellcorr

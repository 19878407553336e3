#pragma once

#include <vector>

#include "ellcorr/ratfn.hpp"

namespace ellcorr {

/// Truncated Laurent series: sum of coeffs[k] * z^(lead+k) plus an error
/// term O(z^order). Exact series (polynomials in z and 1/z) carry the
/// sentinel order kExact and no error term. Arithmetic propagates the
/// provable order conservatively; coefficients are never thresholded.
class LaurentSeries {
  public:
    static constexpr int kExact = 1 << 28;
    static constexpr int kDefaultTerms = 24;

    LaurentSeries() : lead_(kExact), order_(kExact) {}
    static LaurentSeries zero(int order);
    static LaurentSeries monomial(Cx c, int e);
    static LaurentSeries from_coeffs(int lead, std::vector<Cx> coeffs, int order);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_exact() const { return order_ >= kExact; }
    /// Exponent of the first stored coefficient; equals order() for a zero
    /// series (no terms before the error window).
    int lead() const { return coeffs_.empty() ? order_ : lead_; }
    int order() const { return order_; }
    int terms() const { return static_cast<int>(coeffs_.size()); }
    Cx leading_coeff() const { return coeffs_.empty() ? Cx(0) : coeffs_.front(); }
    /// Coefficient of z^e; exponents at or beyond the truncation order are
    /// not provable and raise an error.
    Cx coeff(int e) const;

    LaurentSeries truncated(int new_order) const;
    LaurentSeries derivative() const;
    LaurentSeries reciprocal() const;
    LaurentSeries shifted(int k) const;
    LaurentSeries scaled(Cx s) const;
    Cx eval(Cx z) const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

  private:
    int lead_;
    int order_;
    std::vector<Cx> coeffs_;
};

LaurentSeries ls_pow(const LaurentSeries& s, int n);
LaurentSeries ls_compose_poly(const Poly& p, const LaurentSeries& s);
LaurentSeries ls_compose_rational(const RationalFn& r, const LaurentSeries& s);
/// Schwarzian derivative s'''/s' - (3/2)(s''/s')^2 in series arithmetic.
LaurentSeries ls_schwarzian(const LaurentSeries& s);

/// First-order jet of a series under perturbation: val + eps * dir with
/// eps^2 = 0. Drives the Frechet linearization used by the index analysis.
struct DualSeries {
    LaurentSeries val, dir;

    static DualSeries lift(LaurentSeries v) { return {std::move(v), LaurentSeries()}; }

    DualSeries derivative() const { return {val.derivative(), dir.derivative()}; }

    friend DualSeries operator+(const DualSeries& a, const DualSeries& b) {
        return {a.val + b.val, a.dir + b.dir};
    }
    friend DualSeries operator-(const DualSeries& a, const DualSeries& b) {
        return {a.val - b.val, a.dir - b.dir};
    }
    friend DualSeries operator*(const DualSeries& a, const DualSeries& b) {
        return {a.val * b.val, a.val * b.dir + a.dir * b.val};
    }
    friend DualSeries operator/(const DualSeries& a, const DualSeries& b) {
        LaurentSeries q = a.val / b.val;
        return {q, a.dir / b.val - q * (b.dir / b.val)};
    }
};

DualSeries ds_pow(const DualSeries& s, int n);
DualSeries ds_compose_poly(const Poly& p, const DualSeries& s);
DualSeries ds_schwarzian(const DualSeries& s);

} // namespace ellcorr

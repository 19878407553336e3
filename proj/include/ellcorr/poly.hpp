#pragma once

#include <vector>

#include "ellcorr/errors.hpp"

namespace ellcorr {

/// Dense univariate polynomial over complex doubles, coefficients in
/// ascending degree order. Trailing coefficient is nonzero unless the
/// polynomial is zero. Degrees stay small here (<= ~8).
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Cx> coeffs) : c_(coeffs) { strip(); }
    explicit Poly(std::vector<Cx> coeffs) : c_(std::move(coeffs)) { strip(); }
    static Poly constant(Cx v) { return Poly{{v}}; }
    static Poly variable() { return Poly{{Cx(0), Cx(1)}}; }

    bool is_zero() const { return c_.empty(); }
    /// degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Cx>& coeffs() const { return c_; }
    Cx coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Cx(0); }
    Cx leading() const { return c_.empty() ? Cx(0) : c_.back(); }

    Cx eval(Cx u) const;

    Poly derivative() const;
    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Cx s, const Poly& a);
    Poly pow(int n) const;

    /// Synthetic division by (u - r); remainder discarded.
    Poly deflate(Cx r) const;

    /// All roots with multiplicity, via the companion matrix, Newton-polished.
    std::vector<Cx> roots() const;

  private:
    void strip();
    std::vector<Cx> c_;
};

/// Product of (u - r) over the given roots, times scale.
Poly poly_from_roots(const std::vector<Cx>& roots, Cx scale);

/// Jet of p at u: value and first three derivatives (for chain-rule work).
struct PolyJet {
    Cx v, d1, d2, d3;
};
PolyJet poly_jet(const Poly& p, Cx u);

} // namespace ellcorr

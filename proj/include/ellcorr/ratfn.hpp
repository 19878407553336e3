#pragma once

#include "ellcorr/poly.hpp"

namespace ellcorr {

struct Mobius;

/// Rational function scale * num/den with num, den monic.
/// Common near-roots of num and den are cancelled on construction
/// (cluster tolerance 1e-10), which keeps degrees honest after the
/// small-degree arithmetic done in this project.
class RationalFn {
  public:
    RationalFn() : scale_(0), num_{}, den_{Poly::constant(Cx(1))} {}
    RationalFn(Poly num, Poly den);
    static RationalFn constant(Cx v);
    static RationalFn variable();
    static RationalFn from_parts(Cx scale, Poly monic_num, Poly monic_den);

    Cx scale() const { return scale_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return scale_ == Cx(0); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

    /// Throws PoleAt when u hits a zero of the denominator.
    Cx eval(Cx u) const;

    RationalFn derivative() const;
    /// R(m(u)) as a rational function of u.
    RationalFn compose(const Mobius& m) const;

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    RationalFn pow(int n) const; // n may be negative

    /// Max coefficient-wise distance to b after matching scales; large when
    /// shapes differ. Used by tests and the exact-fit search.
    double distance(const RationalFn& b) const;

  private:
    Cx scale_;
    Poly num_, den_; // monic (or zero num when scale_ == 0)
};

/// (a u + b)/(c u + d) as a rational function.
RationalFn mobius_ratfn(const Mobius& m);

} // namespace ellcorr

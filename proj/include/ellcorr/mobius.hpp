#pragma once

#include "ellcorr/errors.hpp"

namespace ellcorr {

/// Fractional linear map u -> (a u + b)/(c u + d), kept normalized so the
/// largest-magnitude entry equals 1. Construction rejects |det| <= 1e-12
/// after normalization.
struct Mobius {
    Cx a{1}, b{0}, c{0}, d{1};

    Mobius() = default;
    Mobius(Cx a_, Cx b_, Cx c_, Cx d_);

    Cx det() const { return a * d - b * c; }
    Cx apply(Cx u) const;
    Mobius inverse() const;
    /// this after m, i.e. u -> this(m(u)).
    Mobius compose(const Mobius& m) const;

    /// First three derivatives of the map at v (for jet transport).
    Cx d1(Cx v) const;
    Cx d2(Cx v) const;
    Cx d3(Cx v) const;
};

} // namespace ellcorr

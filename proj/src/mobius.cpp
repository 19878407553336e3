#include "ellcorr/mobius.hpp"

#include <algorithm>
#include <cmath>

namespace ellcorr {

Mobius::Mobius(Cx a_, Cx b_, Cx c_, Cx d_) : a(a_), b(b_), c(c_), d(d_) {
    double m = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (m == 0.0)
        throw DegenerateMobius();
    a /= m;
    b /= m;
    c /= m;
    d /= m;
    if (std::abs(det()) <= 1e-12)
        throw DegenerateMobius();
}

Cx Mobius::apply(Cx u) const {
    Cx down = c * u + d;
    if (std::abs(down) < 1e-300)
        throw PoleAt(u);
    return (a * u + b) / down;
}

Mobius Mobius::inverse() const { return Mobius(d, -b, -c, a); }

Mobius Mobius::compose(const Mobius& m) const {
    return Mobius(a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c, c * m.b + d * m.d);
}

Cx Mobius::d1(Cx v) const {
    Cx down = c * v + d;
    return det() / (down * down);
}

Cx Mobius::d2(Cx v) const {
    Cx down = c * v + d;
    return -2.0 * c * det() / (down * down * down);
}

Cx Mobius::d3(Cx v) const {
    Cx down = c * v + d;
    return 6.0 * c * c * det() / (down * down * down * down);
}

} // namespace ellcorr

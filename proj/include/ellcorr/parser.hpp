#pragma once

#include <string>
#include <string_view>

#include "ellcorr/ratfn.hpp"

namespace ellcorr {

/// Parses field expressions in the variable u: numbers (with optional `i`
/// suffix), `i`, `u`, `+ - * / ^`, parentheses. Multiplication is always
/// explicit. Exponents must reduce to nonnegative integers; anything else
/// after `^` raises NonRational with the offending offset.
RationalFn parse_rational(std::string_view text);

/// Same grammar restricted to constants, e.g. "1.5-2i" for CLI arguments.
Cx parse_complex(std::string_view text);

std::string format_complex(Cx v);

/// Round-trippable canonical form: scale prefix, monic numerator and
/// denominator in descending powers, %.17g literals.
std::string format_rational(const RationalFn& r);

} // namespace ellcorr

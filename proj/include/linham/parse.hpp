#pragma once

#include <string>

#include "linham/ratfunc.hpp"

namespace linham {

// Parses the coefficient grammar: integer/rational literals, `i`, `t`,
// `+ - * / ^ ( )`.  Raises ParseError with a column position on malformed
// input and UnsupportedFunction on identifiers or fractional exponents
// (ramified coverings such as sqrt(t) are out of scope).
RatFunc parse_ratfunc(const std::string& text);

// Same grammar restricted to constants (no `t`).
GaussianRational parse_gaussian(const std::string& text);

} // namespace linham

#pragma once

#include <string>

#include "betasum/ratfunc.hpp"

namespace betasum {

// "2 s^2 - s + 3" style, descending powers, unit coefficients omitted.
std::string poly_to_string(const PolyQ& p, const std::string& var);

// "num / den" with parentheses only where spacing demands them; a trivial
// denominator renders as the numerator alone.
std::string ratfunc_to_string(const RatFuncQ& r, const std::string& var);

}  // namespace betasum

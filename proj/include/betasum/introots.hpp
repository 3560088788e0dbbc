#pragma once

#include <vector>

#include "betasum/integer.hpp"
#include "betasum/poly.hpp"

namespace betasum {

// All integer roots of a nonzero rational polynomial, ascending and
// without repetition.  Exact: Sturm-chain isolation over half-integer
// endpoints, then evaluation at the single integer candidate per cell.
std::vector<Int> integer_roots(const PolyQ& p);

}  // namespace betasum

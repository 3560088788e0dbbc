#pragma once

#include <initializer_list>
#include <span>

#include "betasum/integer.hpp"

namespace betasum {

// n! for n >= 0; throws std::domain_error for negative n.
Int factorial(long n);

// Binomial coefficient with the zero convention: n must be >= 0 (throws
// otherwise), and the value is 0 whenever r < 0 or r > n.
Int binomial(long n, long r);

// Multinomial coefficient (sum r_i)! / prod r_i!.  The total must be >= 0
// (throws otherwise); the value is 0 whenever any part is negative.
// Computed as a telescoped product of binomials, so no division is needed.
Int multinomial(std::span<const long> parts);
Int multinomial(std::initializer_list<long> parts);

namespace detail {

// Table-backed binomial for hot loops.  Requires 0 <= n < table cap;
// out-of-range r returns a reference to a shared zero.  The reference stays
// valid for the lifetime of the thread.
const Int& binomial_ref(long n, long r);

inline constexpr long kBinomialTableCap = 1024;

}  // namespace detail

}  // namespace betasum

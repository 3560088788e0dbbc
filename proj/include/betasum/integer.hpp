#pragma once

#include <gmpxx.h>

#include <string>

namespace betasum {

// Arbitrary-precision integers and rationals.  All combinatorial kernels
// return exact values; no floating point anywhere in the library.
using Int = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace betasum

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "betasum/integer.hpp"
#include "betasum/ratfunc.hpp"

namespace betasum {

// Raised when a term document is structurally valid but uses a shape the
// engines do not handle (affine slopes outside {-1, 0, +1}).
struct unsupported_term_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// slope*v + outer_slope*s + constant, with v the running variable and s
// the outer one.  Both slopes are restricted to {-1, 0, +1}.
struct AffineExpr {
  int slope = 0;
  int outer_slope = 0;
  long constant = 0;
};

struct BinomialFactor {
  AffineExpr top;
  AffineExpr bottom;
};

// A product of binomial coefficients with affine arguments in one running
// variable, optionally an outer variable, times geometric_base^v and an
// optional (-1)^v.  Alternatively a document may state the shift ratio
// t(v+1)/t(v) directly (explicit_ratio); that form carries no outer
// dependence and excludes factors.  The ratio is anchored at ratio_offset:
// t(ratio_offset) = 1 and t is undefined below it, which lets a ratio with
// a pole at small arguments still define a sequence.
struct BinomialProductTerm {
  std::vector<BinomialFactor> factors;
  Rational geometric_base = 1;
  bool alternating_sign = false;
  std::string running_variable = "n";
  std::string outer_variable;  // empty: closed term
  std::optional<RatFuncQ> explicit_ratio;
  long ratio_offset = 0;
};

// Parse a JSON term document.  Malformed input raises
// std::invalid_argument; valid documents outside the supported shape
// raise unsupported_term_error.
BinomialProductTerm parse_term_document(const std::string& json_text);

// t(v+1)/t(v) as a rational function of the running variable.  The term
// must be closed (no outer dependence).
RatFuncQ term_ratio(const BinomialProductTerm& t);

// F(s, v+1)/F(s, v) with the outer variable kept symbolic.
RatFuncQs term_ratio_outer(const BinomialProductTerm& t);

// F(s+i, v)/F(s, v) for a fixed outer shift i >= 0, outer variable
// symbolic.  Requires a factor description.
RatFuncQs outer_shift_ratio(const BinomialProductTerm& t, long i);

// Pointwise value at (s0, v0); nullopt where undefined (a binomial top
// negative, or the explicit ratio hits a pole below v0).  Closed terms
// ignore s0.
std::optional<Rational> eval_term(const BinomialProductTerm& t, long s0,
                                  long v0);

}  // namespace betasum

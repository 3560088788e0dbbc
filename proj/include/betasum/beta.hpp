#pragma once

#include "betasum/integer.hpp"
#include "betasum/report.hpp"

namespace betasum {

struct BetaParams {
  long s, l, a, b, m;
};

// b = plus - minus with plus, minus >= 0 and at most one of them nonzero.
struct SplitB {
  long plus, minus;
};
constexpr SplitB split_b(long b) { return {b > 0 ? b : 0, b < 0 ? -b : 0}; }

// beta_m(s, l, a, b) =
//   sum_{n=0}^{|b|+m} C(s-a, b_plus+m-n) C(a, b_minus+m-n) C(s-l+n, n).
// Requires s >= l and s >= a >= 0; m may be any integer (the sum is empty
// or all-zero for m < 0, so the value is 0 there).
Int beta(const BetaParams& p);

// The four contiguous-shift identities satisfied by beta.  Each one relates
// a value at s to two values at s+1:
//   i   (b > 0)           beta_m(s,a,b)   = beta_m(s+1,a,b)   - beta_m(s+1,a+1,b-1)
//   ii  (a > 0, b >= 0)   beta_m(s,a-1,b) = beta_m(s+1,a,b)   - beta_{m-1}(s+1,a-1,b+1)
//   iii (b <= 0)          beta_m(s,a,b)   = beta_m(s+1,a,b)   - beta_{m-1}(s+1,a+1,b-1)
//   iv  (a > 0, b < 0)    beta_m(s,a-1,b) = beta_m(s+1,a,b)   - beta_m(s+1,a-1,b+1)
enum class BetaCase { i = 1, ii = 2, iii = 3, iv = 4 };

const char* beta_case_name(BetaCase c);

// True when the side condition of the given case holds for (a, b).
bool beta_case_applies(BetaCase c, const BetaParams& p);

struct RecurrenceWitness {
  bool holds;
  Int lhs, rhs;
};

// Evaluates both sides of one case at one parameter point.  Throws
// std::domain_error when the case's side condition fails or the parameters
// are outside the beta domain.
RecurrenceWitness verify_beta_recurrence(BetaCase c, const BetaParams& p);

struct BetaSweepBox {
  long s_max;
  long m_max;
};

// Checks all four recurrences over 0 <= l <= s <= s_max, 0 <= a <= s,
// |b| <= s_max, 0 <= m <= m_max.  Tuples whose side condition fails are
// counted as skipped.
VerificationReport sweep_beta_recurrences(const BetaSweepBox& box,
                                          int jobs = 1);

namespace detail {

// Literal summation with no domain checks.  Callers must guarantee s >= l
// and s >= a >= 0 (any m is fine; the value is 0 for m < 0).
Int beta_value_unchecked(long s, long l, long a, long b, long m);

}  // namespace detail

}  // namespace betasum

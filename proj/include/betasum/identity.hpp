#pragma once

#include "betasum/integer.hpp"
#include "betasum/report.hpp"

namespace betasum {

// Signed double sum of beta values against trinomial weights.  Requires
// s >= l >= 0 and m >= 0; every summand whose weight vanishes is dropped
// without evaluating beta, which keeps all beta calls inside their domain.
Int lambda_m(long s, long l, long j, long m);

// Correction sum appearing in the shift relation for lambda_m; its beta
// values sit at s+1 while the weights sit at s.  Requires s >= l >= 0.
// The value is 0 for m < 0.
Int phi_m(long s, long l, long j, long m);

// gamma(s, l, j) = sum over 0 <= m <= floor(l/2) of lambda_m(s, l, j, m).
// Requires s >= l >= 0.
Int gamma(long s, long l, long j);

// The full closed-form double-plus-single sum whose value equals C(s, j)
// for every admissible l.  Requires s >= l >= 0.
Int theorem_lhs(long s, long l, long j);

struct LambdaWitness {
  bool holds;
  Int lhs, rhs;
};

// Checks lambda_m(s,l,j) + lambda_m(s,l,j-1)
//        == lambda_m(s+1,l,j) + phi_m(s,l,j) - phi_{m-1}(s,l,j)
// at one parameter point.  Requires s >= l >= 0, j >= 0 and m >= 0.
LambdaWitness verify_lambda_recurrence(long s, long l, long j, long m);

// Sweep of the relation above over 0 <= l <= s <= s_max, 0 <= j <= s+1,
// 0 <= m <= floor(l/2)+1.
VerificationReport sweep_lambda_recurrence(long s_max, int jobs = 1);

// Sweep checking theorem_lhs(s,l,j) == C(s,j) and gamma(s,l,j) == C(s,j)
// over 0 <= l <= s <= s_max, -1 <= j <= s+1.  The two routes are counted
// as separate cases ("direct" and "partial-sums").
VerificationReport verify_theorem(long s_max, int jobs = 1);

// gamma vanishes for j in {-3,-2,-1} and {s+1,s+2,s+3}, and equals 1 at
// j = 0, for all 0 <= l <= s <= s_max.
VerificationReport verify_boundary(long s_max, int jobs = 1);

// gamma(s+1,l,j) == gamma(s,l,j) + gamma(s,l,j-1) over 0 <= l <= s <= s_max,
// -1 <= j <= s+2.
VerificationReport verify_gamma_pascal(long s_max, int jobs = 1);

// theorem_lhs(s,l,j) takes the same value for every l in [0, s], checked
// against the l = 0 row over -1 <= j <= s+1.
VerificationReport verify_l_independence(long s_max, int jobs = 1);

}  // namespace betasum

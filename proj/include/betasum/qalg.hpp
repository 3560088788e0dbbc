#pragma once

#include <initializer_list>
#include <span>

#include "betasum/beta.hpp"
#include "betasum/laurent.hpp"
#include "betasum/report.hpp"

namespace betasum {

// [n]! = (1+q)(1+q+q^2)...(1+q+...+q^{n-1}); empty product for n <= 1.
// Throws for n < 0.
LaurentPoly qint_factorial(long n);

// q-multinomial [sum]! / prod [r_i]! computed by exact division; the total
// must be >= 0 (throws otherwise) and any negative part gives 0.  Inexact
// division would signal a kernel bug and raises std::logic_error.
LaurentPoly qmultinomial(std::span<const long> parts);
LaurentPoly qmultinomial(std::initializer_list<long> parts);

// Gaussian binomial, qmultinomial([r, n-r]); n < 0 throws.
LaurentPoly qbinomial(long n, long r);

// q-analogue of beta: each summand carries q^{n(n-|b|+l-2m)}, which can be
// negative, hence the Laurent carrier.  Requires s >= l and s >= a >= 0;
// the value is 0 for m < 0.
LaurentPoly qbeta(const BetaParams& p);

struct QRecurrenceWitness {
  bool holds;
  LaurentPoly lhs, rhs;
};

// q-analogues of the four beta recurrences; the subtracted term carries an
// extra power of q:
//   i   q^{s-a-b-m+1}, ii  q^{a-m}, iii q^{s-a-m+1}, iv  q^{a+b-m}.
// Same side conditions and domain as the integer cases.
QRecurrenceWitness verify_q_recurrence(BetaCase c, const BetaParams& p);

struct QSweepBox {
  long s_max;
  long b_max;
  long m_max;
};

// All four q-recurrences over 0 <= l <= s <= s_max, 0 <= a <= s,
// |b| <= b_max, 0 <= m <= m_max; side-condition misses count as skipped.
VerificationReport sweep_q_recurrences(const QSweepBox& box, int jobs = 1);

// eval_at_one(qbeta(p)) == beta(p) over the same box (no case filter).
VerificationReport sweep_q_specialization(const QSweepBox& box, int jobs = 1);

// Structural checks of the Gaussian-binomial kernel for 0 <= r <= n <=
// n_max: minimum exponent 0, degree r(n-r), nonnegative coefficients, and
// qbinomial(n+1,r) = qbinomial(n,r) + q^{n+1-r} qbinomial(n,r-1).
VerificationReport verify_q_kernel(long n_max, int jobs = 1);

// Smallest exponent appearing in any nonzero qbeta over tuples with
// 0 <= l <= s <= s_max, 0 <= a <= s, 0 <= m <= l/2, |b| <= l - 2m (the
// shape induced by the signed double sums).  Observational; not asserted
// by the library.
long observed_qbeta_min_exponent(long s_max);

}  // namespace betasum

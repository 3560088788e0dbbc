#include "betasum/qalg.hpp"

#include <stdexcept>

#include "betasum/combinatorics.hpp"
#include "doctest.h"

using namespace betasum;

namespace {

// Oracle for the q-factorial: literal product of q-integers built from
// scratch with plain Laurent arithmetic.
LaurentPoly qfact_oracle(long n) {
  LaurentPoly out(1);
  for (long k = 2; k <= n; ++k) {
    LaurentPoly qi;
    for (long e = 0; e < k; ++e) qi += LaurentPoly::q_power(e);
    out *= qi;
  }
  return out;
}

}  // namespace

TEST_CASE("qint_factorial basics") {
  CHECK(qint_factorial(0) == LaurentPoly(1));
  CHECK(qint_factorial(1) == LaurentPoly(1));
  LaurentPoly f3 = qint_factorial(3);  // (1+q)(1+q+q^2)
  CHECK(f3.to_string() == "1 + 2 q + 2 q^2 + q^3");
  for (long n = 0; n <= 12; ++n) CHECK(qint_factorial(n) == qfact_oracle(n));
  CHECK_THROWS_AS(qint_factorial(-1), std::domain_error);
}

TEST_CASE("qmultinomial pinned values") {
  CHECK(qmultinomial({1, 1}).to_string() == "1 + q");
  CHECK(qmultinomial({2, 2}).to_string() == "1 + q + 2 q^2 + q^3 + q^4");
  CHECK(qmultinomial({-1, 3}).is_zero());
  CHECK(qmultinomial({}) == LaurentPoly(1));
  CHECK_THROWS_AS(qmultinomial({1, -4}), std::domain_error);
}

TEST_CASE("qmultinomial specializes to multinomial at q = 1") {
  for (long p1 = 0; p1 <= 6; ++p1)
    for (long p2 = 0; p2 <= 6; ++p2)
      for (long p3 = 0; p3 <= 4; ++p3)
        CHECK(qmultinomial({p1, p2, p3}).eval_at_one() ==
              multinomial({p1, p2, p3}));
}

TEST_CASE("qbinomial kernel checks") {
  auto rep = verify_q_kernel(30);
  CHECK(rep.failures.empty());
  CHECK(rep.cases_checked > 0);
  CHECK(qbinomial(4, 2).to_string() == "1 + q + 2 q^2 + q^3 + q^4");
  CHECK(qbinomial(5, -1).is_zero());
  CHECK(qbinomial(5, 7).is_zero());
  CHECK_THROWS_AS(qbinomial(-1, 0), std::domain_error);
}

TEST_CASE("qbeta pinned values") {
  CHECK(qbeta({4, 2, 2, -2, 0}) == LaurentPoly(1));
  CHECK(qbeta({3, 1, 2, 0, 0}) == LaurentPoly(1));
  CHECK(qbeta({3, 1, 1, 1, 0}).eval_at_one() == 2);
  CHECK(qbeta({5, 2, 1, 2, -1}).is_zero());
  CHECK(qbeta({5, 2, 1, 2, -2}).is_zero());
  CHECK_THROWS_AS(qbeta({2, 3, 0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(qbeta({3, 1, 4, 0, 0}), std::domain_error);
}

TEST_CASE("qbeta can have negative exponents standalone") {
  // |b| > l - 2m drives the prefactor exponent negative.
  bool found_negative = false;
  for (long s = 2; s <= 6 && !found_negative; ++s)
    for (long b = -s; b <= s && !found_negative; ++b) {
      LaurentPoly v = qbeta({s, 0, 1, b, 1});
      if (!v.is_zero() && v.min_exponent() < 0) found_negative = true;
    }
  CHECK(found_negative);
}

TEST_CASE("qbeta minimum exponent over the double-sum-induced shape") {
  // Observed value, frozen as a regression pin; the library records, the
  // suite remembers.
  CHECK(observed_qbeta_min_exponent(8) == 0);
}

TEST_CASE("q-recurrence witnesses at pinned points") {
  CHECK(verify_q_recurrence(BetaCase::i, {5, 2, 1, 2, 1}).holds);
  CHECK(verify_q_recurrence(BetaCase::iii, {4, 1, 2, 0, 0}).holds);
  CHECK(verify_q_recurrence(BetaCase::iv, {6, 3, 2, -1, 1}).holds);
  CHECK_THROWS_AS(verify_q_recurrence(BetaCase::i, {5, 2, 1, -1, 0}),
                  std::domain_error);
  CHECK_THROWS_AS(verify_q_recurrence(BetaCase::i, {2, 3, 1, 1, 0}),
                  std::domain_error);
}

TEST_CASE("q sweeps on small boxes") {
  auto rec = sweep_q_recurrences({6, 6, 3});
  CHECK(rec.failures.empty());
  CHECK(rec.cases_checked > 0);
  CHECK(rec.cases_skipped > 0);

  auto spec = sweep_q_specialization({6, 6, 3});
  CHECK(spec.failures.empty());
  CHECK(spec.cases_checked > 0);
}

TEST_CASE("q sweeps are jobs-independent") {
  auto a = sweep_q_recurrences({5, 5, 2}, 1);
  auto b = sweep_q_recurrences({5, 5, 2}, 8);
  CHECK(a.cases_checked == b.cases_checked);
  CHECK(a.cases_skipped == b.cases_skipped);
  CHECK(a.failures.size() == b.failures.size());
}

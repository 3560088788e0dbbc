#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betasum/ratfunc.hpp"
#include "betasum/report.hpp"
#include "betasum/term.hpp"

namespace betasum {

// Order-L recurrence sum_i a_i(s) F(s+i, n) = G(s, n+1) - G(s, n) with
// G = certificate * F.  The coefficient vector is normalized: integer
// entries of coprime content, no common polynomial factor, and a positive
// leading coefficient on a_L.
struct Recurrence {
  int order = 0;
  std::vector<PolyQ> coeffs;  // a_0 .. a_order in the outer variable
  RatFuncQs certificate;      // rational in the running variable
  std::string outer_variable = "s";
  std::string running_variable = "n";
};

// Creative telescoping: lowest order <= max_order admitting a recurrence
// with rational certificate; nullopt when none exists within the bound.
// The term must carry an outer variable through binomial factors.
std::optional<Recurrence> zeilberger(const BinomialProductTerm& f,
                                     int max_order = 4);

// "a_L(s) f(s+L) + ... + a_0(s) f(s) = 0".
std::string render_recurrence(const Recurrence& rec);
// The certificate as a rational function of the running variable whose
// coefficients are rational functions of the outer variable.
std::string render_certificate(const Recurrence& rec);

// Pointwise check of sum_i a_i(s) F(s+i, n) = G(s, n+1) - G(s, n) over
// the grid; points where F or the certificate is undefined, or where
// F(s, n) vanishes, are skipped and counted.
VerificationReport verify_certificate(const BinomialProductTerm& f,
                                      const Recurrence& rec, long s_lo,
                                      long s_hi, long n_lo, long n_hi);

// The summand C(s-a, b+ + m - n) C(a, b- + m - n) C(s-l+n, n) as a term
// document, running variable n, outer variable s.  Requires a >= 0.
BinomialProductTerm beta_summand_term(long l, long a, long b, long m);

// Telescope the summand above, then validate: the recurrence applied to
// the direct sums must vanish on a declared range of s, and the
// certificate must check pointwise.
struct BetaInnerOutcome {
  std::optional<Recurrence> recurrence;
  VerificationReport sum_check;
  VerificationReport certificate_check;

  bool found_and_valid() const {
    return recurrence.has_value() && sum_check.ok() &&
           certificate_check.ok() && sum_check.cases_checked > 0 &&
           certificate_check.cases_checked > 0;
  }
};

BetaInnerOutcome beta_inner_recurrence(long l, long a, long b, long m,
                                       int max_order = 4, long s_points = 15);

}  // namespace betasum

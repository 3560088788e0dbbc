#pragma once

#include <string>
#include <vector>

#include "betasum/integer.hpp"

namespace betasum {

// Integer-coefficient Laurent polynomial in q.  Stored dense over the
// occupied exponent range; canonical form keeps the first and last stored
// coefficients nonzero, so structural equality is value equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(long c) : LaurentPoly(Int(c)) {}
  explicit LaurentPoly(const Int& c);

  static LaurentPoly q_power(long e);
  static LaurentPoly monomial(const Int& c, long e);

  bool is_zero() const { return coeff_.empty(); }
  // Both throw std::logic_error on the zero polynomial.
  long min_exponent() const;
  long max_exponent() const;
  Int coeff(long e) const;
  Int eval_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }
  bool operator==(const LaurentPoly&) const = default;

  // Multiplication by q^e.
  LaurentPoly shifted(long e) const;

  // Exact division; throws std::logic_error when the divisor does not
  // divide exactly, std::domain_error on a zero divisor.
  LaurentPoly exact_div(const LaurentPoly& d) const;

  // Ascending exponent order, e.g. "q^-1 + 2 + q^2"; injective on
  // canonical forms.
  std::string to_string() const;

 private:
  long min_exp_ = 0;
  std::vector<Int> coeff_;

  void trim();
};

}  // namespace betasum

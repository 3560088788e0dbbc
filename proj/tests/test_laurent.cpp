#include "betasum/laurent.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"

using namespace betasum;

TEST_CASE("construction and canonical form") {
  LaurentPoly zero;
  CHECK(zero.is_zero());
  CHECK(LaurentPoly(0).is_zero());
  CHECK(LaurentPoly(7).coeff(0) == 7);
  CHECK(LaurentPoly::q_power(-3).coeff(-3) == 1);
  CHECK(LaurentPoly::monomial(Int(0), 5).is_zero());
  CHECK_THROWS_AS(zero.min_exponent(), std::logic_error);
  CHECK_THROWS_AS(zero.max_exponent(), std::logic_error);
}

TEST_CASE("arithmetic and cancellation") {
  LaurentPoly a = LaurentPoly(1) + LaurentPoly::q_power(1);   // 1 + q
  LaurentPoly b = LaurentPoly(1) - LaurentPoly::q_power(1);   // 1 - q
  LaurentPoly prod = a * b;                                   // 1 - q^2
  CHECK(prod.coeff(0) == 1);
  CHECK(prod.coeff(1) == 0);
  CHECK(prod.coeff(2) == -1);
  CHECK((a - a).is_zero());
  CHECK(a + b == LaurentPoly(2));
  CHECK((a * LaurentPoly()).is_zero());

  LaurentPoly shifted = a.shifted(-2);  // q^-2 + q^-1
  CHECK(shifted.min_exponent() == -2);
  CHECK(shifted.max_exponent() == -1);
  CHECK(shifted == LaurentPoly::q_power(-2) + LaurentPoly::q_power(-1));
}

TEST_CASE("eval_at_one sums coefficients") {
  LaurentPoly p = LaurentPoly(1) + LaurentPoly::monomial(Int(2), 1) +
                  LaurentPoly::monomial(Int(2), 2) + LaurentPoly::q_power(3);
  CHECK(p.eval_at_one() == 6);
  CHECK(LaurentPoly().eval_at_one() == 0);
  CHECK(LaurentPoly::q_power(-4).eval_at_one() == 1);
}

TEST_CASE("exact division") {
  LaurentPoly a = LaurentPoly(1) + LaurentPoly::q_power(1);
  LaurentPoly b = LaurentPoly(1) + LaurentPoly::q_power(2);
  LaurentPoly prod = a * b;
  CHECK(prod.exact_div(a) == b);
  CHECK(prod.exact_div(b) == a);
  CHECK(LaurentPoly().exact_div(a).is_zero());
  CHECK_THROWS_AS(a.exact_div(LaurentPoly()), std::domain_error);
  // 1 + q^2 is not divisible by 1 + q over the integers.
  CHECK_THROWS_AS(b.exact_div(a), std::logic_error);
  // Laurent offsets divide out.
  CHECK(prod.shifted(-5).exact_div(a.shifted(2)) == b.shifted(-7));
}

TEST_CASE("rendering") {
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly(5).to_string() == "5");
  CHECK(LaurentPoly(-1).to_string() == "-1");
  CHECK(LaurentPoly::q_power(1).to_string() == "q");
  CHECK(LaurentPoly::q_power(-1).to_string() == "q^-1");
  LaurentPoly p = LaurentPoly::q_power(-1) + LaurentPoly(2) +
                  LaurentPoly::q_power(2);
  CHECK(p.to_string() == "q^-1 + 2 + q^2");
  LaurentPoly n = LaurentPoly::monomial(Int(-3), 2) + LaurentPoly(1);
  CHECK(n.to_string() == "1 - 3 q^2");
  LaurentPoly neg_lead = LaurentPoly::monomial(Int(-1), -2) + LaurentPoly(4);
  CHECK(neg_lead.to_string() == "-q^-2 + 4");
}

TEST_CASE("rendering distinguishes distinct small polynomials") {
  std::set<std::string> seen;
  int count = 0;
  for (int c0 = -2; c0 <= 2; ++c0)
    for (int c1 = -2; c1 <= 2; ++c1)
      for (int cm = -2; cm <= 2; ++cm) {
        LaurentPoly p = LaurentPoly(c0) +
                        LaurentPoly::monomial(Int(c1), 1) +
                        LaurentPoly::monomial(Int(cm), -1);
        seen.insert(p.to_string());
        ++count;
      }
  CHECK(static_cast<int>(seen.size()) == count);
}

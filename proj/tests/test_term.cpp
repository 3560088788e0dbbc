#include <stdexcept>

#include "betasum/combinatorics.hpp"
#include "betasum/term.hpp"
#include "doctest.h"

using betasum::BinomialProductTerm;
using betasum::eval_term;
using betasum::parse_term_document;
using betasum::PolyQ;
using betasum::Rational;
using betasum::RatFuncQ;
using betasum::RatFuncQs;
using betasum::term_ratio;
using betasum::term_ratio_outer;
using betasum::outer_shift_ratio;

namespace {

PolyQ from_longs(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return PolyQ::from_coeffs(std::move(v));
}

const char* kChooseDoc = R"({
  "running_variable": "k",
  "outer_variable": "n",
  "factors": [
    {"top": {"outer_slope": 1}, "bottom": {"slope": 1}}
  ]
})";

}  // namespace

TEST_CASE("term document parsing") {
  const auto t = parse_term_document(kChooseDoc);
  CHECK(t.running_variable == "k");
  CHECK(t.outer_variable == "n");
  REQUIRE(t.factors.size() == 1);
  CHECK(t.factors[0].top.outer_slope == 1);
  CHECK(t.factors[0].top.slope == 0);
  CHECK(t.factors[0].bottom.slope == 1);
  CHECK(t.geometric_base == 1);
  CHECK(!t.alternating_sign);
  CHECK(!t.explicit_ratio.has_value());

  const auto r = parse_term_document(
      R"({"ratio": {"numerator": [1, 1], "denominator": ["1"]}})");
  REQUIRE(r.explicit_ratio.has_value());
  CHECK(*r.explicit_ratio == RatFuncQ(from_longs({1, 1})));

  const auto g = parse_term_document(
      R"({"geometric_base": "-3/2", "alternating_sign": true})");
  CHECK(g.geometric_base == Rational(-3, 2));
  CHECK(g.alternating_sign);

  const auto anchored = parse_term_document(
      R"({"ratio": {"numerator": [1, 2, 1], "denominator": [0, 1]},
          "offset": 1})");
  CHECK(anchored.ratio_offset == 1);
}

TEST_CASE("term document rejection") {
  CHECK_THROWS_AS(parse_term_document("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_term_document("[1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_term_document(R"({"mystery": 1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_term_document(R"({"factors": [{"top": {}}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_term_document(R"({"geometric_base": "0"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_term_document(R"({"geometric_base": "1/0"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_term_document(
          R"({"running_variable": "n", "outer_variable": "n"})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_term_document(
          R"({"ratio": {"numerator": [1], "denominator": [0]}})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_term_document(
          R"({"outer_variable": "s",
              "ratio": {"numerator": [1], "denominator": [1]}})"),
      std::invalid_argument);

  CHECK_THROWS_AS(parse_term_document(R"({"offset": 1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_term_document(
          R"({"ratio": {"numerator": [1], "denominator": [1]}, "offset": -1})"),
      std::invalid_argument);

  // slopes outside the supported band are a different error class
  CHECK_THROWS_AS(
      parse_term_document(
          R"({"factors": [{"top": {"slope": 2}, "bottom": {}}]})"),
      betasum::unsupported_term_error);
  CHECK_THROWS_AS(
      parse_term_document(
          R"({"factors": [{"top": {}, "bottom": {"outer_slope": -2}}]})"),
      betasum::unsupported_term_error);
}

TEST_CASE("shift ratio of a closed term") {
  // C(10, k): ratio (10-k)/(k+1)
  const auto t = parse_term_document(
      R"({"running_variable": "k",
          "factors": [{"top": {"constant": 10}, "bottom": {"slope": 1}}]})");
  const auto r = term_ratio(t);
  CHECK(r == RatFuncQ(from_longs({10, -1}), from_longs({1, 1})));
  for (long k = 0; k < 10; ++k) {
    const auto t0 = eval_term(t, 0, k);
    const auto t1 = eval_term(t, 0, k + 1);
    REQUIRE(t0.has_value());
    REQUIRE(t1.has_value());
    CHECK(*t1 == *t0 * *r.eval(Rational(k)));
  }

  const auto geo = parse_term_document(
      R"({"geometric_base": "3/2", "alternating_sign": true})");
  CHECK(term_ratio(geo) == RatFuncQ(PolyQ{Rational(-3, 2)}));
  CHECK(*eval_term(geo, 0, 3) == Rational(-27, 8));
  CHECK(*eval_term(geo, 0, 0) == 1);

  CHECK_THROWS_AS(term_ratio(parse_term_document(kChooseDoc)),
                  std::invalid_argument);
}

TEST_CASE("parameterized ratios") {
  const auto t = parse_term_document(kChooseDoc);
  const RatFuncQ n_sym = RatFuncQ::variable();
  const RatFuncQ one(1);

  // C(n, k+1)/C(n, k) = (n-k)/(k+1)
  const auto rv = term_ratio_outer(t);
  CHECK(rv == RatFuncQs(betasum::PolyQs{n_sym, RatFuncQ(-1)},
                        betasum::PolyQs{one, one}));

  // C(n+1, k)/C(n, k) = (n+1)/(n+1-k)
  const auto rs = outer_shift_ratio(t, 1);
  CHECK(rs == RatFuncQs(betasum::PolyQs{n_sym + one},
                        betasum::PolyQs{n_sym + one, RatFuncQ(-1)}));
  CHECK(outer_shift_ratio(t, 0) == RatFuncQs(1));

  // pointwise agreement on a grid clear of zeros
  const auto eval_at = [](const RatFuncQs& r, long n, long k) -> Rational {
    Rational acc_n(0), acc_d(0);
    for (long i = r.num().degree(); i >= 0; --i)
      acc_n = acc_n * k + *r.num().coeff(i).eval(Rational(n));
    for (long i = r.den().degree(); i >= 0; --i)
      acc_d = acc_d * k + *r.den().coeff(i).eval(Rational(n));
    return Rational(acc_n / acc_d);
  };
  const auto rs2 = outer_shift_ratio(t, 2);
  for (long n = 2; n <= 8; ++n) {
    for (long k = 0; k < n; ++k) {
      const auto f00 = eval_term(t, n, k);
      const auto f01 = eval_term(t, n, k + 1);
      const auto f10 = eval_term(t, n + 2, k);
      REQUIRE(f00.has_value());
      if (*f00 == 0) continue;
      CHECK(*f01 == *f00 * eval_at(rv, n, k));
      CHECK(*f10 == *f00 * eval_at(rs2, n, k));
    }
  }
}

TEST_CASE("pointwise evaluation") {
  const auto t = parse_term_document(kChooseDoc);
  CHECK(*eval_term(t, 5, 2) == 10);
  CHECK(*eval_term(t, 5, 7) == 0);
  CHECK(*eval_term(t, 5, -1) == 0);
  // negative binomial top is undefined, not zero
  CHECK(!eval_term(t, -1, 0).has_value());

  const auto fac = parse_term_document(
      R"({"ratio": {"numerator": [1, 1], "denominator": [1]}})");
  CHECK(*eval_term(fac, 0, 0) == 1);
  CHECK(*eval_term(fac, 0, 5) == 120);
  CHECK(!eval_term(fac, 0, -1).has_value());

  const auto pole = parse_term_document(
      R"({"ratio": {"numerator": [1], "denominator": [0, 1]}})");
  CHECK(*eval_term(pole, 0, 0) == 1);
  CHECK(!eval_term(pole, 0, 1).has_value());

  // n * n! has ratio (n+1)^2 / n; anchoring at 1 steps over the pole and
  // the anchor value 1 * 1! = 1 makes the sequence come out unscaled
  const auto nfac = parse_term_document(
      R"({"ratio": {"numerator": [1, 2, 1], "denominator": [0, 1]},
          "offset": 1})");
  CHECK(!eval_term(nfac, 0, 0).has_value());
  CHECK(*eval_term(nfac, 0, 1) == 1);
  CHECK(*eval_term(nfac, 0, 2) == 4);
  CHECK(*eval_term(nfac, 0, 5) == 600);
}

TEST_CASE("term evaluation matches direct binomial products") {
  const auto alt = parse_term_document(
      R"({"running_variable": "k",
          "outer_variable": "n",
          "alternating_sign": true,
          "geometric_base": 2,
          "factors": [
            {"top": {"outer_slope": 1}, "bottom": {"slope": 1}},
            {"top": {"outer_slope": 1, "slope": 1, "constant": 1},
             "bottom": {"slope": 1, "constant": 1}}
          ]})");
  for (long n = 0; n <= 6; ++n)
    for (long k = -1; k <= n + 1; ++k) {
      const auto v = eval_term(alt, n, k);
      if (n + k + 1 < 0) {
        CHECK(!v.has_value());
        continue;
      }
      REQUIRE(v.has_value());
      Rational want = Rational(betasum::binomial(n, k)) *
                      Rational(betasum::binomial(n + k + 1, k + 1));
      want *= Rational(betasum::kpow(Rational(2), k < 0 ? 0 : k));
      if (k < 0) {
        // negative exponent of the base
        want /= Rational(betasum::kpow(Rational(2), -k));
      }
      if (k % 2 != 0) want = -want;
      CHECK(*v == want);
    }
}

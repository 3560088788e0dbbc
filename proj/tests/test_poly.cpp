#include <stdexcept>

#include "betasum/introots.hpp"
#include "betasum/poly.hpp"
#include "betasum/ratfunc.hpp"
#include "betasum/telescope_detail.hpp"
#include "doctest.h"

using betasum::Int;
using betasum::PolyQ;
using betasum::Rational;
using betasum::RatFuncQ;

namespace {

PolyQ from_longs(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return PolyQ::from_coeffs(std::move(v));
}

}  // namespace

TEST_CASE("polynomial construction and canonical form") {
  PolyQ z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.coeff(0) == 0);
  CHECK(z.coeff(7) == 0);
  CHECK_THROWS_AS(z.lc(), std::logic_error);

  CHECK(PolyQ{Rational(0)}.is_zero());
  CHECK(PolyQ::from_coeffs({Rational(3), Rational(0), Rational(0)}).degree() ==
        0);

  const PolyQ x = PolyQ::variable();
  CHECK(x.degree() == 1);
  CHECK(x.coeff(1) == 1);
  CHECK(x.coeff(-2) == 0);
}

TEST_CASE("polynomial arithmetic") {
  const PolyQ x = PolyQ::variable();
  const PolyQ a = from_longs({1, 1});   // 1 + x
  const PolyQ b = from_longs({-1, 1});  // -1 + x
  CHECK(a * b == from_longs({-1, 0, 1}));
  CHECK(a + b == from_longs({0, 2}));
  CHECK(a - a == PolyQ{});
  CHECK(-b == from_longs({1, -1}));
  CHECK(a.scaled(Rational(3)) == from_longs({3, 3}));
  CHECK(a.scaled(Rational(0)).is_zero());
  CHECK((x * x - x).eval(Rational(5)) == 20);
}

TEST_CASE("division with remainder") {
  const PolyQ a = from_longs({2, 0, -3, 1});  // x^3 - 3x^2 + 2
  const PolyQ b = from_longs({-1, 1});        // x - 1
  const auto [q, r] = a.divrem(b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());

  const auto [q2, r2] = from_longs({-1, 0, 1}).divrem(from_longs({-1, 1}));
  CHECK(q2 == from_longs({1, 1}));
  CHECK(r2.is_zero());

  const auto [q3, r3] = b.divrem(a);
  CHECK(q3.is_zero());
  CHECK(r3 == b);

  CHECK_THROWS_AS(a.divrem(PolyQ{}), std::domain_error);
}

TEST_CASE("argument shift and derivative") {
  const PolyQ p = from_longs({0, 0, 1});  // x^2
  CHECK(p.shifted_arg(Rational(1)) == from_longs({1, 2, 1}));
  CHECK(p.shifted_arg(Rational(1)).shifted_arg(Rational(-1)) == p);
  const PolyQ cube = from_longs({0, 0, 0, 1});
  CHECK(cube.derivative() == from_longs({0, 0, 3}));
  CHECK(from_longs({5}).derivative().is_zero());
}

TEST_CASE("gcd and lcm are monic") {
  const PolyQ p1 = from_longs({-1, 1}) * from_longs({-2, 1});
  const PolyQ p2 = from_longs({-1, 1}) * from_longs({-3, 1});
  CHECK(gcd_poly(p1.scaled(Rational(4)), p2) == from_longs({-1, 1}));
  CHECK(lcm_poly(p1, p2) ==
        from_longs({-1, 1}) * from_longs({-2, 1}) * from_longs({-3, 1}));
  CHECK(gcd_poly(p1, PolyQ{}) == p1.scaled(Rational(1) / p1.lc()));
  CHECK(gcd_poly(p1, from_longs({7})) == from_longs({1}));
}

TEST_CASE("resultant values") {
  // Res(x - c, B) = B(c)
  CHECK(resultant(from_longs({-2, 1}), from_longs({1, 0, 1})) == 5);
  // Res(x^2 + 1, x^2 - 1): both roots of the first give -2
  CHECK(resultant(from_longs({1, 0, 1}), from_longs({-1, 0, 1})) == 4);
  // antisymmetry for odd degrees
  CHECK(resultant(from_longs({0, 1}), from_longs({-1, 1})) == -1);
  CHECK(resultant(from_longs({-1, 1}), from_longs({0, 1})) == 1);
  // shared factor
  CHECK(resultant(from_longs({-1, 1}), from_longs({-1, 1}) * from_longs({2, 1})) ==
        0);
  // constant arguments
  CHECK(resultant(from_longs({3}), from_longs({0, 0, 1})) == 9);
}

TEST_CASE("rational function normalization") {
  const RatFuncQ r(from_longs({-1, 0, 1}), from_longs({-1, 1}));
  CHECK(r.num() == from_longs({1, 1}));
  CHECK(r.den() == from_longs({1}));

  const RatFuncQ s(from_longs({2, 2}), from_longs({-2, 2}));
  CHECK(s.num() == from_longs({1, 1}));
  CHECK(s.den() == from_longs({-1, 1}));

  CHECK(RatFuncQ(PolyQ{}, from_longs({0, 5})) == RatFuncQ(0));
  CHECK_THROWS_AS(RatFuncQ(from_longs({1}), PolyQ{}), std::domain_error);
}

TEST_CASE("rational function arithmetic and evaluation") {
  const RatFuncQ a(from_longs({1}), from_longs({-1, 1}));  // 1/(x-1)
  const RatFuncQ b(from_longs({1}), from_longs({1, 1}));   // 1/(x+1)
  const RatFuncQ sum = a + b;
  CHECK(sum == RatFuncQ(from_longs({0, 2}), from_longs({-1, 0, 1})));
  CHECK(a * b == RatFuncQ(from_longs({1}), from_longs({-1, 0, 1})));
  CHECK(a / b == RatFuncQ(from_longs({1, 1}), from_longs({-1, 1})));
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a / RatFuncQ(0), std::domain_error);

  CHECK(*a.eval(Rational(3)) == Rational(1, 2));
  CHECK(!a.eval(Rational(1)).has_value());
  CHECK(a.shifted_arg(Rational(1)) == RatFuncQ(from_longs({1}), from_longs({0, 1})));

  CHECK(RatFuncQ(5).is_constant());
  CHECK(RatFuncQ(5).constant_value() == 5);
  CHECK(!a.is_constant());
  CHECK_THROWS_AS(a.constant_value(), std::logic_error);
}

TEST_CASE("integer roots of rational polynomials") {
  using betasum::integer_roots;
  // (x-2)^2 (x+3) (2x-1)
  const PolyQ p = from_longs({-2, 1}) * from_longs({-2, 1}) *
                  from_longs({3, 1}) * from_longs({-1, 2});
  const auto r = integer_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == -3);
  CHECK(r[1] == 2);

  CHECK(integer_roots(from_longs({0, 0, 0, 1})) == std::vector<Int>{Int(0)});
  CHECK(integer_roots(from_longs({-2, 0, 1})).empty());
  CHECK(integer_roots(from_longs({7})).empty());
  CHECK_THROWS_AS(integer_roots(PolyQ{}), std::invalid_argument);

  PolyQ dense = from_longs({1});
  for (long k = -3; k <= 3; ++k) dense = dense * from_longs({-k, 1});
  const auto all = integer_roots(dense);
  REQUIRE(all.size() == 7);
  for (long k = -3; k <= 3; ++k) CHECK(all[static_cast<size_t>(k + 3)] == k);

  // a root far outside small-bound territory
  const PolyQ far = PolyQ{-Rational(1000000007), Rational(1)} *
                    from_longs({1, 1, 1});
  const auto fr = integer_roots(far);
  REQUIRE(fr.size() == 1);
  CHECK(fr[0] == 1000000007);
}

TEST_CASE("linear algebra kernels") {
  using betasum::detail::null_space;
  using betasum::detail::solve_linear;
  using betasum::detail::solve_gosper_equation;

  // x + y = 0 has the line (-1, 1)
  std::vector<std::vector<Rational>> m{{Rational(1), Rational(1)}};
  const auto basis = null_space(m, 2);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == -1);
  CHECK(basis[0][1] == 1);

  const std::vector<std::vector<Rational>> diag{{Rational(2), Rational(0)},
                                                {Rational(0), Rational(3)}};
  const auto sol = solve_linear(diag, {Rational(4), Rational(9)}, 2);
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == 2);
  CHECK((*sol)[1] == 3);
  const std::vector<std::vector<Rational>> clash{{Rational(1)}, {Rational(1)}};
  CHECK(!solve_linear(clash, {Rational(1), Rational(2)}, 1).has_value());

  // X(x+1) - X(x) = 1 is solved by X = x
  const auto x = solve_gosper_equation(from_longs({1}), from_longs({1}),
                                       from_longs({1}));
  REQUIRE(x.has_value());
  CHECK(*x == from_longs({0, 1}));
}

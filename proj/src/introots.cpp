#include "betasum/introots.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace betasum {
namespace {

int sign_of(const Rational& v) { return sgn(v); }

// Sturm chain of a squarefree polynomial: S0 = p, S1 = p',
// S_{k+1} = -(S_{k-1} mod S_k), stopping at a constant.
std::vector<PolyQ> sturm_chain(const PolyQ& p) {
  std::vector<PolyQ> chain;
  chain.push_back(p);
  PolyQ d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(std::move(d));
  while (chain.back().degree() >= 1) {
    PolyQ rem = chain[chain.size() - 2].divrem(chain.back()).second;
    if (rem.is_zero()) break;
    chain.push_back(-rem);
  }
  return chain;
}

long sign_changes(const std::vector<PolyQ>& chain, const Rational& x) {
  long count = 0;
  int prev = 0;
  for (const auto& s : chain) {
    const int sg = sign_of(s.eval(x));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++count;
    prev = sg;
  }
  return count;
}

// Endpoint grid t -> t + 1/2; half-integers are never integer roots.
Rational half_point(const Int& t) {
  Rational e(Int(2 * t + 1), Int(2));
  e.canonicalize();
  return e;
}

}  // namespace

std::vector<Int> integer_roots(const PolyQ& p0) {
  if (p0.is_zero())
    throw std::invalid_argument("integer_roots: zero polynomial");
  std::vector<Int> roots;
  PolyQ p = p0;

  long zeros = 0;
  while (!p.is_zero() && p.coeff(0) == 0) {
    p = p.divrem(PolyQ::variable()).first;
    ++zeros;
  }
  if (zeros > 0) roots.emplace_back(0);

  if (p.degree() >= 1) {
    auto g = gcd_poly(p, p.derivative());
    if (g.degree() > 0) p = p.divrem(g).first;
  }

  // Isolate real roots of the squarefree part between half-integer
  // endpoints; an endpoint that is itself a root is divided out and the
  // isolation restarts on the reduced polynomial.
  while (p.degree() >= 1) {
    bool restart = false;
    const auto chain = sturm_chain(p);

    Rational mx(0);
    for (long i = 0; i < p.degree(); ++i) {
      Rational q = abs(p.coeff(i) / p.lc());
      if (q > mx) mx = q;
    }
    const Rational bound = mx + 1;
    Int m;
    mpz_cdiv_q(m.get_mpz_t(), bound.get_num().get_mpz_t(),
               bound.get_den().get_mpz_t());

    auto endpoint_ok = [&](const Int& t) -> bool {
      const Rational e = half_point(t);
      if (sign_of(p.eval(e)) != 0) return true;
      p = p.divrem(PolyQ{-e, Rational(1)}).first;
      return false;
    };

    // (e(lo), e(hi)] covers [-bound, bound], hence every real root.
    const Int lo = -m - 1, hi = m;
    if (!endpoint_ok(lo) || !endpoint_ok(hi)) continue;

    std::vector<std::pair<Int, Int>> stack;
    std::vector<Int> found;
    stack.emplace_back(lo, hi);
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      if (sign_changes(chain, half_point(a)) ==
          sign_changes(chain, half_point(b)))
        continue;
      if (b - a == 1) {
        // the only integer in (a + 1/2, b + 1/2] is b
        if (sign_of(p.eval(Rational(b))) == 0) found.push_back(b);
        continue;
      }
      const Int mid = a + (b - a) / 2;
      if (!endpoint_ok(mid)) {
        restart = true;
        break;
      }
      stack.emplace_back(a, mid);
      stack.emplace_back(mid, b);
    }
    if (restart) continue;
    roots.insert(roots.end(), found.begin(), found.end());
    break;
  }

  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace betasum

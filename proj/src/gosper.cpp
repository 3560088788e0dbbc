#include "betasum/gosper.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "betasum/introots.hpp"
#include "betasum/telescope_detail.hpp"
#include "betasum/version.hpp"

namespace betasum {
namespace {

// Newton interpolation through (0, ys[0]), (1, ys[1]), ...
PolyQ interpolate_at_integers(const std::vector<Rational>& ys) {
  const long n = static_cast<long>(ys.size());
  std::vector<Rational> dd = ys;
  for (long level = 1; level < n; ++level)
    for (long j = n - 1; j >= level; --j)
      dd[static_cast<size_t>(j)] =
          (dd[static_cast<size_t>(j)] - dd[static_cast<size_t>(j - 1)]) /
          Rational(level);
  PolyQ p;
  PolyQ basis{Rational(1)};
  for (long j = 0; j < n; ++j) {
    p += basis.scaled(dd[static_cast<size_t>(j)]);
    basis = basis * PolyQ{Rational(-j), Rational(1)};
  }
  return p;
}

}  // namespace

std::vector<long> dispersion_candidates(const PolyQ& u, const PolyQ& v) {
  if (u.degree() < 1 || v.degree() < 1) return {};
  // Res_x(u(x), v(x+h)) has degree <= deg u * deg v in h; one extra sample
  // pins it down exactly.
  const long npts = u.degree() * v.degree() + 1;
  std::vector<Rational> ys;
  ys.reserve(static_cast<size_t>(npts));
  for (long h = 0; h < npts; ++h)
    ys.push_back(resultant(u, v.shifted_arg(Rational(h))));
  const PolyQ rh = interpolate_at_integers(ys);
  if (rh.is_zero())
    throw std::logic_error("dispersion: resultant vanished identically");

  std::vector<long> out;
  for (const Int& root : integer_roots(rh)) {
    if (sgn(root) < 0) continue;
    if (!root.fits_slong_p())
      throw std::logic_error("dispersion: shift out of range");
    out.push_back(root.get_si());
  }
  return out;
}

std::optional<GosperCertificate> gosper(const RatFuncQ& ratio) {
  if (ratio.is_zero())
    throw std::invalid_argument("gosper: shift ratio must be nonzero");
  const auto cands = dispersion_candidates(ratio.num(), ratio.den());
  const auto form = detail::gosper_factor(ratio.num(), ratio.den(), cands);
  const auto x = detail::solve_gosper_equation(form.a, form.b, form.c);
  if (!x) return std::nullopt;
  RatFuncQ r(form.b.shifted_arg(Rational(-1)) * *x, form.c);
  return GosperCertificate{std::move(r)};
}

VerificationReport verify_certificate(
    const std::function<std::optional<Rational>(long)>& term_value,
    const GosperCertificate& cert, long v_lo, long v_hi) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.identity = "gosper-certificate";
  r.box = {{"v_lo", v_lo}, {"v_hi", v_hi}};
  r.param_names = {"v"};
  r.version = kVersion;

  for (long v = v_lo; v <= v_hi; ++v) {
    const auto tv = term_value(v);
    const auto tn = term_value(v + 1);
    const auto rv = cert.R.eval(Rational(v));
    const auto rn = cert.R.eval(Rational(v + 1));
    if (!tv || !tn || !rv || !rn || *tv == 0) {
      ++r.cases_skipped;
      continue;
    }
    const Rational lhs = *tv;
    const Rational rhs = *rn * *tn - *rv * *tv;
    ++r.cases_checked;
    if (lhs != rhs)
      r.failures.push_back({{{"v", std::to_string(v)}},
                            to_string(lhs),
                            to_string(rhs)});
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

}  // namespace betasum

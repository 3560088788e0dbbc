#include "betasum/zeilberger.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <utility>

#include "betasum/beta.hpp"
#include "betasum/gosper.hpp"
#include "betasum/render.hpp"
#include "betasum/telescope_detail.hpp"
#include "betasum/version.hpp"

namespace betasum {
namespace {

using K = RatFuncQ;

PolyQs exact_poly_div(const PolyQs& a, const PolyQs& b) {
  auto [q, r] = a.divrem(b);
  if (!r.is_zero()) throw std::logic_error("telescoping division not exact");
  return q;
}

PolyQ exact_poly_div_q(const PolyQ& a, const PolyQ& b) {
  auto [q, r] = a.divrem(b);
  if (!r.is_zero()) throw std::logic_error("telescoping division not exact");
  return q;
}

// Dispersion candidates over the parameterized field: specialize the
// outer variable at a large integer where degrees survive, take the
// rational candidates, then keep only shifts with a genuine symbolic gcd.
// Specializing cannot lose a shift, so the rational set is a superset.
std::vector<long> dispersion_candidates_param(const PolyQs& u,
                                              const PolyQs& v) {
  if (u.degree() < 1 || v.degree() < 1) return {};
  static const long kProbes[] = {1000003, 1000033, 1000211,
                                 1000231, 1000249, 1000253};
  for (const long probe : kProbes) {
    const Rational sv(probe);
    auto specialize = [&](const PolyQs& p) -> std::optional<PolyQ> {
      std::vector<Rational> cs;
      for (long i = 0; i <= p.degree(); ++i) {
        auto val = p.coeff(i).eval(sv);
        if (!val) return std::nullopt;
        cs.push_back(std::move(*val));
      }
      return PolyQ::from_coeffs(std::move(cs));
    };
    const auto us = specialize(u);
    const auto vs = specialize(v);
    if (!us || !vs) continue;
    if (us->degree() != u.degree() || vs->degree() != v.degree()) continue;
    std::vector<long> out;
    for (const long h : dispersion_candidates(*us, *vs)) {
      auto g = gcd_poly(u, v.shifted_arg(K(h)));
      if (g.degree() >= 1) out.push_back(h);
    }
    return out;
  }
  throw std::logic_error("dispersion: no usable specialization point");
}

// Evaluate every coefficient of the certificate at a concrete outer
// value; nullopt when a coefficient has a pole there or the denominator
// collapses to zero.
std::optional<RatFuncQ> specialize_certificate(const RatFuncQs& cert,
                                               const Rational& sv) {
  auto specialize = [&](const PolyQs& p) -> std::optional<PolyQ> {
    std::vector<Rational> cs;
    for (long i = 0; i <= p.degree(); ++i) {
      auto val = p.coeff(i).eval(sv);
      if (!val) return std::nullopt;
      cs.push_back(std::move(*val));
    }
    return PolyQ::from_coeffs(std::move(cs));
  };
  const auto num = specialize(cert.num());
  const auto den = specialize(cert.den());
  if (!num || !den || den->is_zero()) return std::nullopt;
  return RatFuncQ(std::move(*num), std::move(*den));
}

Int int_lcm(const Int& a, const Int& b) {
  Int out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Int int_gcd(const Int& a, const Int& b) {
  Int out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace

std::optional<Recurrence> zeilberger(const BinomialProductTerm& f,
                                     int max_order) {
  if (max_order < 1)
    throw std::invalid_argument("zeilberger: max_order must be >= 1");
  if (f.outer_variable.empty() || f.explicit_ratio)
    throw std::invalid_argument(
        "zeilberger: term must depend on an outer variable");
  const RatFuncQs rho = term_ratio_outer(f);

  for (int order = 1; order <= max_order; ++order) {
    const long big_l = order;

    // r_i(n) = F(s+i, n)/F(s, n); q0 clears all their denominators
    std::vector<RatFuncQs> ri;
    ri.emplace_back(1);
    for (long i = 1; i <= big_l; ++i) ri.push_back(outer_shift_ratio(f, i));
    PolyQs q0{K(1)};
    for (const auto& r : ri) q0 = lcm_poly(q0, r.den());
    std::vector<PolyQs> p;
    for (const auto& r : ri)
      p.push_back(r.num() * exact_poly_div(q0, r.den()));

    // h(n) = F(s, n)/q0(n) has shift ratio rho * q0(n)/q0(n+1)
    const RatFuncQs known = rho * RatFuncQs(q0, q0.shifted_arg(K(1)));
    const auto cands = dispersion_candidates_param(known.num(), known.den());
    const auto form = detail::gosper_factor(known.num(), known.den(), cands);
    const PolyQs bsh = form.b.shifted_arg(K(-1));

    long max_dp = 0;
    for (const auto& pi : p) max_dp = std::max(max_dp, pi.degree());
    const long d =
        detail::solution_degree_bound(form.a, bsh, form.c.degree() + max_dp);
    const long nx = d < 0 ? 0 : d + 1;

    // homogeneous system in (x_0..x_d, sigma_0..sigma_L):
    // sum_t x_t (a (n+1)^t - b(n-1) n^t) - c sum_i sigma_i p_i = 0
    std::vector<PolyQs> cols;
    {
      PolyQs xp{K(1)}, sp{K(1)};
      const PolyQs xv = PolyQs::variable();
      const PolyQs xv1{K(1), K(1)};
      for (long t = 0; t < nx; ++t) {
        cols.push_back(form.a * sp - bsh * xp);
        xp = xp * xv;
        sp = sp * xv1;
      }
    }
    for (long i = 0; i <= big_l; ++i) cols.push_back(-(form.c * p[i]));

    long maxdeg = 0;
    for (const auto& cp : cols) maxdeg = std::max(maxdeg, cp.degree());
    const long ncols = static_cast<long>(cols.size());
    std::vector<std::vector<K>> mat(
        static_cast<size_t>(maxdeg + 1),
        std::vector<K>(static_cast<size_t>(ncols), K(0)));
    for (long row = 0; row <= maxdeg; ++row)
      for (long c = 0; c < ncols; ++c)
        mat[static_cast<size_t>(row)][static_cast<size_t>(c)] =
            cols[static_cast<size_t>(c)].coeff(row);

    const auto basis = detail::null_space(std::move(mat), ncols);
    const std::vector<K>* chosen = nullptr;
    for (const auto& vb : basis)
      if (!(vb[static_cast<size_t>(nx + big_l)] == K(0))) {
        chosen = &vb;
        break;
      }
    if (!chosen) {
      for (const auto& vb : basis) {
        for (long i = 0; i <= big_l && !chosen; ++i)
          if (!(vb[static_cast<size_t>(nx + i)] == K(0))) chosen = &vb;
        if (chosen) break;
      }
    }
    if (!chosen) continue;

    std::vector<K> sigma(chosen->begin() + nx, chosen->end());
    long actual = big_l;
    while (actual > 0 && sigma[static_cast<size_t>(actual)] == K(0)) --actual;

    // clear rational-function denominators, strip the common polynomial
    // factor, then normalize to coprime integer content and positive lead
    PolyQ dlcm{Rational(1)};
    for (long i = 0; i <= actual; ++i)
      dlcm = lcm_poly(dlcm, sigma[static_cast<size_t>(i)].den());
    std::vector<PolyQ> apoly;
    for (long i = 0; i <= actual; ++i) {
      const K& sg = sigma[static_cast<size_t>(i)];
      apoly.push_back(sg.num() * exact_poly_div_q(dlcm, sg.den()));
    }
    PolyQ common;
    for (const auto& ap : apoly) common = gcd_poly(common, ap);
    if (common.degree() > 0)
      for (auto& ap : apoly) ap = exact_poly_div_q(ap, common);
    Int dl(1);
    for (const auto& ap : apoly)
      for (const auto& c : ap.coeffs()) dl = int_lcm(dl, c.get_den());
    if (dl != 1)
      for (auto& ap : apoly) ap = ap.scaled(Rational(dl));
    Int ng(0);
    for (const auto& ap : apoly)
      for (const auto& c : ap.coeffs()) ng = int_gcd(ng, c.get_num());
    if (ng > 1) {
      Rational inv(Int(1), ng);
      for (auto& ap : apoly) ap = ap.scaled(inv);
    }
    if (sgn(apoly[static_cast<size_t>(actual)].lc()) < 0)
      for (auto& ap : apoly) ap = ap.scaled(Rational(-1));

    // the same scalar carries over to the certificate
    const K mult = K(apoly[static_cast<size_t>(actual)]) /
                   sigma[static_cast<size_t>(actual)];
    const PolyQs x_sol = PolyQs::from_coeffs(
        std::vector<K>(chosen->begin(), chosen->begin() + nx));
    RatFuncQs cert = RatFuncQs(bsh * x_sol, form.c * q0) *
                     RatFuncQs(PolyQs{mult});

    Recurrence rec;
    rec.order = static_cast<int>(actual);
    rec.coeffs = std::move(apoly);
    rec.certificate = std::move(cert);
    rec.outer_variable = f.outer_variable;
    rec.running_variable = f.running_variable;
    return rec;
  }
  return std::nullopt;
}

std::string render_recurrence(const Recurrence& rec) {
  const std::string& sv = rec.outer_variable;
  std::string out;
  bool first = true;
  for (long i = rec.order; i >= 0; --i) {
    PolyQ a = rec.coeffs[static_cast<size_t>(i)];
    if (a.is_zero()) continue;
    const bool neg = sgn(a.lc()) < 0;
    if (neg) a = -a;
    const std::string cs = poly_to_string(a, sv);
    const std::string fn =
        "f(" + sv + (i > 0 ? "+" + std::to_string(i) : "") + ")";
    std::string piece;
    if (cs == "1")
      piece = fn;
    else if (cs.find(' ') != std::string::npos)
      piece = "(" + cs + ") " + fn;
    else
      piece = cs + " " + fn;
    if (first) {
      out += (neg ? std::string("-") : std::string()) + piece;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
  }
  if (out.empty()) out = "0";
  return out + " = 0";
}

namespace {

std::string maybe_paren(const std::string& s) {
  if (s.find(' ') != std::string::npos || s.find('/') != std::string::npos)
    return "(" + s + ")";
  return s;
}

std::string polyqs_to_string(const PolyQs& p, const std::string& nvar,
                             const std::string& svar) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    K c = p.coeff(i);
    if (c.is_zero()) continue;
    const bool neg = sgn(c.num().lc()) < 0;
    if (neg) c = -c;
    const std::string cs = ratfunc_to_string(c, svar);
    const std::string pw =
        i == 0 ? std::string() : nvar + (i == 1 ? "" : "^" + std::to_string(i));
    std::string piece;
    if (pw.empty())
      piece = cs;
    else if (cs == "1")
      piece = pw;
    else
      piece = maybe_paren(cs) + " " + pw;
    if (first) {
      out += (neg ? std::string("-") : std::string()) + piece;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
  }
  return out;
}

}  // namespace

std::string render_certificate(const Recurrence& rec) {
  const auto& c = rec.certificate;
  const std::string num =
      polyqs_to_string(c.num(), rec.running_variable, rec.outer_variable);
  if (c.den().degree() == 0) return num;
  return "(" + num + ") / (" +
         polyqs_to_string(c.den(), rec.running_variable, rec.outer_variable) +
         ")";
}

VerificationReport verify_certificate(const BinomialProductTerm& f,
                                      const Recurrence& rec, long s_lo,
                                      long s_hi, long n_lo, long n_hi) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.identity = "telescoping-certificate";
  r.box = {{"s_lo", s_lo}, {"s_hi", s_hi}, {"n_lo", n_lo}, {"n_hi", n_hi}};
  r.param_names = {rec.outer_variable, rec.running_variable};
  r.version = kVersion;

  for (long s0 = s_lo; s0 <= s_hi; ++s0) {
    const auto cert_s = specialize_certificate(rec.certificate, Rational(s0));
    if (!cert_s) {
      r.cases_skipped += n_hi - n_lo + 1;
      continue;
    }
    std::vector<Rational> av;
    for (const auto& ap : rec.coeffs) av.push_back(ap.eval(Rational(s0)));
    for (long n0 = n_lo; n0 <= n_hi; ++n0) {
      const auto c0 = cert_s->eval(Rational(n0));
      const auto c1 = cert_s->eval(Rational(n0 + 1));
      const auto f0 = eval_term(f, s0, n0);
      const auto f1 = eval_term(f, s0, n0 + 1);
      bool defined = c0 && c1 && f0 && f1 && *f0 != 0;
      std::vector<Rational> fi;
      if (defined) {
        for (long i = 0; i <= rec.order; ++i) {
          const auto v = eval_term(f, s0 + i, n0);
          if (!v) {
            defined = false;
            break;
          }
          fi.push_back(*v);
        }
      }
      if (!defined) {
        ++r.cases_skipped;
        continue;
      }
      Rational lhs(0);
      for (long i = 0; i <= rec.order; ++i)
        lhs += av[static_cast<size_t>(i)] * fi[static_cast<size_t>(i)];
      const Rational rhs = *c1 * *f1 - *c0 * *f0;
      ++r.cases_checked;
      if (lhs != rhs)
        r.failures.push_back({{{rec.outer_variable, std::to_string(s0)},
                               {rec.running_variable, std::to_string(n0)}},
                              to_string(lhs),
                              to_string(rhs)});
    }
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

BinomialProductTerm beta_summand_term(long l, long a, long b, long m) {
  if (a < 0) throw std::domain_error("beta summand: requires a >= 0");
  const auto [bp, bm] = split_b(b);
  BinomialProductTerm t;
  t.running_variable = "n";
  t.outer_variable = "s";
  t.factors = {
      {{0, 1, -a}, {-1, 0, bp + m}},
      {{0, 0, a}, {-1, 0, bm + m}},
      {{1, 1, -l}, {1, 0, 0}},
  };
  return t;
}

BetaInnerOutcome beta_inner_recurrence(long l, long a, long b, long m,
                                       int max_order, long s_points) {
  if (s_points < 1)
    throw std::invalid_argument("beta inner recurrence: s_points must be >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  const auto term = beta_summand_term(l, a, b, m);

  BetaInnerOutcome out;
  out.recurrence = zeilberger(term, max_order);

  const long s_lo = std::max({l, a, 0L});
  const long s_hi = s_lo + s_points - 1;
  VerificationReport& sc = out.sum_check;
  sc.identity = "beta-inner-sum";
  sc.box = {{"l", l},       {"a", a},       {"b", b},
            {"m", m},       {"s_lo", s_lo}, {"s_hi", s_hi}};
  sc.param_names = {"s"};
  sc.version = kVersion;

  if (!out.recurrence) {
    sc.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    out.certificate_check = sc;
    out.certificate_check.identity = "telescoping-certificate";
    return out;
  }
  const Recurrence& rec = *out.recurrence;

  for (long s0 = s_lo; s0 <= s_hi; ++s0) {
    Rational acc(0);
    for (long i = 0; i <= rec.order; ++i)
      acc += rec.coeffs[static_cast<size_t>(i)].eval(Rational(s0)) *
             Rational(beta({s0 + i, l, a, b, m}));
    ++sc.cases_checked;
    if (acc != 0)
      sc.failures.push_back(
          {{{"s", std::to_string(s0)}}, to_string(acc), "0"});
  }
  sc.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();

  const long bp = b >= 0 ? b : -b;
  const long n_hi = bp + std::max(m, 0L) + 2;
  out.certificate_check = verify_certificate(term, rec, s_lo, s_hi, 0, n_hi);
  return out;
}

}  // namespace betasum

#include "betasum/beta.hpp"

#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "betasum/beta_cache.hpp"
#include "betasum/combinatorics.hpp"
#include "betasum/parallel.hpp"
#include "betasum/version.hpp"

namespace betasum {

namespace {

void check_beta_domain(const BetaParams& p) {
  if (p.s < p.l) throw std::domain_error("beta: requires s >= l");
  if (p.a < 0 || p.a > p.s)
    throw std::domain_error("beta: requires s >= a >= 0");
}

}  // namespace

namespace detail {

// All binomial tops are nonnegative when s >= l and s >= a >= 0.
Int beta_value_unchecked(long s, long l, long a, long b, long m) {
  const auto [bp, bm] = split_b(b);
  const long nmax = std::labs(b) + m;
  Int acc = 0;
  const bool small = s + std::labs(b) + std::max(m, 0L) + 1 <
                     detail::kBinomialTableCap;
  if (small) {
    Int t;
    for (long n = 0; n <= nmax; ++n) {
      const Int& f1 = detail::binomial_ref(s - a, bp + m - n);
      if (f1 == 0) continue;
      const Int& f2 = detail::binomial_ref(a, bm + m - n);
      if (f2 == 0) continue;
      const Int& f3 = detail::binomial_ref(s - l + n, n);
      t = f1 * f2;
      mpz_addmul(acc.get_mpz_t(), t.get_mpz_t(), f3.get_mpz_t());
    }
  } else {
    for (long n = 0; n <= nmax; ++n) {
      Int f = binomial(s - a, bp + m - n);
      if (f == 0) continue;
      f *= binomial(a, bm + m - n);
      if (f == 0) continue;
      acc += f * binomial(s - l + n, n);
    }
  }
  return acc;
}

}  // namespace detail

namespace {

using detail::beta_value_unchecked;
using detail::BetaCache;

struct CaseSides {
  Int lhs, rhs;
};

CaseSides case_sides(BetaCase c, BetaCache& g, long a, long b, long m) {
  switch (c) {
    case BetaCase::i:
      return {g.get(0, a, b, m), g.get(1, a, b, m) - g.get(1, a + 1, b - 1, m)};
    case BetaCase::ii:
      return {g.get(0, a - 1, b, m),
              g.get(1, a, b, m) - g.get(1, a - 1, b + 1, m - 1)};
    case BetaCase::iii:
      return {g.get(0, a, b, m),
              g.get(1, a, b, m) - g.get(1, a + 1, b - 1, m - 1)};
    case BetaCase::iv:
      return {g.get(0, a - 1, b, m),
              g.get(1, a, b, m) - g.get(1, a - 1, b + 1, m)};
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Int beta(const BetaParams& p) {
  check_beta_domain(p);
  return beta_value_unchecked(p.s, p.l, p.a, p.b, p.m);
}

const char* beta_case_name(BetaCase c) {
  switch (c) {
    case BetaCase::i: return "i";
    case BetaCase::ii: return "ii";
    case BetaCase::iii: return "iii";
    case BetaCase::iv: return "iv";
  }
  return "?";
}

bool beta_case_applies(BetaCase c, const BetaParams& p) {
  switch (c) {
    case BetaCase::i: return p.b > 0;
    case BetaCase::ii: return p.a > 0 && p.b >= 0;
    case BetaCase::iii: return p.b <= 0;
    case BetaCase::iv: return p.a > 0 && p.b < 0;
  }
  return false;
}

RecurrenceWitness verify_beta_recurrence(BetaCase c, const BetaParams& p) {
  check_beta_domain(p);
  if (!beta_case_applies(c, p)) {
    std::string msg = "beta recurrence case ";
    msg += beta_case_name(c);
    msg += ": side condition ";
    switch (c) {
      case BetaCase::i: msg += "b > 0"; break;
      case BetaCase::ii: msg += "a > 0 and b >= 0"; break;
      case BetaCase::iii: msg += "b <= 0"; break;
      case BetaCase::iv: msg += "a > 0 and b < 0"; break;
    }
    msg += " does not hold";
    throw std::domain_error(msg);
  }
  const long s = p.s, l = p.l, a = p.a, b = p.b, m = p.m;
  Int lhs, rhs;
  switch (c) {
    case BetaCase::i:
      lhs = beta_value_unchecked(s, l, a, b, m);
      rhs = beta_value_unchecked(s + 1, l, a, b, m) - beta_value_unchecked(s + 1, l, a + 1, b - 1, m);
      break;
    case BetaCase::ii:
      lhs = beta_value_unchecked(s, l, a - 1, b, m);
      rhs = beta_value_unchecked(s + 1, l, a, b, m) -
            beta_value_unchecked(s + 1, l, a - 1, b + 1, m - 1);
      break;
    case BetaCase::iii:
      lhs = beta_value_unchecked(s, l, a, b, m);
      rhs = beta_value_unchecked(s + 1, l, a, b, m) -
            beta_value_unchecked(s + 1, l, a + 1, b - 1, m - 1);
      break;
    case BetaCase::iv:
      lhs = beta_value_unchecked(s, l, a - 1, b, m);
      rhs = beta_value_unchecked(s + 1, l, a, b, m) - beta_value_unchecked(s + 1, l, a - 1, b + 1, m);
      break;
  }
  return {lhs == rhs, lhs, rhs};
}

VerificationReport sweep_beta_recurrences(const BetaSweepBox& box, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  if (jobs <= 0) jobs = detail::default_jobs();

  VerificationReport r;
  r.identity = "beta-recurrences";
  r.box = {{"s_max", box.s_max}, {"m_max", box.m_max}};
  r.param_names = {"s", "l", "a", "b", "m", "case"};
  r.version = kVersion;

  std::vector<std::pair<long, long>> units;
  for (long s = 0; s <= box.s_max; ++s)
    for (long l = 0; l <= s; ++l) units.emplace_back(s, l);

  std::vector<detail::UnitResult> results(units.size());
  const long b_abs = box.s_max + 1;

  detail::for_each_unit(
      static_cast<long>(units.size()), jobs, [&](long u) {
        const auto [s, l] = units[u];
        auto& out = results[u];
        BetaCache cache(s, l, b_abs, box.m_max);
        for (long a = 0; a <= s; ++a)
          for (long b = -box.s_max; b <= box.s_max; ++b)
            for (long m = 0; m <= box.m_max; ++m)
              for (int ci = 1; ci <= 4; ++ci) {
                const auto c = static_cast<BetaCase>(ci);
                if (!beta_case_applies(c, {s, l, a, b, m})) {
                  ++out.skipped;
                  continue;
                }
                ++out.checked;
                auto sides = case_sides(c, cache, a, b, m);
                if (sides.lhs != sides.rhs) {
                  out.failures.push_back(
                      {{{"s", std::to_string(s)},
                        {"l", std::to_string(l)},
                        {"a", std::to_string(a)},
                        {"b", std::to_string(b)},
                        {"m", std::to_string(m)},
                        {"case", beta_case_name(c)}},
                       to_string(sides.lhs),
                       to_string(sides.rhs)});
                }
              }
      });

  detail::merge_units(r, results);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

}  // namespace betasum

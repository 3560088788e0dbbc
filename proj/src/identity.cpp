#include "betasum/identity.hpp"

#include <chrono>
#include <stdexcept>
#include <vector>

#include "betasum/beta_cache.hpp"
#include "betasum/combinatorics.hpp"
#include "betasum/parallel.hpp"
#include "betasum/version.hpp"

namespace betasum {

namespace {

// (-2)^k for k >= 0.  The reference stays valid until the next call on the
// same thread grows the table; callers consume it immediately.
const Int& pow_neg2(long k) {
  thread_local std::vector<Int> table;
  while (static_cast<long>(table.size()) <= k) {
    const long e = static_cast<long>(table.size());
    Int v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e));
    if (e & 1) v = -v;
    table.push_back(std::move(v));
  }
  return table[k];
}

// Trinomial weight n! / (p1! p2! p3!) with p1 + p2 + p3 == n; 0 when any
// part is negative.
Int weight3(long n, long p1, long p2, long p3) {
  if (p1 < 0 || p2 < 0 || p3 < 0) return 0;
  return binomial(n, p1) * binomial(n - p1, p2);
}

// Supplies beta values at s0+ds for the sum evaluators below, either fresh
// or from a per-(s, l) cache.
struct BetaSource {
  virtual const Int& get(long ds, long a, long b, long m) = 0;
  virtual ~BetaSource() = default;
};

struct DirectBeta final : BetaSource {
  long s0, l;
  Int tmp;
  DirectBeta(long s0_, long l_) : s0(s0_), l(l_) {}
  const Int& get(long ds, long a, long b, long m) override {
    tmp = detail::beta_value_unchecked(s0 + ds, l, a, b, m);
    return tmp;
  }
};

struct CachedBeta final : BetaSource {
  detail::BetaCache* cache;
  explicit CachedBeta(detail::BetaCache* c) : cache(c) {}
  const Int& get(long ds, long a, long b, long m) override {
    return cache->get(ds, a, b, m);
  }
};

// s is the value the weights see; B.get(ds, ...) must return beta at the
// same s.  Weight-zero summands are skipped before beta is touched.
Int lambda_impl(BetaSource& B, long ds, long s, long l, long j, long m) {
  Int acc = 0;
  for (long i = 2 * m; i <= l; ++i) {
    const long k = i - 2 * m;
    if (i <= l - 1) {
      Int w = weight3(s - l, k, j - l + m, s - i - j + m);
      if (w != 0) acc += pow_neg2(k) * w * B.get(ds, i + j - l, l - i, m);
    }
    Int w = weight3(s - l, k, j - i + m, s - l - j + m);
    if (w != 0) acc += pow_neg2(k) * w * B.get(ds, l + j - i, i - l, m);
  }
  return acc;
}

// Beta values at s+1, weights at s; empty for m < 0 or l < 2m + 2.
Int phi_impl(BetaSource& B, long s, long l, long j, long m) {
  if (m < 0) return 0;
  Int acc = 0;
  for (long i = 2 * m + 1; i <= l - 1; ++i) {
    const long k = i - 2 * m - 1;
    Int w = weight3(s - l, k, j - l + m, s - i - j + m + 1);
    if (w != 0) acc += pow_neg2(k) * w * B.get(1, i + j - l, l - i, m);
    w = weight3(s - l, k, j - i + m, s - l - j + m + 1);
    if (w != 0) acc += pow_neg2(k) * w * B.get(1, l + j - i, i - l, m);
  }
  return acc;
}

Int gamma_impl(BetaSource& B, long ds, long s, long l, long j) {
  Int acc = 0;
  for (long m = 0; m <= l / 2; ++m) acc += lambda_impl(B, ds, s, l, j, m);
  return acc;
}

// Double sum over m <= floor((l-1)/2) plus the boundary single sum over
// m <= floor(l/2); equals C(s, j) for every l.
Int theorem_lhs_impl(BetaSource& B, long ds, long s, long l, long j) {
  Int acc = 0;
  for (long m = 0; 2 * m <= l - 1; ++m)
    for (long i = 2 * m; i <= l - 1; ++i) {
      const long k = i - 2 * m;
      Int w = weight3(s - l, k, j - l + m, s - i - j + m);
      if (w != 0) acc += pow_neg2(k) * w * B.get(ds, i + j - l, l - i, m);
      w = weight3(s - l, k, j - i + m, s - l - j + m);
      if (w != 0) acc += pow_neg2(k) * w * B.get(ds, l + j - i, i - l, m);
    }
  for (long m = 0; 2 * m <= l; ++m) {
    const long k = l - 2 * m;
    Int w = weight3(s - l, k, j - l + m, s - l - j + m);
    if (w != 0) acc += pow_neg2(k) * w * B.get(ds, j, 0, m);
  }
  return acc;
}

void check_sl(const char* who, long s, long l) {
  if (l < 0 || s < l) {
    std::string msg = who;
    msg += ": requires s >= l >= 0";
    throw std::domain_error(msg);
  }
}

}  // namespace

Int lambda_m(long s, long l, long j, long m) {
  check_sl("lambda", s, l);
  if (m < 0) throw std::domain_error("lambda: requires m >= 0");
  DirectBeta B(s, l);
  return lambda_impl(B, 0, s, l, j, m);
}

Int phi_m(long s, long l, long j, long m) {
  check_sl("phi", s, l);
  if (m < 0) return 0;
  DirectBeta B(s, l);
  return phi_impl(B, s, l, j, m);
}

Int gamma(long s, long l, long j) {
  check_sl("gamma", s, l);
  DirectBeta B(s, l);
  return gamma_impl(B, 0, s, l, j);
}

Int theorem_lhs(long s, long l, long j) {
  check_sl("theorem_lhs", s, l);
  DirectBeta B(s, l);
  return theorem_lhs_impl(B, 0, s, l, j);
}

LambdaWitness verify_lambda_recurrence(long s, long l, long j, long m) {
  check_sl("lambda recurrence", s, l);
  if (j < 0) throw std::domain_error("lambda recurrence: requires j >= 0");
  if (m < 0) throw std::domain_error("lambda recurrence: requires m >= 0");
  DirectBeta B(s, l);
  Int lhs = lambda_impl(B, 0, s, l, j, m) + lambda_impl(B, 0, s, l, j - 1, m);
  Int rhs = lambda_impl(B, 1, s + 1, l, j, m) + phi_impl(B, s, l, j, m) -
            phi_impl(B, s, l, j, m - 1);
  return {lhs == rhs, lhs, rhs};
}

namespace {

std::vector<std::pair<long, long>> sl_units(long s_max) {
  std::vector<std::pair<long, long>> units;
  for (long s = 0; s <= s_max; ++s)
    for (long l = 0; l <= s; ++l) units.emplace_back(s, l);
  return units;
}

void finish(VerificationReport& r,
            const std::chrono::steady_clock::time_point& t0,
            std::vector<detail::UnitResult>& results) {
  detail::merge_units(r, results);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
}

void push_slj_failure(detail::UnitResult& out, long s, long l, long j,
                      const Int& lhs, const Int& rhs) {
  out.failures.push_back({{{"s", std::to_string(s)},
                           {"l", std::to_string(l)},
                           {"j", std::to_string(j)}},
                          to_string(lhs),
                          to_string(rhs)});
}

}  // namespace

VerificationReport sweep_lambda_recurrence(long s_max, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  if (jobs <= 0) jobs = detail::default_jobs();
  VerificationReport r;
  r.identity = "lambda-recurrence";
  r.box = {{"s_max", s_max}};
  r.param_names = {"s", "l", "j", "m"};
  r.version = kVersion;

  auto units = sl_units(s_max);
  std::vector<detail::UnitResult> results(units.size());

  detail::for_each_unit(static_cast<long>(units.size()), jobs, [&](long u) {
    const auto [s, l] = units[u];
    auto& out = results[u];
    detail::BetaCache cache(s, l, l > 0 ? l : 1, l / 2 + 1);
    CachedBeta B(&cache);
    for (long j = 0; j <= s + 1; ++j)
      for (long m = 0; m <= l / 2 + 1; ++m) {
        ++out.checked;
        Int lhs =
            lambda_impl(B, 0, s, l, j, m) + lambda_impl(B, 0, s, l, j - 1, m);
        Int rhs = lambda_impl(B, 1, s + 1, l, j, m) +
                  phi_impl(B, s, l, j, m) - phi_impl(B, s, l, j, m - 1);
        if (lhs != rhs) {
          out.failures.push_back({{{"s", std::to_string(s)},
                                   {"l", std::to_string(l)},
                                   {"j", std::to_string(j)},
                                   {"m", std::to_string(m)}},
                                  to_string(lhs),
                                  to_string(rhs)});
        }
      }
  });

  finish(r, t0, results);
  return r;
}

VerificationReport verify_theorem(long s_max, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  if (jobs <= 0) jobs = detail::default_jobs();
  VerificationReport r;
  r.identity = "theorem";
  r.box = {{"s_max", s_max}};
  r.param_names = {"s", "l", "j", "route"};
  r.version = kVersion;

  auto units = sl_units(s_max);
  std::vector<detail::UnitResult> results(units.size());

  detail::for_each_unit(static_cast<long>(units.size()), jobs, [&](long u) {
    const auto [s, l] = units[u];
    auto& out = results[u];
    detail::BetaCache cache(s, l, l > 0 ? l : 1, l / 2);
    CachedBeta B(&cache);
    for (long j = -1; j <= s + 1; ++j) {
      const Int expected = binomial(s, j);
      const Int direct = theorem_lhs_impl(B, 0, s, l, j);
      const Int partial = gamma_impl(B, 0, s, l, j);
      ++out.checked;
      if (direct != expected) {
        out.failures.push_back({{{"s", std::to_string(s)},
                                 {"l", std::to_string(l)},
                                 {"j", std::to_string(j)},
                                 {"route", "direct"}},
                                to_string(direct),
                                to_string(expected)});
      }
      ++out.checked;
      if (partial != expected) {
        out.failures.push_back({{{"s", std::to_string(s)},
                                 {"l", std::to_string(l)},
                                 {"j", std::to_string(j)},
                                 {"route", "partial-sums"}},
                                to_string(partial),
                                to_string(expected)});
      }
    }
  });

  finish(r, t0, results);
  return r;
}

VerificationReport verify_boundary(long s_max, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  if (jobs <= 0) jobs = detail::default_jobs();
  VerificationReport r;
  r.identity = "boundary";
  r.box = {{"s_max", s_max}};
  r.param_names = {"s", "l", "j"};
  r.version = kVersion;

  auto units = sl_units(s_max);
  std::vector<detail::UnitResult> results(units.size());

  detail::for_each_unit(static_cast<long>(units.size()), jobs, [&](long u) {
    const auto [s, l] = units[u];
    auto& out = results[u];
    DirectBeta B(s, l);
    const long js[] = {-3, -2, -1, 0, s + 1, s + 2, s + 3};
    for (long j : js) {
      ++out.checked;
      const Int expected = (j == 0) ? 1 : 0;
      Int got = gamma_impl(B, 0, s, l, j);
      if (got != expected) push_slj_failure(out, s, l, j, got, expected);
    }
  });

  finish(r, t0, results);
  return r;
}

VerificationReport verify_gamma_pascal(long s_max, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  if (jobs <= 0) jobs = detail::default_jobs();
  VerificationReport r;
  r.identity = "gamma-pascal";
  r.box = {{"s_max", s_max}};
  r.param_names = {"s", "l", "j"};
  r.version = kVersion;

  auto units = sl_units(s_max);
  std::vector<detail::UnitResult> results(units.size());

  detail::for_each_unit(static_cast<long>(units.size()), jobs, [&](long u) {
    const auto [s, l] = units[u];
    auto& out = results[u];
    detail::BetaCache cache(s, l, l > 0 ? l : 1, l / 2);
    CachedBeta B(&cache);
    for (long j = -1; j <= s + 2; ++j) {
      ++out.checked;
      Int lhs = gamma_impl(B, 1, s + 1, l, j);
      Int rhs = gamma_impl(B, 0, s, l, j) + gamma_impl(B, 0, s, l, j - 1);
      if (lhs != rhs) push_slj_failure(out, s, l, j, lhs, rhs);
    }
  });

  finish(r, t0, results);
  return r;
}

VerificationReport verify_l_independence(long s_max, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  if (jobs <= 0) jobs = detail::default_jobs();
  VerificationReport r;
  r.identity = "l-independence";
  r.box = {{"s_max", s_max}};
  r.param_names = {"s", "l", "j"};
  r.version = kVersion;

  std::vector<detail::UnitResult> results(static_cast<size_t>(s_max) + 1);

  detail::for_each_unit(s_max + 1, jobs, [&](long s) {
    auto& out = results[s];
    std::vector<Int> base;
    for (long l = 0; l <= s; ++l) {
      detail::BetaCache cache(s, l, l > 0 ? l : 1, l / 2);
      CachedBeta B(&cache);
      if (l == 0) {
        for (long j = -1; j <= s + 1; ++j)
          base.push_back(theorem_lhs_impl(B, 0, s, l, j));
        continue;
      }
      for (long j = -1; j <= s + 1; ++j) {
        ++out.checked;
        Int got = theorem_lhs_impl(B, 0, s, l, j);
        const Int& expected = base[static_cast<size_t>(j + 1)];
        if (got != expected) push_slj_failure(out, s, l, j, got, expected);
      }
    }
  });

  finish(r, t0, results);
  return r;
}

}  // namespace betasum

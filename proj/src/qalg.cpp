#include "betasum/qalg.hpp"

#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "betasum/parallel.hpp"
#include "betasum/version.hpp"

namespace betasum {

namespace {

const LaurentPoly kQZero;

// 1 + q + ... + q^{k-1}.
LaurentPoly q_integer(long k) {
  LaurentPoly p;
  for (long e = 0; e < k; ++e) p += LaurentPoly::q_power(e);
  return p;
}

std::vector<LaurentPoly>& qfact_table() {
  thread_local std::vector<LaurentPoly> table{LaurentPoly(1)};
  return table;
}

// Gaussian-binomial rows, computed by the mandated division route and
// memoized per thread.
const LaurentPoly& qbinomial_ref(long n, long r) {
  if (r < 0 || r > n) return kQZero;
  thread_local std::vector<std::vector<LaurentPoly>> rows;
  thread_local std::vector<std::vector<unsigned char>> known;
  if (static_cast<long>(rows.size()) <= n) {
    rows.resize(static_cast<size_t>(n) + 1);
    known.resize(static_cast<size_t>(n) + 1);
  }
  auto& row = rows[static_cast<size_t>(n)];
  auto& flag = known[static_cast<size_t>(n)];
  if (row.empty()) {
    row.resize(static_cast<size_t>(n) + 1);
    flag.assign(static_cast<size_t>(n) + 1, 0);
  }
  if (!flag[static_cast<size_t>(r)]) {
    row[static_cast<size_t>(r)] = qmultinomial({r, n - r});
    flag[static_cast<size_t>(r)] = 1;
  }
  return row[static_cast<size_t>(r)];
}

// Literal summation, no domain checks (same guarantees as the integer
// kernel: all tops nonnegative when s >= l, s >= a >= 0).
LaurentPoly qbeta_value(long s, long l, long a, long b, long m) {
  const auto [bp, bm] = split_b(b);
  const long absb = bp + bm;
  LaurentPoly acc;
  for (long n = 0; n <= absb + m; ++n) {
    const LaurentPoly& f1 = qbinomial_ref(s - a, bp + m - n);
    if (f1.is_zero()) continue;
    const LaurentPoly& f2 = qbinomial_ref(a, bm + m - n);
    if (f2.is_zero()) continue;
    const LaurentPoly& f3 = qbinomial_ref(s - l + n, n);
    acc += (f1 * f2 * f3).shifted(n * (n - absb + l - 2 * m));
  }
  return acc;
}

void check_qbeta_domain(const BetaParams& p) {
  if (p.s < p.l) throw std::domain_error("qbeta: requires s >= l");
  if (p.a < 0 || p.a > p.s)
    throw std::domain_error("qbeta: requires s >= a >= 0");
}

// Dense per-(s, l) store of qbeta values at s and s+1.
class QBetaCache {
 public:
  QBetaCache(long s, long l, long b_abs, long m_max)
      : s_(s),
        l_(l),
        b_abs_(b_abs),
        na_(static_cast<size_t>(s) + 2),
        nb_(static_cast<size_t>(2 * b_abs) + 1),
        nm_(static_cast<size_t>(m_max) + 2),
        values_(2 * na_ * nb_ * nm_),
        known_(2 * na_ * nb_ * nm_, 0) {}

  const LaurentPoly& get(long ds, long a, long b, long m) {
    const size_t idx =
        ((static_cast<size_t>(ds) * na_ + static_cast<size_t>(a)) * nb_ +
         static_cast<size_t>(b + b_abs_)) *
            nm_ +
        static_cast<size_t>(m + 1);
    if (!known_[idx]) {
      values_[idx] = qbeta_value(s_ + ds, l_, a, b, m);
      known_[idx] = 1;
    }
    return values_[idx];
  }

 private:
  long s_, l_, b_abs_;
  size_t na_, nb_, nm_;
  std::vector<LaurentPoly> values_;
  std::vector<unsigned char> known_;
};

struct QSides {
  LaurentPoly lhs, rhs;
};

// The q-power carried by the subtracted term of each case.
long case_power(BetaCase c, long s, long a, long b, long m) {
  switch (c) {
    case BetaCase::i: return s - a - b - m + 1;
    case BetaCase::ii: return a - m;
    case BetaCase::iii: return s - a - m + 1;
    case BetaCase::iv: return a + b - m;
  }
  throw std::logic_error("unreachable");
}

QSides q_case_sides(BetaCase c, QBetaCache& g, long s, long a, long b,
                    long m) {
  const long e = case_power(c, s, a, b, m);
  switch (c) {
    case BetaCase::i:
      return {g.get(0, a, b, m),
              g.get(1, a, b, m) - g.get(1, a + 1, b - 1, m).shifted(e)};
    case BetaCase::ii:
      return {g.get(0, a - 1, b, m),
              g.get(1, a, b, m) - g.get(1, a - 1, b + 1, m - 1).shifted(e)};
    case BetaCase::iii:
      return {g.get(0, a, b, m),
              g.get(1, a, b, m) - g.get(1, a + 1, b - 1, m - 1).shifted(e)};
    case BetaCase::iv:
      return {g.get(0, a - 1, b, m),
              g.get(1, a, b, m) - g.get(1, a - 1, b + 1, m).shifted(e)};
  }
  throw std::logic_error("unreachable");
}

}  // namespace

LaurentPoly qint_factorial(long n) {
  if (n < 0) throw std::domain_error("qint_factorial: requires n >= 0");
  auto& table = qfact_table();
  while (static_cast<long>(table.size()) <= n) {
    const long k = static_cast<long>(table.size());
    table.push_back(table.back() * q_integer(k));
  }
  return table[static_cast<size_t>(n)];
}

LaurentPoly qmultinomial(std::span<const long> parts) {
  long total = 0;
  bool negative_part = false;
  for (long p : parts) {
    total += p;
    if (p < 0) negative_part = true;
  }
  if (total < 0) throw std::domain_error("qmultinomial: requires total >= 0");
  if (negative_part) return {};
  LaurentPoly out = qint_factorial(total);
  for (long p : parts) out = out.exact_div(qint_factorial(p));
  return out;
}

LaurentPoly qmultinomial(std::initializer_list<long> parts) {
  return qmultinomial(std::span<const long>(parts.begin(), parts.size()));
}

LaurentPoly qbinomial(long n, long r) {
  if (n < 0) throw std::domain_error("qbinomial: requires n >= 0");
  if (r < 0 || r > n) return {};
  return qbinomial_ref(n, r);
}

LaurentPoly qbeta(const BetaParams& p) {
  check_qbeta_domain(p);
  return qbeta_value(p.s, p.l, p.a, p.b, p.m);
}

QRecurrenceWitness verify_q_recurrence(BetaCase c, const BetaParams& p) {
  check_qbeta_domain(p);
  if (!beta_case_applies(c, p)) {
    std::string msg = "q recurrence case ";
    msg += beta_case_name(c);
    msg += ": side condition does not hold";
    throw std::domain_error(msg);
  }
  const long s = p.s, l = p.l, a = p.a, b = p.b, m = p.m;
  const long e = case_power(c, s, a, b, m);
  LaurentPoly lhs, rhs;
  switch (c) {
    case BetaCase::i:
      lhs = qbeta_value(s, l, a, b, m);
      rhs = qbeta_value(s + 1, l, a, b, m) -
            qbeta_value(s + 1, l, a + 1, b - 1, m).shifted(e);
      break;
    case BetaCase::ii:
      lhs = qbeta_value(s, l, a - 1, b, m);
      rhs = qbeta_value(s + 1, l, a, b, m) -
            qbeta_value(s + 1, l, a - 1, b + 1, m - 1).shifted(e);
      break;
    case BetaCase::iii:
      lhs = qbeta_value(s, l, a, b, m);
      rhs = qbeta_value(s + 1, l, a, b, m) -
            qbeta_value(s + 1, l, a + 1, b - 1, m - 1).shifted(e);
      break;
    case BetaCase::iv:
      lhs = qbeta_value(s, l, a - 1, b, m);
      rhs = qbeta_value(s + 1, l, a, b, m) -
            qbeta_value(s + 1, l, a - 1, b + 1, m).shifted(e);
      break;
  }
  return {lhs == rhs, lhs, rhs};
}

VerificationReport sweep_q_recurrences(const QSweepBox& box, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  if (jobs <= 0) jobs = detail::default_jobs();
  VerificationReport r;
  r.identity = "q-recurrences";
  r.box = {{"s_max", box.s_max}, {"b_max", box.b_max}, {"m_max", box.m_max}};
  r.param_names = {"s", "l", "a", "b", "m", "case"};
  r.version = kVersion;

  std::vector<std::pair<long, long>> units;
  for (long s = 0; s <= box.s_max; ++s)
    for (long l = 0; l <= s; ++l) units.emplace_back(s, l);
  std::vector<detail::UnitResult> results(units.size());

  detail::for_each_unit(static_cast<long>(units.size()), jobs, [&](long u) {
    const auto [s, l] = units[u];
    auto& out = results[u];
    QBetaCache cache(s, l, box.b_max + 1, box.m_max);
    for (long a = 0; a <= s; ++a)
      for (long b = -box.b_max; b <= box.b_max; ++b)
        for (long m = 0; m <= box.m_max; ++m)
          for (int ci = 1; ci <= 4; ++ci) {
            const auto c = static_cast<BetaCase>(ci);
            if (!beta_case_applies(c, {s, l, a, b, m})) {
              ++out.skipped;
              continue;
            }
            ++out.checked;
            auto sides = q_case_sides(c, cache, s, a, b, m);
            if (!(sides.lhs == sides.rhs)) {
              out.failures.push_back({{{"s", std::to_string(s)},
                                       {"l", std::to_string(l)},
                                       {"a", std::to_string(a)},
                                       {"b", std::to_string(b)},
                                       {"m", std::to_string(m)},
                                       {"case", beta_case_name(c)}},
                                      sides.lhs.to_string(),
                                      sides.rhs.to_string()});
            }
          }
  });

  detail::merge_units(r, results);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

VerificationReport sweep_q_specialization(const QSweepBox& box, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  if (jobs <= 0) jobs = detail::default_jobs();
  VerificationReport r;
  r.identity = "q-specialization";
  r.box = {{"s_max", box.s_max}, {"b_max", box.b_max}, {"m_max", box.m_max}};
  r.param_names = {"s", "l", "a", "b", "m"};
  r.version = kVersion;

  std::vector<std::pair<long, long>> units;
  for (long s = 0; s <= box.s_max; ++s)
    for (long l = 0; l <= s; ++l) units.emplace_back(s, l);
  std::vector<detail::UnitResult> results(units.size());

  detail::for_each_unit(static_cast<long>(units.size()), jobs, [&](long u) {
    const auto [s, l] = units[u];
    auto& out = results[u];
    for (long a = 0; a <= s; ++a)
      for (long b = -box.b_max; b <= box.b_max; ++b)
        for (long m = 0; m <= box.m_max; ++m) {
          ++out.checked;
          const Int lhs = qbeta_value(s, l, a, b, m).eval_at_one();
          const Int rhs = detail::beta_value_unchecked(s, l, a, b, m);
          if (lhs != rhs) {
            out.failures.push_back({{{"s", std::to_string(s)},
                                     {"l", std::to_string(l)},
                                     {"a", std::to_string(a)},
                                     {"b", std::to_string(b)},
                                     {"m", std::to_string(m)}},
                                    to_string(lhs),
                                    to_string(rhs)});
          }
        }
  });

  detail::merge_units(r, results);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

VerificationReport verify_q_kernel(long n_max, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  if (jobs <= 0) jobs = detail::default_jobs();
  VerificationReport r;
  r.identity = "q-kernel";
  r.box = {{"n_max", n_max}};
  r.param_names = {"n", "r", "check"};
  r.version = kVersion;

  std::vector<detail::UnitResult> results(static_cast<size_t>(n_max) + 1);

  detail::for_each_unit(n_max + 1, jobs, [&](long n) {
    auto& out = results[n];
    auto fail = [&](long rr, const char* check, const std::string& lhs,
                    const std::string& rhs) {
      out.failures.push_back({{{"n", std::to_string(n)},
                               {"r", std::to_string(rr)},
                               {"check", check}},
                              lhs,
                              rhs});
    };
    for (long rr = 0; rr <= n; ++rr) {
      const LaurentPoly& qb = qbinomial_ref(n, rr);
      ++out.checked;
      if (qb.is_zero() || qb.min_exponent() != 0)
        fail(rr, "min-exponent",
             qb.is_zero() ? "0" : std::to_string(qb.min_exponent()), "0");
      ++out.checked;
      if (qb.is_zero() || qb.max_exponent() != rr * (n - rr))
        fail(rr, "degree",
             qb.is_zero() ? "0" : std::to_string(qb.max_exponent()),
             std::to_string(rr * (n - rr)));
      ++out.checked;
      bool nonneg = true;
      if (!qb.is_zero()) {
        for (long e = qb.min_exponent(); e <= qb.max_exponent(); ++e)
          if (qb.coeff(e) < 0) nonneg = false;
      }
      if (!nonneg) fail(rr, "coefficients", qb.to_string(), ">= 0");
    }
    if (n >= 1) {
      // Rows n-1 -> n so every unit is self-contained.
      for (long rr = 0; rr <= n; ++rr) {
        ++out.checked;
        LaurentPoly lhs = qbinomial(n, rr);
        LaurentPoly rhs = qbinomial(n - 1, rr) +
                          qbinomial(n - 1, rr - 1).shifted(n - rr);
        if (!(lhs == rhs))
          fail(rr, "pascal", lhs.to_string(), rhs.to_string());
      }
    }
  });

  detail::merge_units(r, results);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

long observed_qbeta_min_exponent(long s_max) {
  long best = 0;
  for (long s = 0; s <= s_max; ++s)
    for (long l = 0; l <= s; ++l)
      for (long a = 0; a <= s; ++a)
        for (long m = 0; 2 * m <= l; ++m)
          for (long b = -(l - 2 * m); b <= l - 2 * m; ++b) {
            const LaurentPoly v = qbeta_value(s, l, a, b, m);
            if (!v.is_zero() && v.min_exponent() < best)
              best = v.min_exponent();
          }
  return best;
}

}  // namespace betasum

#pragma once

#include <vector>

#include "betasum/beta.hpp"

namespace betasum::detail {

// Dense per-(s, l) store of beta values at s and s+1, filled on demand.
// Covers ds in {0, 1}, a in [0, s+1], b in [-b_abs, b_abs], m in
// [-1, m_max]; the m = -1 slot exists so recurrences that lower m stay in
// range (those values are 0).
class BetaCache {
 public:
  BetaCache(long s, long l, long b_abs, long m_max)
      : s_(s),
        l_(l),
        b_abs_(b_abs),
        na_(static_cast<size_t>(s) + 2),
        nb_(static_cast<size_t>(2 * b_abs) + 1),
        nm_(static_cast<size_t>(m_max) + 2),
        values_(2 * na_ * nb_ * nm_),
        known_(2 * na_ * nb_ * nm_, 0) {}

  const Int& get(long ds, long a, long b, long m) {
    const size_t idx =
        ((static_cast<size_t>(ds) * na_ + static_cast<size_t>(a)) * nb_ +
         static_cast<size_t>(b + b_abs_)) *
            nm_ +
        static_cast<size_t>(m + 1);
    if (!known_[idx]) {
      values_[idx] = beta_value_unchecked(s_ + ds, l_, a, b, m);
      known_[idx] = 1;
    }
    return values_[idx];
  }

 private:
  long s_, l_, b_abs_;
  size_t na_, nb_, nm_;
  std::vector<Int> values_;
  std::vector<unsigned char> known_;
};

}  // namespace betasum::detail

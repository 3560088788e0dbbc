#pragma once

#include <vector>

#include "betasum/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace betasum::detail {

inline int default_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// One work unit of a sweep.  Units are merged in index order, so the merged
// report does not depend on how the units were scheduled across threads.
struct UnitResult {
  long long checked = 0;
  long long skipped = 0;
  std::vector<SweepFailure> failures;
};

template <class Fn>
void for_each_unit(long n_units, int jobs, Fn&& fn) {
  if (jobs <= 1) {
    for (long u = 0; u < n_units; ++u) fn(u);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long u = 0; u < n_units; ++u) fn(u);
#else
  for (long u = 0; u < n_units; ++u) fn(u);
#endif
}

inline void merge_units(VerificationReport& report,
                        std::vector<UnitResult>& units) {
  for (auto& u : units) {
    report.cases_checked += u.checked;
    report.cases_skipped += u.skipped;
    for (auto& f : u.failures) report.failures.push_back(std::move(f));
  }
}

}  // namespace betasum::detail

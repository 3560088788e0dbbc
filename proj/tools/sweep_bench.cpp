#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <thread>

#include "betasum/beta.hpp"
#include "betasum/identity.hpp"
#include "betasum/qalg.hpp"
#include "betasum/report.hpp"

namespace {

using namespace betasum;

long long run_timed(const std::function<VerificationReport(int)>& sweep,
                    int jobs, VerificationReport& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = sweep(jobs);
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

// Times each sweep with the serial reference path (jobs = 1) and with the
// parallel path, and byte-compares the rendered reports: wall time may
// differ, output must not.
int main(int argc, char** argv) {
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  if (argc > 1) {
    jobs = std::atoi(argv[1]);
    if (jobs < 1) {
      std::fprintf(stderr, "usage: sweep_bench [jobs >= 1]\n");
      return 2;
    }
  }

  struct Row {
    const char* name;
    std::function<VerificationReport(int)> sweep;
  };
  const Row rows[] = {
      {"theorem s<=28", [](int j) { return verify_theorem(28, j); }},
      {"beta-recurrences s<=18 m<=8",
       [](int j) { return sweep_beta_recurrences({18, 8}, j); }},
      {"q-recurrences s<=10 |b|<=10 m<=5",
       [](int j) { return sweep_q_recurrences({10, 10, 5}, j); }},
  };

  std::printf("%-34s %10s %10s %9s  %s\n", "sweep", "jobs=1", "parallel",
              "speedup", "reports");
  bool ok = true;
  for (const auto& row : rows) {
    VerificationReport serial, parallel;
    // warm this thread's lookup tables so the serial run pays no
    // first-touch cost the parallel run already amortizes
    run_timed(row.sweep, 1, serial);
    const long long t1 = run_timed(row.sweep, 1, serial);
    const long long tn = run_timed(row.sweep, jobs, parallel);
    const bool identical = render_report(serial, ReportFormat::json) ==
                           render_report(parallel, ReportFormat::json);
    const bool clean = serial.ok() && parallel.ok();
    ok = ok && identical && clean;
    if (tn > 0)
      std::printf("%-34s %8lld ms %8lld ms %8.2fx  %s\n", row.name, t1, tn,
                  static_cast<double>(t1) / static_cast<double>(tn),
                  identical ? (clean ? "identical" : "FAILURES") : "DIFFER");
    else
      std::printf("%-34s %8lld ms %8lld ms %9s  %s\n", row.name, t1, tn, "-",
                  identical ? (clean ? "identical" : "FAILURES") : "DIFFER");
  }
  std::printf("parallel jobs: %d\n", jobs);
  return ok ? 0 : 1;
}

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace betasum {

struct SweepFailure {
  // Parameter name/value pairs in schema order, then the two disagreeing
  // sides rendered exactly.
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;
  std::string rhs;
};

// Result of an exhaustive verification sweep.  Failures are listed in the
// enumeration order of the sweep, which is lexicographic in the parameter
// tuple, so reports from equal runs compare equal.
struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, long>> box;
  long long cases_checked = 0;
  long long cases_skipped = 0;
  std::vector<SweepFailure> failures;
  // Wall-clock time.  Only the text rendering shows it; json and csv pin the
  // field to 0 so repeated runs are byte-identical.
  long long elapsed_ms = 0;
  std::string version;
  std::vector<std::string> param_names;

  bool ok() const { return failures.empty(); }
};

enum class ReportFormat { text, json, csv };

std::optional<ReportFormat> parse_format(std::string_view name);
std::string render_report(const VerificationReport& report, ReportFormat format);

}  // namespace betasum

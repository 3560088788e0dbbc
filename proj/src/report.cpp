#include "betasum/report.hpp"

#include <sstream>

#include "json.hpp"

namespace betasum {

std::optional<ReportFormat> parse_format(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  return std::nullopt;
}

namespace {

std::string render_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  nlohmann::ordered_json box = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.box) box[k] = v;
  j["box"] = box;
  j["cases_checked"] = r.cases_checked;
  j["cases_skipped"] = r.cases_skipped;
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json jf;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : f.params) params[k] = v;
    jf["params"] = params;
    jf["lhs"] = f.lhs;
    jf["rhs"] = f.rhs;
    fails.push_back(std::move(jf));
  }
  j["failures"] = fails;
  j["elapsed_ms"] = 0;
  j["version"] = r.version;
  return j.dump(2) + "\n";
}

std::string render_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "identity," << r.identity << "\n";
  out << "box,";
  for (size_t i = 0; i < r.box.size(); ++i) {
    if (i) out << ";";
    out << r.box[i].first << "=" << r.box[i].second;
  }
  out << "\n";
  out << "cases_checked," << r.cases_checked << "\n";
  out << "cases_skipped," << r.cases_skipped << "\n";
  out << "elapsed_ms,0\n";
  out << "version," << r.version << "\n";
  out << "failures," << r.failures.size() << "\n";
  for (size_t i = 0; i < r.param_names.size(); ++i) {
    if (i) out << ",";
    out << r.param_names[i];
  }
  if (!r.param_names.empty()) out << ",lhs,rhs\n";
  for (const auto& f : r.failures) {
    for (const auto& [k, v] : f.params) out << v << ",";
    out << f.lhs << "," << f.rhs << "\n";
  }
  return out.str();
}

std::string render_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "identity: " << r.identity << "\n";
  out << "box:";
  for (const auto& [k, v] : r.box) out << " " << k << "=" << v;
  out << "\n";
  out << "checked: " << r.cases_checked << "  skipped: " << r.cases_skipped
      << "  failures: " << r.failures.size() << "  elapsed: " << r.elapsed_ms
      << " ms\n";
  out << "version: " << r.version << "\n";
  for (const auto& f : r.failures) {
    out << "FAIL";
    for (const auto& [k, v] : f.params) out << " " << k << "=" << v;
    out << "  lhs=" << f.lhs << "  rhs=" << f.rhs << "\n";
  }
  if (r.failures.empty()) out << "all checks passed\n";
  return out.str();
}

}  // namespace

std::string render_report(const VerificationReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: return render_json(r);
    case ReportFormat::csv: return render_csv(r);
    case ReportFormat::text: return render_text(r);
  }
  return {};
}

}  // namespace betasum

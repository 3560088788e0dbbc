#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "betasum/beta.hpp"
#include "betasum/combinatorics.hpp"
#include "betasum/gosper.hpp"
#include "betasum/identity.hpp"
#include "betasum/qalg.hpp"
#include "betasum/render.hpp"
#include "betasum/report.hpp"
#include "betasum/term.hpp"
#include "betasum/version.hpp"
#include "betasum/zeilberger.hpp"

namespace {

using namespace betasum;

struct GlobalOpts {
  std::string format = "text";
  int jobs = 1;
  std::string out_path;  // empty: stdout
};

// Writes rendered output to --out or stdout; an unwritable file is a usage
// error (exit 2) because the argument itself is unusable.
bool emit(const GlobalOpts& g, const std::string& text) {
  if (g.out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(g.out_path, std::ios::binary);
  if (!f) {
    std::cerr << "betasum: cannot write " << g.out_path << "\n";
    return false;
  }
  f << text;
  f.flush();
  if (!f.good()) {
    std::cerr << "betasum: write failed for " << g.out_path << "\n";
    return false;
  }
  return true;
}

// "key=value" with a decimal integer value; negative values arrive this way
// so they never collide with flag parsing.
std::optional<std::pair<std::string, long>> split_assignment(
    const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size())
    return std::nullopt;
  long v = 0;
  const char* b = arg.data() + eq + 1;
  const char* e = arg.data() + arg.size();
  const auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || p != e) return std::nullopt;
  return std::pair{arg.substr(0, eq), v};
}

// Matches the arguments against an exact key set: no unknowns, no
// duplicates, nothing missing.
std::optional<std::map<std::string, long>> collect_params(
    const std::vector<std::string>& args, const std::vector<std::string>& keys,
    std::string& error) {
  std::map<std::string, long> out;
  for (const auto& a : args) {
    const auto kv = split_assignment(a);
    if (!kv) {
      error = "expected key=value with an integer value, got '" + a + "'";
      return std::nullopt;
    }
    if (std::find(keys.begin(), keys.end(), kv->first) == keys.end()) {
      error = "unknown parameter '" + kv->first + "'";
      return std::nullopt;
    }
    if (!out.emplace(kv->first, kv->second).second) {
      error = "duplicate parameter '" + kv->first + "'";
      return std::nullopt;
    }
  }
  for (const auto& k : keys)
    if (!out.count(k)) {
      error = "missing parameter '" + k + "'";
      return std::nullopt;
    }
  return out;
}

const std::map<std::string, std::vector<std::string>> kEvalParams = {
    {"beta", {"s", "l", "a", "b", "m"}},
    {"qbeta", {"s", "l", "a", "b", "m"}},
    {"lambda", {"s", "l", "j", "m"}},
    {"phi", {"s", "l", "j", "m"}},
    {"gamma", {"s", "l", "j"}},
    {"theorem-lhs", {"s", "l", "j"}},
    {"binomial", {"n", "r"}},
    {"qbinomial", {"n", "r"}},
};

int run_eval(const GlobalOpts& g, const std::string& subject,
             const std::vector<std::string>& args) {
  const auto spec = kEvalParams.find(subject);
  if (spec == kEvalParams.end()) {
    std::cerr << "betasum: unknown subject '" << subject << "'\n";
    return 2;
  }
  std::string err;
  const auto params = collect_params(args, spec->second, err);
  if (!params) {
    std::cerr << "betasum: eval " << subject << ": " << err << "\n";
    return 2;
  }
  const auto at = [&](const char* k) { return params->at(k); };

  std::string value;
  try {
    if (subject == "beta")
      value = to_string(beta({at("s"), at("l"), at("a"), at("b"), at("m")}));
    else if (subject == "qbeta")
      value = qbeta({at("s"), at("l"), at("a"), at("b"), at("m")}).to_string();
    else if (subject == "lambda")
      value = to_string(lambda_m(at("s"), at("l"), at("j"), at("m")));
    else if (subject == "phi")
      value = to_string(phi_m(at("s"), at("l"), at("j"), at("m")));
    else if (subject == "gamma")
      value = to_string(gamma(at("s"), at("l"), at("j")));
    else if (subject == "theorem-lhs")
      value = to_string(theorem_lhs(at("s"), at("l"), at("j")));
    else if (subject == "binomial")
      value = to_string(binomial(at("n"), at("r")));
    else
      value = qbinomial(at("n"), at("r")).to_string();
  } catch (const std::domain_error& e) {
    std::cerr << "betasum: domain error: " << e.what() << "\n";
    return 2;
  }

  std::string text;
  switch (*parse_format(g.format)) {
    case ReportFormat::text:
      text = value + "\n";
      break;
    case ReportFormat::json: {
      nlohmann::ordered_json j;
      j["subject"] = subject;
      nlohmann::ordered_json jp = nlohmann::ordered_json::object();
      for (const auto& k : spec->second) jp[k] = params->at(k);
      j["params"] = jp;
      j["value"] = value;
      j["version"] = kVersion;
      text = j.dump(2) + "\n";
      break;
    }
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "subject," << subject << "\n";
      for (const auto& k : spec->second) out << k << "," << params->at(k) << "\n";
      out << "value," << value << "\n";
      text = out.str();
      break;
    }
  }
  return emit(g, text) ? 0 : 2;
}

struct BoxFlags {
  long s_max = 0, b_max = 0, m_max = 0;
  CLI::Option* s_opt = nullptr;
  CLI::Option* b_opt = nullptr;
  CLI::Option* m_opt = nullptr;
};

int run_verify(const GlobalOpts& g, const std::string& suite,
               const BoxFlags& bf) {
  const bool has_s = bf.s_opt->count() > 0;
  const bool has_b = bf.b_opt->count() > 0;
  const bool has_m = bf.m_opt->count() > 0;
  const auto reject = [&](const char* flag, bool given) {
    if (given)
      std::cerr << "betasum: verify " << suite << " does not take " << flag
                << "\n";
    return given;
  };
  const auto s_or = [&](long d) { return has_s ? bf.s_max : d; };

  VerificationReport rep;
  if (suite == "theorem") {
    if (reject("--b-max", has_b) || reject("--m-max", has_m)) return 2;
    rep = verify_theorem(s_or(20), g.jobs);
  } else if (suite == "beta-recurrences") {
    // |b| is capped by s_max inside the sweep, so b has no separate flag.
    if (reject("--b-max", has_b)) return 2;
    rep = sweep_beta_recurrences({s_or(25), has_m ? bf.m_max : 12}, g.jobs);
  } else if (suite == "lambda-recurrence") {
    if (reject("--b-max", has_b) || reject("--m-max", has_m)) return 2;
    rep = sweep_lambda_recurrence(s_or(20), g.jobs);
  } else if (suite == "boundary") {
    if (reject("--b-max", has_b) || reject("--m-max", has_m)) return 2;
    rep = verify_boundary(s_or(25), g.jobs);
  } else if (suite == "q-recurrences" || suite == "q-specialization") {
    const QSweepBox box{s_or(12), has_b ? bf.b_max : 12, has_m ? bf.m_max : 6};
    rep = suite == "q-recurrences" ? sweep_q_recurrences(box, g.jobs)
                                   : sweep_q_specialization(box, g.jobs);
  } else {
    std::cerr << "betasum: unknown suite '" << suite << "'\n";
    return 2;
  }
  if (!emit(g, render_report(rep, *parse_format(g.format)))) return 2;
  return rep.ok() ? 0 : 1;
}

struct TelescopeOpts {
  std::vector<std::string> inputs;
  std::string target;
  std::string mode = "zeilberger";
  int max_order = 4;
  long verify_range = 15;
};

// Uniform shape for every telescope outcome; rendered once per format.
struct TelescopeOutcome {
  bool found = false;
  std::string message;      // set when nothing was found
  std::optional<int> order; // recurrence outcomes only
  std::string recurrence;
  std::string certificate;
  std::vector<VerificationReport> reports;
  int exit_code = 3;
};

int finish_telescope(const GlobalOpts& g, const std::string& mode,
                     const TelescopeOutcome& oc) {
  std::string text;
  switch (*parse_format(g.format)) {
    case ReportFormat::text: {
      std::ostringstream out;
      if (!oc.found) {
        out << oc.message << "\n";
      } else {
        if (!oc.recurrence.empty()) out << "recurrence: " << oc.recurrence << "\n";
        out << "certificate: " << oc.certificate << "\n";
      }
      for (const auto& r : oc.reports)
        out << render_report(r, ReportFormat::text);
      text = out.str();
      break;
    }
    case ReportFormat::json: {
      nlohmann::ordered_json j;
      j["mode"] = mode;
      j["found"] = oc.found;
      if (!oc.found) j["message"] = oc.message;
      if (oc.order) j["order"] = *oc.order;
      if (!oc.recurrence.empty()) j["recurrence"] = oc.recurrence;
      if (oc.found) j["certificate"] = oc.certificate;
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : oc.reports)
        arr.push_back(
            nlohmann::ordered_json::parse(render_report(r, ReportFormat::json)));
      j["verification"] = arr;
      j["version"] = kVersion;
      text = j.dump(2) + "\n";
      break;
    }
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "mode," << mode << "\n";
      out << "found," << (oc.found ? "true" : "false") << "\n";
      if (!oc.found) out << "message," << oc.message << "\n";
      if (oc.order) out << "order," << *oc.order << "\n";
      if (!oc.recurrence.empty()) out << "recurrence," << oc.recurrence << "\n";
      if (oc.found) out << "certificate," << oc.certificate << "\n";
      for (const auto& r : oc.reports)
        out << render_report(r, ReportFormat::csv);
      text = out.str();
      break;
    }
  }
  if (!emit(g, text)) return 2;
  return oc.exit_code;
}

int run_telescope(const GlobalOpts& g, const TelescopeOpts& t) {
  if (!t.target.empty()) {
    if (t.target != "beta-inner") {
      std::cerr << "betasum: unknown target '" << t.target << "'\n";
      return 2;
    }
    if (t.mode != "zeilberger") {
      std::cerr << "betasum: --target beta-inner runs in zeilberger mode\n";
      return 2;
    }
    std::string err;
    const auto params = collect_params(t.inputs, {"l", "a", "b", "m"}, err);
    if (!params) {
      std::cerr << "betasum: telescope beta-inner: " << err << "\n";
      return 2;
    }
    BetaInnerOutcome out;
    try {
      out = beta_inner_recurrence(params->at("l"), params->at("a"),
                                  params->at("b"), params->at("m"),
                                  t.max_order, t.verify_range);
    } catch (const std::domain_error& e) {
      std::cerr << "betasum: domain error: " << e.what() << "\n";
      return 2;
    }
    TelescopeOutcome oc;
    oc.reports = {out.sum_check, out.certificate_check};
    if (!out.recurrence) {
      oc.message =
          "no recurrence found up to order " + std::to_string(t.max_order);
      oc.exit_code = 3;
    } else {
      oc.found = true;
      oc.order = out.recurrence->order;
      oc.recurrence = render_recurrence(*out.recurrence);
      oc.certificate = render_certificate(*out.recurrence);
      oc.exit_code = out.found_and_valid() ? 0 : 1;
    }
    return finish_telescope(g, t.mode, oc);
  }

  if (t.inputs.size() != 1) {
    std::cerr
        << "betasum: telescope needs a term document path or --target\n";
    return 2;
  }
  std::ifstream in(t.inputs[0]);
  if (!in) {
    std::cerr << "betasum: cannot read " << t.inputs[0] << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  BinomialProductTerm term;
  try {
    term = parse_term_document(buf.str());
  } catch (const std::exception& e) {
    std::cerr << "betasum: " << e.what() << "\n";
    return 2;
  }

  if (t.mode == "gosper") {
    TelescopeOutcome oc;
    try {
      const auto ratio = term_ratio(term);
      const auto cert = gosper(ratio);
      if (!cert) {
        oc.message = "not Gosper-summable";
        oc.exit_code = 3;
      } else {
        oc.found = true;
        oc.certificate = ratfunc_to_string(cert->R, term.running_variable);
        const auto value = [&](long v) { return eval_term(term, 0, v); };
        const auto rep = verify_certificate(value, *cert, 0, 2 * t.verify_range);
        oc.reports = {rep};
        oc.exit_code = rep.ok() && rep.cases_checked > 0 ? 0 : 1;
      }
    } catch (const std::invalid_argument& e) {
      std::cerr << "betasum: " << e.what() << "\n";
      return 2;
    }
    return finish_telescope(g, t.mode, oc);
  }

  TelescopeOutcome oc;
  try {
    const auto rec = zeilberger(term, t.max_order);
    if (!rec) {
      oc.message =
          "no recurrence found up to order " + std::to_string(t.max_order);
      oc.exit_code = 3;
    } else {
      oc.found = true;
      oc.order = rec->order;
      oc.recurrence = render_recurrence(*rec);
      oc.certificate = render_certificate(*rec);
      const auto rep = verify_certificate(term, *rec, 0, t.verify_range - 1,
                                          -1, t.verify_range);
      oc.reports = {rep};
      oc.exit_code = rep.ok() && rep.cases_checked > 0 ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "betasum: " << e.what() << "\n";
    return 2;
  }
  return finish_telescope(g, t.mode, oc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact evaluation, exhaustive verification, and telescoping for "
      "binomial sum identities"};
  app.require_subcommand(1);

  GlobalOpts g;
  const unsigned hw = std::thread::hardware_concurrency();
  g.jobs = hw == 0 ? 1 : static_cast<int>(hw);
  const auto add_global = [&](CLI::App* a) {
    a->add_option("--format", g.format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    a->add_option("--jobs", g.jobs, "worker threads for sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    a->add_option("--out", g.out_path, "write output to a file");
  };
  add_global(&app);

  std::string eval_subject;
  std::vector<std::string> eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "print one exact value");
  eval_cmd
      ->add_option("subject", eval_subject,
                   "beta|qbeta|lambda|phi|gamma|theorem-lhs|binomial|qbinomial")
      ->required();
  eval_cmd->add_option("params", eval_args,
                       "key=value integers, e.g. s=4 l=2 a=2 b=-2 m=0");
  add_global(eval_cmd);

  std::string suite;
  BoxFlags bf;
  auto* verify_cmd =
      app.add_subcommand("verify", "run an exhaustive identity sweep");
  verify_cmd
      ->add_option("suite", suite,
                   "beta-recurrences|lambda-recurrence|theorem|boundary|"
                   "q-recurrences|q-specialization")
      ->required();
  bf.s_opt = verify_cmd->add_option("--s-max", bf.s_max, "upper bound on s")
                 ->check(CLI::NonNegativeNumber);
  bf.b_opt = verify_cmd->add_option("--b-max", bf.b_max, "bound on |b|")
                 ->check(CLI::NonNegativeNumber);
  bf.m_opt = verify_cmd->add_option("--m-max", bf.m_max, "upper bound on m")
                 ->check(CLI::NonNegativeNumber);
  add_global(verify_cmd);

  TelescopeOpts tel;
  auto* tel_cmd = app.add_subcommand(
      "telescope", "search for a recurrence or an antidifference certificate");
  tel_cmd->add_option("inputs", tel.inputs,
                      "term document path, or l= a= b= m= with --target");
  tel_cmd->add_option("--target", tel.target,
                      "built-in summand family: beta-inner");
  tel_cmd->add_option("--mode", tel.mode, "zeilberger|gosper")
      ->check(CLI::IsMember({"zeilberger", "gosper"}))
      ->capture_default_str();
  tel_cmd
      ->add_option("--max-order", tel.max_order, "largest recurrence order tried")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tel_cmd
      ->add_option("--verify-range", tel.verify_range,
                   "size of the pointwise verification range")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_global(tel_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (eval_cmd->parsed()) return run_eval(g, eval_subject, eval_args);
  if (verify_cmd->parsed()) return run_verify(g, suite, bf);
  return run_telescope(g, tel);
}

// Batch front end: runs the verification suites, integrates truncated EP
// flow scenarios to CSV, and exposes the action/moment derivations on
// serialized inputs.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input,
// 3 internal failure, 4 flow blow-up.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "schouten/serialize.hpp"
#include "schouten/verify.hpp"

namespace {

using schouten::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitBlowUp = 4;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

json report_to_json(const schouten::VerifyReport& report) {
  json identities = json::array();
  schouten::Rational worst = 0;
  for (const auto& id : report.identities) {
    identities.push_back({{"name", id.name},
                          {"anchor", id.anchor},
                          {"pass", id.pass()},
                          {"max_residual", schouten::scalar_traits<schouten::Rational>::to_string(
                                               id.max_residual)}});
    if (id.max_residual > worst) worst = id.max_residual;
  }
  return {{"suite", report.suite},
          {"seed", report.seed},
          {"cases", report.cases},
          {"mutated", report.mutated},
          {"pass", report.pass()},
          {"residual_summary",
           {{"max", schouten::scalar_traits<schouten::Rational>::to_string(worst)},
            {"exact_zero", worst == 0}}},
          {"identities", identities}};
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int cases, bool mutate,
               const std::string& out_path) {
  const auto& names = schouten::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::cerr << "unknown suite: " << suite << "\nknown suites:";
    for (const auto& n : names) std::cerr << " " << n;
    std::cerr << "\n";
    return kExitBadInput;
  }
  if (cases < 1) {
    std::cerr << "cases must be >= 1\n";
    return kExitBadInput;
  }
  schouten::VerifyReport report;
  try {
    report = schouten::run_suite(suite, seed, cases, mutate);
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kExitInternal;
  }
  write_output(report_to_json(report).dump(2) + "\n", out_path);
  return report.pass() ? kExitPass : kExitFail;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int cmd_flow(const std::string& config_path, const std::string& out_path) {
  json j;
  schouten::EPConfig cfg;
  schouten::SymCovField<double> initial(1);
  try {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config: " + config_path);
    in >> j;
    cfg = schouten::config_from_json(j);
    cfg.validate();
    initial = schouten::cov_field_from_json<double>(j.at("initial"));
    schouten::detail::require(initial.dim() == cfg.dim, "initial data dimension mismatch");
    schouten::detail::require(initial.max_order() <= cfg.max_order,
                              "initial data above truncation order");
  } catch (const std::exception& e) {
    std::cerr << "malformed config: " << e.what() << "\n";
    return kExitBadInput;
  }

  schouten::FlowResult result;
  try {
    result = schouten::integrate(cfg, initial);
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kExitInternal;
  }

  std::ostringstream csv;
  csv << "t,energy";
  for (int k = 0; k <= cfg.max_order; ++k) csv << ",l2_grade" << k;
  csv << ",max_coeff\n";
  for (const auto& row : result.rows) {
    csv << format_double(row.t) << "," << format_double(row.energy);
    for (double v : row.grade_l2) csv << "," << format_double(v);
    csv << "," << format_double(row.max_coeff) << "\n";
  }
  write_output(csv.str(), out_path);

  if (result.blew_up) {
    std::cerr << "blow-up detected; last valid t = " << format_double(result.last_valid_t)
              << "\n";
    return kExitBlowUp;
  }
  return kExitPass;
}

int cmd_derive(const std::string& what, const std::string& input_path) {
  using R = schouten::Rational;
  json j;
  try {
    std::ifstream in(input_path);
    if (!in) throw std::runtime_error("cannot open input: " + input_path);
    in >> j;
    if (what == "actions") {
      auto higher = schouten::tensor_field_from_json<R>(j.at("higher"));
      auto fluid = schouten::tensor_field_from_json<R>(j.at("fluid"));
      json out = {{"left", schouten::to_json(schouten::act_on_fluid(higher, fluid))},
                  {"right", schouten::to_json(schouten::act_on_higher(higher, fluid))}};
      std::cout << out.dump(2) << "\n";
      return kExitPass;
    }
    if (what == "moments") {
      auto Pi = schouten::gauss_form_from_json<R>(j.at("one_form"));
      int max_order = j.value("max_order", 2);
      schouten::detail::require(max_order >= 0, "max_order must be >= 0");
      json out = {{"moments", schouten::to_json(schouten::covariant_moments(Pi, max_order))}};
      std::cout << out.dump(2) << "\n";
      return kExitPass;
    }
    std::cerr << "unknown derive subcommand: " << what << "\n";
    return kExitBadInput;
  } catch (const json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matched-pair tensor calculus and Euler-Poincare flows"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run an identity verification suite");
  std::string suite;
  std::uint64_t seed = 1;
  int cases = 20;
  bool mutate = false;
  std::string verify_out;
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--cases", cases, "number of random cases");
  verify->add_flag("--mutate", mutate, "inject a deliberate corruption (control run)");
  verify->add_option("--out", verify_out, "write the JSON report here instead of stdout");

  auto* flow = app.add_subcommand("flow", "integrate a truncated EP scenario");
  std::string config_path;
  std::string flow_out;
  flow->add_option("config", config_path, "scenario config JSON")->required();
  flow->add_option("--out", flow_out, "write the CSV trajectory here instead of stdout");

  auto* derive = app.add_subcommand("derive", "compute actions or moments from serialized input");
  std::string derive_what;
  std::string derive_input;
  derive->add_option("subcommand", derive_what, "actions or moments")->required();
  derive->add_option("input", derive_input, "input JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitBadInput;
  }

  try {
    if (verify->parsed()) return cmd_verify(suite, seed, cases, mutate, verify_out);
    if (flow->parsed()) return cmd_flow(config_path, flow_out);
    if (derive->parsed()) return cmd_derive(derive_what, derive_input);
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitBadInput;
}

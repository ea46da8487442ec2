#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "symsing/cli/run.hpp"
#include "symsing/quiver/quiver.hpp"
#include "symsing/slodowy/slodowy.hpp"
#include "symsing/varieties/presentation.hpp"

using namespace symsing;
using namespace symsing::cli;

namespace {

constexpr int usage_error = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of dihedral symplectic singularity identities"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(tool_name) + " " + tool_version);

  std::string d_text, config_path, out_path;
  int N = 0, trials = 0, psi_order = 0;
  std::uint64_t seed = 0;
  std::size_t max_terms = 0, max_basis = 0;
  double max_seconds = 0;
  auto* opt_d = app.add_option("--d", d_text, "degree or range a..b (d >= 4)");
  auto* opt_N = app.add_option("--N", N, "Hilbert degree bound (each d uses max(N, 2d))");
  auto* opt_seed = app.add_option("--seed", seed, "random seed");
  auto* opt_trials = app.add_option("--trials", trials, "random GL2 matrices per d");
  auto* opt_psi = app.add_option("--psi-order", psi_order, "order of the psi checks");
  auto* opt_terms = app.add_option("--max-terms", max_terms, "Groebner term budget");
  auto* opt_basis = app.add_option("--max-basis", max_basis, "Groebner basis-size budget");
  auto* opt_secs = app.add_option("--max-seconds", max_seconds, "Groebner time budget per check");
  app.add_option("--config", config_path, "config file (key=value lines or a JSON object)");
  app.add_option("--out", out_path, "output path (default: stdout; SYMSING_OUT also sets it)");

  auto* gen = app.add_subcommand("gen", "emit presentations of Q(d), Z(d), Y(d)");
  std::vector<std::string> kinds;
  gen->add_option("--kind", kinds, "Q, Z or Y (repeatable; default all)");

  auto* verify = app.add_subcommand("verify", "run check suites");
  std::vector<std::string> suites;
  verify->add_option("--suite", suites, "suite name (repeatable; default all)")
      ->check(CLI::IsMember(suite_names()));

  auto* hilbert_cmd = app.add_subcommand("hilbert", "graded dimensions and the fiber algebra");
  auto* quiver_cmd = app.add_subcommand("quiver", "root sets, sigma, leaves and local quiver data");
  auto* slodowy_cmd = app.add_subcommand("slodowy", "Slodowy slice equations and geometry");
  auto* all_cmd = app.add_subcommand("all", "every suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : usage_error;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) apply_config_text(cfg, read_file(config_path));
    if (opt_d->count()) cfg.heavy = cfg.identity = parse_range(d_text);
    if (opt_N->count()) cfg.N = N;
    if (opt_seed->count()) cfg.seed = seed;
    if (opt_trials->count()) cfg.trials = trials;
    if (opt_psi->count()) cfg.psi_order = psi_order;
    if (opt_terms->count()) cfg.max_terms = max_terms;
    if (opt_basis->count()) cfg.max_basis = max_basis;
    if (opt_secs->count()) cfg.max_seconds = max_seconds;
    cfg.validate();
    for (const auto& k : kinds) varieties::parse_kind(k);
  } catch (const std::exception& e) {
    std::cerr << tool_name << ": " << e.what() << "\n";
    return usage_error;
  }

  std::string target = out_path;
  if (target.empty())
    if (const char* env = std::getenv("SYMSING_OUT")) target = env;
  if (target.empty()) target = cfg.out;

  Json report;
  bool failed = false;
  std::size_t skipped_count = 0;
  try {
    auto finish = [&](const std::string& command, const VerificationReport& rep, const Json& data) {
      report = make_report(command, cfg, rep, data);
      failed = rep.any_failed();
      skipped_count = rep.count(Status::skipped_budget);
    };
    if (gen->parsed()) {
      if (kinds.empty()) kinds = {"Q", "Z", "Y"};
      Json list = Json::array();
      for (int d = cfg.identity.lo; d <= cfg.identity.hi; ++d)
        for (const auto& k : kinds) list.push_back(varieties::presentation(varieties::parse_kind(k), d).to_json());
      report = {{"tool", tool_name},
                {"version", tool_version},
                {"schema_version", report_schema_version},
                {"command", "gen"},
                {"config", cfg.to_json()},
                {"presentations", list}};
    } else if (verify->parsed()) {
      if (suites.empty()) suites = suite_names();
      VerificationReport rep;
      std::string command = "verify";
      for (const auto& s : suites) {
        rep.add(run_suite(s, cfg));
        command += " " + s;
      }
      finish(command, rep, nullptr);
    } else if (hilbert_cmd->parsed()) {
      finish("hilbert", run_suite("hilbert", cfg), nullptr);
    } else if (quiver_cmd->parsed()) {
      Json data = Json::array();
      for (int d = cfg.heavy.lo; d <= cfg.heavy.hi; ++d) data.push_back(quiver::quiver_export(d));
      finish("quiver", run_suite("quiver", cfg), data);
    } else if (slodowy_cmd->parsed()) {
      Json data = Json::array();
      for (int d = cfg.heavy.lo; d <= cfg.heavy.hi; ++d) data.push_back(slodowy::slice_equations(d).to_json());
      finish("slodowy", run_suite("slodowy", cfg), data);
    } else if (all_cmd->parsed()) {
      VerificationReport rep;
      for (const auto& s : suite_names()) rep.add(run_suite(s, cfg));
      finish("all", rep, nullptr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << tool_name << ": " << e.what() << "\n";
    return usage_error;
  }

  const std::string text = report.dump(2) + "\n";
  if (target.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(target, std::ios::binary);
    if (!out) {
      std::cerr << tool_name << ": cannot write '" << target << "'\n";
      return usage_error;
    }
    out << text;
  }
  if (report.contains("summary")) {
    const auto& s = report["summary"];
    std::cerr << "pass " << s["pass"] << ", fail " << s["fail"] << ", skipped-budget " << s["skipped-budget"] << "\n";
    if (skipped_count) std::cerr << "warning: " << skipped_count << " check(s) skipped for budget\n";
  }
  return failed ? 1 : 0;
}

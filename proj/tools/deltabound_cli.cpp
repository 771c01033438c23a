#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "deltabound/commands.hpp"
#include "deltabound/errors.hpp"

using namespace deltabound;

int main(int argc, char** argv) {
  CLI::App app{"Effective upper bounds for Faltings's delta function"};
  app.require_subcommand(1);

  std::string path;
  std::string mode_text;
  bool rounded = false;
  auto* bound = app.add_subcommand("bound", "Evaluate the bound for a scenario file and print a JSON report");
  bound->add_option("file", path, "Scenario JSON")->required();
  bound->add_option("--mode", mode_text, "paper or tight (overrides the scenario)");
  bound->add_flag("--rounded", rounded, "Use the rounded statement constants");

  std::string suite;
  bool quiet = false;
  auto* verify = app.add_subcommand("verify", "Run the inequality verification suites");
  verify->add_option("--suite", suite, "Run only this suite");
  verify->add_flag("--quiet", quiet, "Print suite summaries only");

  std::string sweep_path;
  std::string param;
  std::string values;
  std::string sweep_mode;
  bool sweep_rounded = false;
  auto* sweep = app.add_subcommand("sweep", "Evaluate the bound over one varying parameter (CSV)");
  sweep->add_option("file", sweep_path, "Scenario JSON")->required();
  sweep->add_option("--param", param, "base.systole, base.lambda1, cover.genus, cover.lambda1, r0 or R0")->required();
  sweep->add_option("--values", values, "Comma-separated values")->required();
  sweep->add_option("--mode", sweep_mode, "paper or tight");
  sweep->add_flag("--rounded", sweep_rounded, "Use the rounded statement constants");

  double t = 0.0;
  std::string rhos;
  auto* kernel = app.add_subcommand("kernel", "Tabulate heat kernels and their closed-form majorant (CSV)");
  kernel->add_option("--t", t, "Heat time")->required();
  kernel->add_option("--rho", rhos, "Comma-separated distances")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto resolve_mode = [](const std::string& text) -> std::optional<Mode> {
    if (text.empty()) return std::nullopt;
    return parse_mode(text);
  };
  try {
    if (*bound) return cmd_bound(path, resolve_mode(mode_text), rounded, std::cout, std::cerr);
    if (*verify) return cmd_verify(suite.empty() ? std::nullopt : std::optional<std::string>(suite), quiet, std::cout, std::cerr);
    if (*sweep) return cmd_sweep(sweep_path, param, values, resolve_mode(sweep_mode), sweep_rounded, std::cout, std::cerr);
    if (*kernel) return cmd_kernel(t, rhos, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

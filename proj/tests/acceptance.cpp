#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deltabound/verify.hpp"

using namespace deltabound;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

struct Paths {
  std::string cli;
  std::string golden;
};

// Runs the named suites and optionally enforces a wall-clock budget.
Verdict suites(const std::vector<std::string>& names, double budget_s = 0.0) {
  const auto start = std::chrono::steady_clock::now();
  int checks = 0, failures = 0, inconclusive = 0;
  std::string first;
  for (const auto& n : names) {
    const auto s = run_suite(n);
    checks += s.checks_run;
    failures += s.failures;
    inconclusive += s.inconclusive;
    if (first.empty())
      for (const auto& c : s.checks)
        if (c.status != CheckStatus::pass) {
          first = n + ": " + c.label;
          break;
        }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << checks << " checks, " << failures << " failures, " << inconclusive << " inconclusive, " << secs << " s";
  if (!first.empty()) d << "; first: " << first;
  bool ok = failures == 0 && inconclusive == 0;
  if (budget_s > 0.0 && secs > budget_s) {
    ok = false;
    d << "; over the " << budget_s << " s budget";
  }
  return {ok, d.str()};
}

struct Captured {
  int code;
  std::string out;
};

Captured capture(const std::string& cmd) {
  Captured c{-1, ""};
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return c;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) c.out.append(buf, n);
  const int status = pclose(p);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict golden(const Paths& p) {
  if (p.cli.empty() || p.golden.empty()) return {false, "--cli and --golden are required"};
  std::ostringstream d;
  bool ok = true;
  for (const char* name : {"trivial", "unramified", "ramified"}) {
    const std::string scenario = p.golden + "/" + name + ".json";
    const auto a = capture("'" + p.cli + "' bound '" + scenario + "'");
    const auto b = capture("'" + p.cli + "' bound '" + scenario + "'");
    const std::string expected = read_file(p.golden + "/" + name + ".expected.json");
    const bool same = a.code == 0 && b.code == 0 && a.out == b.out && !a.out.empty();
    const bool matches = a.out == expected;
    ok = ok && same && matches;
    d << name << (same ? " stable" : " UNSTABLE") << (matches ? "/matches; " : "/DIFFERS; ");
  }
  for (auto [name, want] : {std::pair{"malformed", 2}, std::pair{"genus1", 3}}) {
    const auto r = capture("'" + p.cli + "' bound '" + p.golden + "/" + name + ".json'");
    ok = ok && r.code == want;
    d << name << " exit " << r.code << " (want " << want << "); ";
  }
  return {ok, d.str()};
}

const std::vector<std::pair<std::string, std::function<Verdict(const Paths&)>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Verdict(const Paths&)>>> c = {
      {"exact constants", [](const Paths&) { return suites({"constants"}, 1.0); }},
      {"weight-1 kernel dominance", [](const Paths&) { return suites({"kernel_dominance"}, 30.0); }},
      {"kernel monotonicity and sign lemma", [](const Paths&) { return suites({"kernel_monotonicity", "appendix_sign"}); }},
      {"sup-norm chain", [](const Paths&) { return suites({"supnorm_chain"}); }},
      {"Huber link audit and C22 margin", [](const Paths&) { return suites({"huber_links", "c22"}); }},
      {"per-geodesic zeta bounds", [](const Paths&) { return suites({"selberg"}); }},
      {"end-to-end chaining", [](const Paths&) { return suites({"end_to_end"}); }},
      {"Belyi floor", [](const Paths&) { return suites({"remark_floor"}); }},
      {"CLI golden scenarios", golden},
  };
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  Paths paths;
  app.add_option("--criterion", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
  app.add_option("--cli", paths.cli, "Path to the command-line binary");
  app.add_option("--golden", paths.golden, "Directory holding the golden scenarios");
  CLI11_PARSE(app, argc, argv);

  const auto& list = criteria();
  int failed = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (only && n != only) continue;
    Verdict v{false, ""};
    try {
      v = list[i].second(paths);
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << list[i].first << "): " << v.detail << "\n";
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

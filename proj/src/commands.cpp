#include "deltabound/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include "deltabound/errors.hpp"
#include "deltabound/heat_kernel.hpp"
#include "deltabound/scenario_io.hpp"
#include "deltabound/verify.hpp"

namespace deltabound {

namespace {

std::string num(double x, const char* pattern = "%.12g") {
  char buf[48];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

double parse_real(const std::string& token) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + token + "'");
  }
  if (used != token.size()) throw UsageError("not a number: '" + token + "'");
  return v;
}

int parse_integer(const std::string& token) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + token + "'");
  }
  if (used != token.size()) throw UsageError("not an integer: '" + token + "'");
  return v;
}

// Runs `body` and maps library exceptions onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    err << "quadrature did not converge: " << e.what() << "\n";
    return kExitDomain;
  }
}

void apply_param(ScenarioFile& f, const std::string& param, const std::string& token) {
  auto& sc = f.scenario;
  const bool trivial = std::holds_alternative<TrivialCover>(sc.kind);
  auto on_cover = [&](auto setter) {
    setter(sc.cover);
    if (trivial) setter(sc.base);
  };
  auto on_base = [&](auto setter) {
    setter(sc.base);
    if (trivial) setter(sc.cover);
  };
  if (param == "base.systole") {
    // A covering surface's systole is never below the base systole.
    const double v = parse_real(token);
    on_base([&](SurfaceInvariants& s) { s.systole = v; });
    if (std::holds_alternative<UnramifiedCover>(sc.kind)) sc.cover.systole = std::max(sc.cover.systole, v);
  } else if (param == "base.lambda1") {
    const double v = parse_real(token);
    on_base([&](SurfaceInvariants& s) { s.lambda1 = v; });
  } else if (param == "cover.genus") {
    const int v = parse_integer(token);
    on_cover([&](SurfaceInvariants& s) { s.genus = v; });
  } else if (param == "cover.lambda1") {
    const double v = parse_real(token);
    on_cover([&](SurfaceInvariants& s) { s.lambda1 = v; });
  } else if (param == "r0" || param == "R0") {
    auto* ram = std::get_if<RamifiedCover>(&sc.kind);
    if (!ram) throw UsageError("sweep parameter '" + param + "' needs a ramified scenario");
    (param == "r0" ? ram->r0 : ram->big_r0) = parse_real(token);
  } else {
    throw UsageError("unknown sweep parameter '" + param + "'");
  }
}

const char* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

}  // namespace

const std::vector<std::string>& sweep_params() {
  static const std::vector<std::string> p = {"base.systole", "base.lambda1", "cover.genus", "cover.lambda1", "r0", "R0"};
  return p;
}

int cmd_bound(const std::string& path, std::optional<Mode> mode, bool rounded, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScenarioFile f = load_scenario(path);
    const EvalOptions opts = options_for(f, mode, rounded);
    nlohmann::ordered_json doc;
    doc["schema_version"] = kScenarioSchemaVersion;
    doc["report"] = to_json(evaluate_scenario(f, opts));
    if (f.parshin) doc["parshin"] = to_json(parshin_bound(*f.parshin, opts));
    out << doc.dump(2) << "\n";
    return kExitOk;
  });
}

int cmd_verify(const std::optional<std::string>& suite, bool quiet, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const VerificationReport rep = run_verification(suite);
    for (const auto& s : rep.suites) {
      out << "suite " << s.name << ": checks=" << s.checks_run << " failures=" << s.failures
          << " inconclusive=" << s.inconclusive << " worst_margin=" << num(s.worst_margin, "%.6g") << "\n";
      if (quiet) continue;
      for (const auto& c : s.checks)
        out << "  " << status_word(c.status) << " " << c.label << " margin=" << num(c.margin, "%.6g") << "\n";
    }
    out << "total failures: " << rep.total_failures() << "\n";
    return rep.exit_code_hint == 0 ? kExitOk : kExitFailures;
  });
}

int cmd_sweep(const std::string& path, const std::string& param, const std::string& values, std::optional<Mode> mode,
              bool rounded, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto& allowed = sweep_params();
    if (std::find(allowed.begin(), allowed.end(), param) == allowed.end())
      throw UsageError("unknown sweep parameter '" + param + "'");
    const ScenarioFile base = load_scenario(path);
    const auto tokens = split_list(values);
    std::ostringstream rows;
    rows << "param,value,log10_bound,decimal\n";
    for (const auto& token : tokens) {
      ScenarioFile f = base;
      apply_param(f, param, token);
      f.scenario.validate();
      const BoundReport r = evaluate_scenario(f, options_for(f, mode, rounded));
      rows << param << "," << token << "," << num(r.final.log10()) << "," << r.decimal << "\n";
    }
    out << rows.str();
    return kExitOk;
  });
}

int cmd_kernel(double t, const std::string& rho_list, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(t > 0.0)) throw DomainError("heat time t must be > 0");
    std::vector<double> rhos;
    for (const auto& token : split_list(rho_list)) {
      const double rho = parse_real(token);
      if (!(rho >= 0.0)) throw DomainError("rho values must be >= 0");
      rhos.push_back(rho);
    }
    std::ostringstream rows;
    rows << "rho,k0,k0_err,k1,k1_err,a1,a2,a3,upper_sum,dominance\n";
    const char* e = "%.12e";
    for (double rho : rhos) {
      const auto a = k0({t, rho});
      const auto b = k1({t, rho});
      rows << num(rho) << "," << num(a.value, e) << "," << num(a.error_estimate, e) << "," << num(b.value, e) << ","
           << num(b.error_estimate, e) << ",";
      if (rho > 0.0) {
        const auto u = k1_upper_terms({t, rho});
        rows << num(u.a1, e) << "," << num(u.a2, e) << "," << num(u.a3, e) << "," << num(u.sum(), e) << ","
             << (b.value <= u.sum() ? "true" : "false") << "\n";
      } else {
        rows << ",,,,\n";
      }
    }
    out << rows.str();
    return kExitOk;
  });
}

}  // namespace deltabound

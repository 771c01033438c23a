#pragma once

#include <optional>
#include <utility>
#include <string>
#include <vector>

namespace deltabound {

enum class CheckStatus { pass, fail, inconclusive };

struct CheckOutcome {
  std::string label;
  CheckStatus status = CheckStatus::pass;
  /// Normalised slack of the inequality; negative means violated.
  double margin = 0.0;
};

struct SuiteSummary {
  SuiteSummary() = default;
  explicit SuiteSummary(std::string n) : name(std::move(n)) {}

  std::string name;
  int checks_run = 0;
  int failures = 0;
  int inconclusive = 0;
  double worst_margin = 0.0;
  std::vector<CheckOutcome> checks;

  void record(std::string label, CheckStatus status, double margin);
  /// pass when `ok`, fail otherwise.
  void expect(std::string label, bool ok, double margin);
};

struct VerificationReport {
  std::vector<SuiteSummary> suites;
  int exit_code_hint = 0;
  int total_failures() const;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite; throws UsageError for an unknown name.
SuiteSummary run_suite(const std::string& name);

/// Runs every suite, or only `filter` when given.
VerificationReport run_verification(const std::optional<std::string>& filter = std::nullopt);

}  // namespace deltabound

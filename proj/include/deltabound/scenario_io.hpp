#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "deltabound/delta_bounds.hpp"
#include "deltabound/invariants.hpp"
#include "deltabound/numerics.hpp"
#include "deltabound/selberg.hpp"

namespace deltabound {

inline constexpr int kScenarioSchemaVersion = 1;

/// Parsed scenario document (schema version 1).
struct ScenarioFile {
  int schema_version = kScenarioSchemaVersion;
  CoveringScenario scenario;
  Mode mode = Mode::paper_faithful;
  std::optional<QuadratureSpec> quadrature;
  std::optional<GeodesicLengthSpectrum> spectrum;
  std::optional<ParshinInputs> parshin;
};

/// Structural problems (bad JSON, wrong types, unknown keys) raise UsageError
/// naming the offending field; mathematical precondition failures raise DomainError.
ScenarioFile parse_scenario(const std::string& text);
ScenarioFile load_scenario(const std::string& path);

nlohmann::ordered_json to_json(const ScenarioFile& file);
nlohmann::ordered_json to_json(const CoveringScenario& scenario);
nlohmann::ordered_json to_json(const BoundReport& report);

/// Evaluates the bound matching the scenario kind: trivial -> single surface,
/// unramified -> covering bound, ramified -> ramified covering bound.
BoundReport evaluate_scenario(const ScenarioFile& file, const EvalOptions& opts);
EvalOptions options_for(const ScenarioFile& file, std::optional<Mode> mode_override, bool rounded);

}  // namespace deltabound

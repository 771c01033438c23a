#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "deltabound/invariants.hpp"

namespace deltabound {

/// Process exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Parameters a sweep may vary.
const std::vector<std::string>& sweep_params();

int cmd_bound(const std::string& path, std::optional<Mode> mode, bool rounded, std::ostream& out,
              std::ostream& err);
int cmd_verify(const std::optional<std::string>& suite, bool quiet, std::ostream& out, std::ostream& err);
int cmd_sweep(const std::string& path, const std::string& param, const std::string& values,
              std::optional<Mode> mode, bool rounded, std::ostream& out, std::ostream& err);
int cmd_kernel(double t, const std::string& rho_list, std::ostream& out, std::ostream& err);

}  // namespace deltabound

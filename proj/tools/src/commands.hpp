#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fgv/oracle.hpp"
#include "problem_spec.hpp"

namespace fgv::cli {

enum ExitCode : int {
  kSuccess = 0,
  kObstruction = 1,
  kInvalidInput = 2,
  kInternalError = 3,
};

struct CommandResult {
  nlohmann::json report;
  int exit_code = kSuccess;
  std::vector<DisplacementSample> samples;  ///< oracle only
  std::string summary;                      ///< human-readable, verify-all only
};

CommandResult cmd_melnikov(const ProblemSpec& spec, std::optional<unsigned> max_order = {});

/// Exit code kObstruction when some M_mu, mu <= k + 1, is nonzero.
CommandResult cmd_gv(const ProblemSpec& spec, unsigned k);

struct OracleOptions {
  std::optional<std::vector<double>> t;
  std::optional<std::vector<double>> eps;
  HolonomyConfig config;
};

CommandResult cmd_oracle(const ProblemSpec& spec, const OracleOptions& opts = {});

/// Runs every *.json under dir through the commands that apply and checks
/// its "expect" block.
CommandResult cmd_verify_all(const std::string& dir);

/// Runs fn, mapping exceptions onto exit codes and an "error" report.
CommandResult guarded(const std::function<CommandResult()>& fn);

}  // namespace fgv::cli

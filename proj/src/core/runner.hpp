#pragma once

#include "core/scenarios.hpp"

namespace zentner {

// One verification run: a scenario, a grid, tolerance overrides, a check
// subset and a seed for the gauge sampling. Empty means scenario defaults.
struct RunConfig {
  std::string scenario;
  std::vector<int> grid_counts;
  std::optional<Vec> grid_lo, grid_hi;
  std::map<std::string, double> tolerances;
  std::vector<std::string> checks;
  std::uint64_t seed = 0;
  nlohmann::json scenario_params;

  static RunConfig from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  bool error = false;  // evaluation failed; message holds the reason
  double max_residual = 0.0;
  double tol = 0.0;
  std::string message;
};

struct VerificationReport {
  std::string scenario;
  nlohmann::json grid_echo;
  nlohmann::json tolerances;
  std::uint64_t seed = 0;
  std::vector<ResidualPoint> per_point;  // filled when eq checks ran
  double max_r1 = 0.0, max_r2 = 0.0;
  bool has_residuals = false;
  std::vector<CheckResult> checks;
  bool all_pass = false;

  nlohmann::json to_json() const;
  // One line per check: "CHECK <name>: PASS|FAIL max_residual=... tol=..."
  std::string to_text() const;
};

// All known check names in canonical report order.
const std::vector<std::string>& known_checks();

VerificationReport run_checks(const RunConfig& config);
VerificationReport run_checks(const LocalTriple& triple,
                              const RunConfig& config);

}  // namespace zentner

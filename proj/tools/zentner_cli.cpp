// Command-line driver for the zentner shared library. Talks to the core
// exclusively through the C API in zentner.h.
//
//   zentner-cli list
//   zentner-cli run --scenario hyperbolic-halfspace [--grid 5,5,5]
//                   [--bounds -1:1,-1:1,0.5:2] [--checks eq1,eq2]
//                   [--tol eq1=1e-6,eq2=1e-6] [--seed 7]
//                   [--out report.json] [--format json|text]
//
// Exit status: 0 all selected checks pass, 1 a check failed or errored,
// 2 configuration error (unknown scenario, bad flags).

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zentner.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// "5,5,5" or "5:-1:1,5:-1:1,5:0.5:2" (count[:lo:hi] per axis)
bool parse_grid(const std::string& text, std::string& counts_json,
                std::string& lo_json, std::string& hi_json) {
  std::string counts, lo, hi;
  bool has_bounds = false;
  for (const auto& axis : split(text, ',')) {
    auto parts = split(axis, ':');
    if (parts.size() != 1 && parts.size() != 3) return false;
    try {
      (void)std::stoi(parts[0]);
    } catch (...) {
      return false;
    }
    counts += (counts.empty() ? "" : ",") + parts[0];
    if (parts.size() == 3) {
      has_bounds = true;
      lo += (lo.empty() ? "" : ",") + parts[1];
      hi += (hi.empty() ? "" : ",") + parts[2];
    } else if (has_bounds) {
      return false;  // mixed forms
    }
  }
  counts_json = "[" + counts + "]";
  if (has_bounds) {
    lo_json = "[" + lo + "]";
    hi_json = "[" + hi + "]";
  }
  return true;
}

// "eq1=1e-6,eq2=1e-6" or a single number applied to every selected check
bool parse_tols(const std::string& text, const std::vector<std::string>& checks,
                std::string& tol_json) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  if (text.find('=') == std::string::npos) {
    char* end = nullptr;
    std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') return false;
    for (const auto& c : checks) {
      os << (first ? "" : ",") << "\"" << c << "\":" << text;
      first = false;
    }
  } else {
    for (const auto& item : split(text, ',')) {
      auto kv = split(item, '=');
      if (kv.size() != 2 || kv[0].empty() || kv[1].empty()) return false;
      os << (first ? "" : ",") << "\"" << kv[0] << "\":" << kv[1];
      first = false;
    }
  }
  os << "}";
  tol_json = os.str();
  return true;
}

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

bool write_atomically(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) return false;
    os << content;
    if (!os.flush()) return false;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    return false;
  }
  return true;
}

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { zt_string_free(value); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Chart-level integrability checks for principal-bundle pairs "
      "(alpha, A): residuals of the integrability system, Nijenhuis tensor, "
      "induced connection, gauge naturality and the metric moduli map."};
  app.require_subcommand(1);

  auto* list_cmd =
      app.add_subcommand("list", "List built-in scenarios (alphabetical)");

  auto* run_cmd = app.add_subcommand("run", "Run verification checks");
  std::string scenario, grid_text, bounds_text, checks_text, tol_text;
  std::string out_path, format = "text", params_json;
  std::uint64_t seed = 0;
  run_cmd->add_option("--scenario", scenario, "Scenario name (see `list`)")
      ->required();
  run_cmd->add_option("--grid", grid_text,
                      "Per-axis counts: \"5,5,5\", or count:lo:hi per axis: "
                      "\"5:-1:1,5:-1:1,5:0.5:2\"");
  run_cmd->add_option("--checks", checks_text,
                      "Comma-separated subset of: eq1,eq2,nijenhuis,torsion,"
                      "curvature_match,gauge_equivariance,psi,nomizu");
  run_cmd->add_option("--tol", tol_text,
                      "Overrides: \"eq1=1e-6,eq2=1e-6\" or one value for all "
                      "selected checks");
  run_cmd->add_option("--seed", seed, "Seed for the gauge sampling");
  run_cmd->add_option("--out", out_path, "Write the report to this path "
                      "(atomic rename)");
  run_cmd->add_option("--format", format, "Report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  run_cmd->add_option("--params", params_json,
                      "Scenario parameters as JSON (see `list` schemas)");

  CLI11_PARSE(app, argc, argv);

  if (list_cmd->parsed()) {
    OwnedString listing;
    if (zt_scenario_list(&listing.value) != ZT_OK)
      return fail_usage(zt_last_error());
    std::cout << listing.value << "\n";
    return 0;
  }

  // assemble the config document
  std::vector<std::string> checks = split(checks_text, ',');
  checks.erase(std::remove(checks.begin(), checks.end(), std::string()),
               checks.end());

  std::ostringstream cfg;
  cfg << "{";
  bool first = true;
  auto emit = [&](const std::string& key, const std::string& raw) {
    cfg << (first ? "" : ",") << "\"" << key << "\":" << raw;
    first = false;
  };
  if (!grid_text.empty()) {
    std::string counts, lo, hi;
    if (!parse_grid(grid_text, counts, lo, hi))
      return fail_usage("could not parse --grid \"" + grid_text + "\"");
    std::string grid = "{\"counts\":" + counts;
    if (!lo.empty()) grid += ",\"lo\":" + lo + ",\"hi\":" + hi;
    grid += "}";
    emit("grid", grid);
  }
  if (!checks.empty()) {
    std::string arr;
    for (const auto& c : checks)
      arr += (arr.empty() ? "" : ",") + ("\"" + c + "\"");
    emit("checks", "[" + arr + "]");
  }
  if (!tol_text.empty()) {
    std::string tols;
    if (!parse_tols(tol_text, checks, tols))
      return fail_usage("could not parse --tol \"" + tol_text + "\"");
    if (checks.empty() && tol_text.find('=') == std::string::npos)
      return fail_usage("a bare --tol value needs --checks to apply to");
    emit("tol", tols);
  }
  emit("seed", std::to_string(seed));
  cfg << "}";

  zt_triple* triple = nullptr;
  zt_status st = zt_triple_create(
      scenario.c_str(), params_json.empty() ? nullptr : params_json.c_str(),
      &triple);
  if (st != ZT_OK) {
    std::cerr << "error: " << zt_last_error() << "\n";
    return kExitUsage;
  }

  zt_report* report = nullptr;
  st = zt_run(triple, cfg.str().c_str(), &report);
  if (st != ZT_OK) {
    std::cerr << "error: " << zt_last_error() << "\n";
    zt_triple_destroy(triple);
    return st == ZT_ERR_UNKNOWN_SCENARIO || st == ZT_ERR_INVALID_ARGUMENT ||
                   st == ZT_ERR_JSON
               ? kExitUsage
               : kExitFail;
  }

  OwnedString rendered;
  st = format == "json" ? zt_report_json(report, &rendered.value)
                        : zt_report_text(report, &rendered.value);
  if (st != ZT_OK) {
    std::cerr << "error: " << zt_last_error() << "\n";
    zt_report_destroy(report);
    zt_triple_destroy(triple);
    return kExitFail;
  }

  if (!out_path.empty()) {
    if (!write_atomically(out_path, rendered.value)) {
      std::cerr << "error: could not write report to " << out_path << "\n";
      zt_report_destroy(report);
      zt_triple_destroy(triple);
      return kExitFail;
    }
  } else {
    std::cout << rendered.value;
  }

  int passed = zt_report_passed(report);
  zt_report_destroy(report);
  zt_triple_destroy(triple);
  return passed ? 0 : kExitFail;
}

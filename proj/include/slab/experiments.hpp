// Scenario runner and sweep machinery: every theorem-level claim is exercised
// at desk scale through one of the scenario kinds, with fitted constants
// reported alongside their regression diagnostics.
#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "slab/scenario.hpp"
#include "slab/stats.hpp"

namespace slab {

struct RunOptions {
  std::filesystem::path out_dir;  // empty = no artifacts on disk
  bool emit_plot_data = false;
  int threads = 0;  // 0 = library default
};

struct Measurement {
  std::string name;
  double value = 0.0;
};

struct ReportFragment {
  std::string scenario_id;
  ScenarioKind kind = ScenarioKind::transform_identity;
  bool pass = false;
  std::vector<Measurement> measurements;
  std::vector<std::string> artifacts;
  std::string message;

  double value_of(const std::string& name) const;  // throws if absent
};

struct FittedConstant {
  std::string name;
  double value = 0.0;
  double r_squared = 0.0;
  std::string sweep_grid;  // the abscissae the fit was computed over
};

struct Report {
  std::vector<ReportFragment> fragments;
  std::vector<FittedConstant> fitted;
  bool all_pass = false;
};

ReportFragment run_scenario(const Scenario& s, const RunOptions& opts);
Report run_sweep(const Scenario& base, const std::string& axis, std::span<const double> values,
                 const RunOptions& opts);

void write_report_csv(const std::filesystem::path& path, const Report& report);

// The measurement a sweep regresses against its axis, per kind.
std::string primary_measurement(ScenarioKind kind);

}  // namespace slab

// Scenario definitions and the flat key-value file format they are read
// from. A scenario file is plain text: one `key = value` pair per line,
// `#` comments, comma-separated lists for vector-valued keys.
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "slab/evolve.hpp"

namespace slab {

enum class ScenarioKind {
  transform_identity,
  lifting_bound,
  kdv_stability,
  gardner_h1_stability,
  asymptotic_halfline,
  nsoliton_collision,
  negative_time,
  weinstein_sweep,
  intertwining,
};

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& s);

struct Scenario {
  std::string id;
  ScenarioKind kind = ScenarioKind::transform_identity;
  std::uint64_t seed = 1;

  std::vector<double> c;   // soliton speeds, increasing
  std::vector<double> x0;  // initial centers, increasing
  double separation = 0.0; // L
  double alpha = 0.0;      // perturbation size (0 = unperturbed)
  double beta = 0.05;

  std::size_t n_points = 1024;
  double length = 200.0;
  double dt = 8e-3;
  double t_end = 10.0;
  double t_start = 0.0;
  int snapshot_stride = 125;
  Integrator integrator = Integrator::exponential_rk4;

  // Localized-perturbation knobs (stability/collision kinds).
  double noise_center = 0.0;
  double noise_width = 15.0;
  double noise_xi_lo = 0.5;
  double noise_xi_hi = 3.0;

  void validate() const;
};

// Flat key-value text file with # comments.
std::map<std::string, std::string> read_key_value_file(const std::filesystem::path& path);
Scenario scenario_from_map(const std::map<std::string, std::string>& kv);
Scenario load_scenario(const std::filesystem::path& path);

struct SweepSpec {
  Scenario base;
  std::string axis;            // scenario key to vary (alpha, separation, beta, seed)
  std::vector<double> values;
};
SweepSpec load_sweep(const std::filesystem::path& path);
Scenario apply_axis(const Scenario& base, const std::string& axis, double value);

}  // namespace slab

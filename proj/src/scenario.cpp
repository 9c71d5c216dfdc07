#include "slab/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace slab {

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::transform_identity: return "transform_identity";
    case ScenarioKind::lifting_bound: return "lifting_bound";
    case ScenarioKind::kdv_stability: return "kdv_stability";
    case ScenarioKind::gardner_h1_stability: return "gardner_h1_stability";
    case ScenarioKind::asymptotic_halfline: return "asymptotic_halfline";
    case ScenarioKind::nsoliton_collision: return "nsoliton_collision";
    case ScenarioKind::negative_time: return "negative_time";
    case ScenarioKind::weinstein_sweep: return "weinstein_sweep";
    case ScenarioKind::intertwining: return "intertwining";
  }
  return "unknown";
}

ScenarioKind scenario_kind_from_string(const std::string& s) {
  for (ScenarioKind k :
       {ScenarioKind::transform_identity, ScenarioKind::lifting_bound, ScenarioKind::kdv_stability,
        ScenarioKind::gardner_h1_stability, ScenarioKind::asymptotic_halfline,
        ScenarioKind::nsoliton_collision, ScenarioKind::negative_time,
        ScenarioKind::weinstein_sweep, ScenarioKind::intertwining})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown scenario kind: " + s);
}

void Scenario::validate() const {
  if (id.empty()) throw std::invalid_argument("scenario: id required");
  if (c.empty()) throw std::invalid_argument("scenario: at least one speed required");
  for (std::size_t j = 1; j < c.size(); ++j)
    if (!(c[j] > c[j - 1])) throw std::invalid_argument("scenario: speeds must increase");
  if (!x0.empty() && x0.size() != c.size())
    throw std::invalid_argument("scenario: x0 and c sizes differ");
  for (std::size_t j = 1; j < x0.size(); ++j)
    if (!(x0[j] > x0[j - 1] + separation))
      throw std::invalid_argument("scenario: centers violate the separation");
  if (alpha < 0.0) throw std::invalid_argument("scenario: alpha must be >= 0");
  if (!(dt > 0.0)) throw std::invalid_argument("scenario: dt must be positive");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

std::string axis_tag(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", value);
  std::string tag(buf);
  for (char& ch : tag)
    if (ch == '+' || ch == '.') ch = '_';
  return tag;
}

}  // namespace

std::map<std::string, std::string> read_key_value_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("bad line in " + path.string() + ": " + line);
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

Scenario scenario_from_map(const std::map<std::string, std::string>& kv) {
  Scenario s;
  const auto get = [&](const char* key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  if (const auto* v = get("id")) s.id = *v;
  if (const auto* v = get("kind")) s.kind = scenario_kind_from_string(*v);
  if (const auto* v = get("seed")) s.seed = std::stoull(*v);
  if (const auto* v = get("c")) s.c = parse_list(*v);
  if (const auto* v = get("x0")) s.x0 = parse_list(*v);
  if (const auto* v = get("separation")) s.separation = std::stod(*v);
  if (const auto* v = get("alpha")) s.alpha = std::stod(*v);
  if (const auto* v = get("beta")) s.beta = std::stod(*v);
  if (const auto* v = get("n")) s.n_points = std::stoull(*v);
  if (const auto* v = get("length")) s.length = std::stod(*v);
  if (const auto* v = get("dt")) s.dt = std::stod(*v);
  if (const auto* v = get("t_end")) s.t_end = std::stod(*v);
  if (const auto* v = get("t_start")) s.t_start = std::stod(*v);
  if (const auto* v = get("snapshot_stride")) s.snapshot_stride = std::stoi(*v);
  if (const auto* v = get("integrator")) {
    if (*v == "etdrk4")
      s.integrator = Integrator::exponential_rk4;
    else if (*v == "ifrk4")
      s.integrator = Integrator::integrating_factor_rk4;
    else
      throw std::invalid_argument("scenario: integrator must be etdrk4 or ifrk4");
  }
  if (const auto* v = get("noise_center")) s.noise_center = std::stod(*v);
  if (const auto* v = get("noise_width")) s.noise_width = std::stod(*v);
  if (const auto* v = get("noise_xi_lo")) s.noise_xi_lo = std::stod(*v);
  if (const auto* v = get("noise_xi_hi")) s.noise_xi_hi = std::stod(*v);
  s.validate();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  return scenario_from_map(read_key_value_file(path));
}

Scenario apply_axis(const Scenario& base, const std::string& axis, double value) {
  Scenario s = base;
  if (axis == "alpha")
    s.alpha = value;
  else if (axis == "beta")
    s.beta = value;
  else if (axis == "separation") {
    // Re-center: keep the midpoint, widen the gaps to the requested L (plus
    // the same margin the base had).
    if (s.x0.size() != 2)
      throw std::invalid_argument("sweep: separation axis needs exactly two solitons");
    const double mid = 0.5 * (s.x0[0] + s.x0[1]);
    const double margin = (s.x0[1] - s.x0[0]) - s.separation;
    const double gap = value + std::max(margin, 0.0);
    s.x0 = {mid - 0.5 * gap, mid + 0.5 * gap};
    s.separation = value;
  } else if (axis == "seed")
    s.seed = static_cast<std::uint64_t>(value);
  else
    throw std::invalid_argument("sweep: unsupported axis " + axis);
  s.id = base.id + "_" + axis + "_" + axis_tag(value);
  s.validate();
  return s;
}

SweepSpec load_sweep(const std::filesystem::path& path) {
  auto kv = read_key_value_file(path);
  SweepSpec sweep;
  const auto axis_it = kv.find("axis");
  const auto values_it = kv.find("values");
  if (axis_it == kv.end() || values_it == kv.end())
    throw std::runtime_error("sweep file needs axis and values keys");
  sweep.axis = axis_it->second;
  sweep.values = parse_list(values_it->second);
  kv.erase("axis");
  kv.erase("values");
  sweep.base = scenario_from_map(kv);
  return sweep;
}

}  // namespace slab

#include "slab/modulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "slab/csv.hpp"
#include "slab/profiles.hpp"
#include "slab/spectral.hpp"

namespace slab {

namespace {

double wrap_to_box(double s, double length) {
  s = std::fmod(s + 0.5 * length, length);
  if (s < 0.0) s += length;
  return s - 0.5 * length;
}

double profile_value(const SolitonFamily& family, double c, double s) {
  return family.beta == 0.0 ? kdv_soliton_value(c, s)
                            : gardner_soliton_value(c, family.beta, s);
}

double peak_amplitude(const SolitonFamily& family, double c) {
  if (family.beta == 0.0) return 1.5 * c;
  return 3.0 * c / (1.0 + std::sqrt(1.0 - 4.5 * family.beta * c));
}

double speed_from_amplitude(const SolitonFamily& family, double amplitude) {
  if (!(amplitude > 0.0)) throw std::runtime_error("fit_solitons: non-positive peak amplitude");
  if (family.beta == 0.0) return amplitude / 1.5;
  const double c_max = 2.0 / (9.0 * family.beta) * (1.0 - 1e-12);
  if (amplitude >= peak_amplitude(family, c_max))
    throw std::runtime_error("fit_solitons: amplitude outside the admissible Gardner range");
  double lo = 0.0, hi = c_max;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (peak_amplitude(family, mid) < amplitude ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Indices within periodic distance h of center.
std::vector<std::size_t> window_indices(const Grid1D& g, double center, double h) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < g.n(); ++j)
    if (std::abs(wrap_to_box(g.x(j) - center, g.length())) <= h) idx.push_back(j);
  return idx;
}

double windowed_misfit(const WaveField& f, const SolitonFamily& family, double c, double x,
                       const std::vector<std::size_t>& idx) {
  double s = 0.0;
  for (std::size_t j : idx) {
    const double d =
        f.samples[j] - profile_value(family, c, wrap_to_box(f.grid.x(j) - x, f.grid.length()));
    s += d * d;
  }
  return std::sqrt(f.grid.dx() * s);
}

}  // namespace

std::vector<SolitonFit> fit_solitons(const WaveField& f, std::span<const FitGuess> guesses,
                                     const SolitonFamily& family) {
  const Grid1D& g = f.grid;
  std::vector<SolitonFit> fits;
  fits.reserve(guesses.size());
  for (const FitGuess& guess : guesses) {
    if (!(guess.c > 0.0)) throw std::invalid_argument("fit_solitons: guess speed must be > 0");
    const double h = 10.0 / std::sqrt(guess.c);
    const std::vector<std::size_t> idx = window_indices(g, guess.x, h);
    if (idx.size() < 5) throw std::runtime_error("fit_solitons: window too small for the grid");
    std::size_t peak = idx.front();
    for (std::size_t j : idx)
      if (f.samples[j] > f.samples[peak]) peak = j;
    // Interior check: the peak may not sit on the window edge.
    const double edge = std::abs(wrap_to_box(g.x(peak) - guess.x, g.length()));
    if (edge > h - 2.0 * g.dx())
      throw std::runtime_error("fit_solitons: peak not found in window around x = " +
                               std::to_string(guess.x));
    const std::size_t n = g.n();
    const double fm = f.samples[(peak + n - 1) % n];
    const double f0 = f.samples[peak];
    const double fp = f.samples[(peak + 1) % n];
    const double curv = fm - 2.0 * f0 + fp;
    if (!(curv < 0.0)) throw std::runtime_error("fit_solitons: degenerate peak curvature");
    const double offset = 0.5 * g.dx() * (fm - fp) / curv;
    const double amplitude = f0 - (fm - fp) * (fm - fp) / (8.0 * curv);
    const double x_box = g.x(peak) + offset;
    // Keep the caller's unwrapping: report the image closest to the guess.
    const double x_hat = guess.x + wrap_to_box(x_box - guess.x, g.length());
    SolitonFit fit;
    fit.x = x_hat;
    fit.amplitude = amplitude;
    fit.c = speed_from_amplitude(family, amplitude);
    const std::vector<std::size_t> res_idx = window_indices(g, x_hat, 10.0 / std::sqrt(fit.c));
    fit.residual = windowed_misfit(f, family, fit.c, x_hat, res_idx);
    fits.push_back(fit);
  }
  // Overlap check on the fitted windows.
  for (std::size_t a = 0; a < fits.size(); ++a)
    for (std::size_t b = a + 1; b < fits.size(); ++b) {
      const double ha = 10.0 / std::sqrt(fits[a].c), hb = 10.0 / std::sqrt(fits[b].c);
      if (std::abs(wrap_to_box(fits[a].x - fits[b].x, g.length())) < ha + hb)
        throw std::runtime_error("fit_solitons: overlapping windows");
    }
  return fits;
}

double refine_speed(const WaveField& f, const SolitonFit& fit, double frozen_c,
                    const SolitonFamily& family) {
  const std::vector<std::size_t> idx =
      window_indices(f.grid, fit.x, 10.0 / std::sqrt(std::min(fit.c, frozen_c)));
  const auto misfit = [&](double c) { return windowed_misfit(f, family, c, fit.x, idx); };
  double lo = 0.8 * std::min(fit.c, frozen_c);
  double hi = 1.25 * std::max(fit.c, frozen_c);
  if (family.beta > 0.0) hi = std::min(hi, 2.0 / (9.0 * family.beta) * (1.0 - 1e-9));
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = misfit(x1), f2 = misfit(x2);
  for (int i = 0; i < 60; ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = misfit(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = misfit(x2);
    }
  }
  double best = 0.5 * (a + b);
  double best_val = misfit(best);
  for (double cand : {fit.c, frozen_c}) {
    const double v = misfit(cand);
    if (v < best_val) {
      best_val = v;
      best = cand;
    }
  }
  return best;
}

WaveField model_field(const Grid1D& grid, std::span<const SolitonFit> fits,
                      const SolitonFamily& family) {
  std::vector<double> acc(grid.n(), 0.0);
  for (const SolitonFit& fit : fits)
    for (std::size_t j = 0; j < grid.n(); ++j)
      acc[j] += profile_value(family, fit.c, wrap_to_box(grid.x(j) - fit.x, grid.length()));
  return WaveField(grid, std::move(acc), 0.0);
}

double halfline_distance(const WaveField& f, std::span<const SolitonFit> fits,
                         const SolitonFamily& family, double t, double c1) {
  const double cutoff = 0.1 * c1 * t;
  const Grid1D& g = f.grid;
  if (cutoff < -0.5 * g.length() || cutoff > 0.5 * g.length())
    throw std::invalid_argument("halfline_distance: cutoff outside domain");
  const WaveField model = model_field(g, fits, family);
  double s = 0.0;
  for (std::size_t j = 0; j < g.n(); ++j) {
    if (g.x(j) < cutoff) continue;
    const double d = f.samples[j] - model.samples[j];
    s += d * d;
  }
  return std::sqrt(g.dx() * s);
}

TrackRecord track(const Trajectory& trajectory, std::span<const FitGuess> guesses,
                  const SolitonFamily& family) {
  if (trajectory.snapshots.empty()) throw std::invalid_argument("track: empty trajectory");
  const std::size_t n_sol = guesses.size();
  const double c1_frozen = guesses.front().c;

  TrackRecord rec;
  rec.x.resize(n_sol);
  rec.c.resize(n_sol);
  rec.x_dot.resize(n_sol);

  std::vector<FitGuess> warm(guesses.begin(), guesses.end());
  double prev_time = trajectory.snapshots.front().time;
  for (const WaveField& snap : trajectory.snapshots) {
    const double dt = snap.time - prev_time;
    for (std::size_t j = 0; j < n_sol; ++j) warm[j].x += warm[j].c * dt;
    prev_time = snap.time;
    std::vector<SolitonFit> fits;
    try {
      fits = fit_solitons(snap, warm, family);
    } catch (const std::exception& e) {
      throw std::runtime_error("track: tracking lost at t = " + std::to_string(snap.time) +
                               " (" + e.what() + ")");
    }
    for (std::size_t j = 0; j < n_sol; ++j) {
      warm[j] = {fits[j].c, fits[j].x};
      rec.x[j].push_back(fits[j].x);
      rec.c[j].push_back(fits[j].c);
    }
    rec.times.push_back(snap.time);

    std::vector<SolitonFit> frozen = fits;
    for (std::size_t j = 0; j < n_sol; ++j) frozen[j].c = guesses[j].c;
    rec.d_frozen.push_back(l2_distance(snap, model_field(snap.grid, frozen, family)));

    std::vector<SolitonFit> refined = fits;
    for (std::size_t j = 0; j < n_sol; ++j)
      refined[j].c = refine_speed(snap, fits[j], guesses[j].c, family);
    const WaveField refined_model = model_field(snap.grid, refined, family);
    rec.d_fitted.push_back(l2_distance(snap, refined_model));
    rec.h1_misfit.push_back(norm_h1(sub(snap, refined_model)));
    rec.d_halfline.push_back(halfline_distance(snap, refined, family, snap.time, c1_frozen));
  }

  // x'(t) by centered differences over the snapshot stride.
  const std::size_t m = rec.times.size();
  for (std::size_t j = 0; j < n_sol; ++j) {
    rec.x_dot[j].resize(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t klo = k == 0 ? 0 : k - 1;
      const std::size_t khi = k + 1 < m ? k + 1 : k;
      const double dt = rec.times[khi] - rec.times[klo];
      rec.x_dot[j][k] = dt > 0.0 ? (rec.x[j][khi] - rec.x[j][klo]) / dt : 0.0;
    }
  }
  return rec;
}

void write_track_csv(const std::filesystem::path& path, const TrackRecord& record) {
  const std::size_t n_sol = record.x.size();
  std::vector<std::string> header{"t"};
  for (std::size_t j = 1; j <= n_sol; ++j) header.push_back("x_" + std::to_string(j));
  for (std::size_t j = 1; j <= n_sol; ++j) header.push_back("c_" + std::to_string(j));
  header.insert(header.end(), {"d_frozen", "d_fitted", "d_halfline"});
  CsvWriter csv(path, header);
  for (std::size_t k = 0; k < record.times.size(); ++k) {
    std::vector<double> row{record.times[k]};
    for (std::size_t j = 0; j < n_sol; ++j) row.push_back(record.x[j][k]);
    for (std::size_t j = 0; j < n_sol; ++j) row.push_back(record.c[j][k]);
    row.push_back(record.d_frozen[k]);
    row.push_back(record.d_fitted[k]);
    row.push_back(record.d_halfline[k]);
    csv.row(row);
  }
}

}  // namespace slab

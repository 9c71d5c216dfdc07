// Modulation-parameter extraction: per-soliton peak fits, trajectory
// tracking, and the distances the stability statements are phrased in.
#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "slab/evolve.hpp"
#include "slab/grid.hpp"

namespace slab {

struct SolitonFamily {
  double beta = 0.0;  // 0 selects the KdV family
};

struct FitGuess {
  double c = 1.0;
  double x = 0.0;
};

struct SolitonFit {
  double c = 0.0;          // from amplitude inversion
  double x = 0.0;          // quadratic-interpolated peak location (unwrapped)
  double amplitude = 0.0;
  double residual = 0.0;   // windowed L2 misfit, half-width 10/sqrt(c)
};

// Locate one peak per guess (window half-width 10/sqrt(c_guess)), refine the
// center by quadratic interpolation, set c from the peak amplitude (KdV:
// c = (2/3)*amplitude; Gardner: bisection on 3c/(1+rho(c))). Windows must not
// overlap and the peak must be interior to its window.
std::vector<SolitonFit> fit_solitons(const WaveField& f, std::span<const FitGuess> guesses,
                                     const SolitonFamily& family);

// Windowed least-squares refinement of a fitted speed; used for the
// fitted-speed distance so it never exceeds the frozen-speed one.
double refine_speed(const WaveField& f, const SolitonFit& fit, double frozen_c,
                    const SolitonFamily& family);

// Sum of family profiles at the given (c, x) pairs.
WaveField model_field(const Grid1D& grid, std::span<const SolitonFit> fits,
                      const SolitonFamily& family);

// || f - model ||_L2 restricted to x >= (c1/10)*t.
double halfline_distance(const WaveField& f, std::span<const SolitonFit> fits,
                         const SolitonFamily& family, double t, double c1);

struct TrackRecord {
  std::vector<double> times;
  std::vector<std::vector<double>> x;      // [soliton][snapshot], unwrapped
  std::vector<std::vector<double>> c;      // amplitude-fit speeds
  std::vector<std::vector<double>> x_dot;  // centered differences of x
  std::vector<double> d_frozen;    // distance with frozen speeds c_j^0
  std::vector<double> d_fitted;    // distance with refined fitted speeds
  std::vector<double> d_halfline;  // fitted misfit on x >= (c1^0/10)*t
  std::vector<double> h1_misfit;   // H1 norm of the fitted misfit
};

// Chained fits with warm-start guesses, one entry per snapshot. Frozen speeds
// are the guesses' c values. Throws on tracking loss, reporting the time.
TrackRecord track(const Trajectory& trajectory, std::span<const FitGuess> guesses,
                  const SolitonFamily& family);

void write_track_csv(const std::filesystem::path& path, const TrackRecord& record);

}  // namespace slab

#include "slab/transform.hpp"

#include <cmath>
#include <stdexcept>

#include "slab/spectral.hpp"

namespace slab {

WaveField gardner_transform(const WaveField& v, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("gardner_transform: beta must be positive");
  const WaveField vx = derivative(v, 1);
  const WaveField v2 = product(v, v, Dealias::two_thirds);
  const double a = 1.5 * std::sqrt(2.0 * beta);
  std::vector<double> out(v.grid.n());
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = v.samples[j] - a * vx.samples[j] - 1.5 * beta * v2.samples[j];
  return WaveField(v.grid, std::move(out), v.time);
}

WaveField miura_transform(const WaveField& v) {
  const WaveField vx = derivative(v, 1);
  const WaveField v2 = product(v, v, Dealias::two_thirds);
  const double a = 3.0 / std::sqrt(2.0);
  std::vector<double> out(v.grid.n());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = a * vx.samples[j] - 1.5 * v2.samples[j];
  return WaveField(v.grid, std::move(out), v.time);
}

double composition_identity_residual(const WaveField& v, double beta) {
  if (!(beta > 0.0))
    throw std::invalid_argument("composition_identity_residual: beta must be positive");
  const WaveField lhs = gardner_transform(v, beta);
  const double sb = std::sqrt(beta);
  std::vector<double> aux(v.grid.n());
  for (std::size_t j = 0; j < aux.size(); ++j)
    aux[j] = 1.0 / (3.0 * sb) - sb * v.samples[j];
  const WaveField rhs_m = miura_transform(WaveField(v.grid, std::move(aux), v.time));
  double worst = 0.0;
  const double offset = 1.0 / (6.0 * beta);
  for (std::size_t j = 0; j < v.grid.n(); ++j)
    worst = std::max(worst, std::abs(lhs.samples[j] - (offset + rhs_m.samples[j])));
  return worst;
}

EnsemblePrediction transform_ensemble_prediction(const SolitonEnsemble& e, double beta,
                                                 const Grid1D& grid) {
  if (e.shift != ShiftPolicy::shifted_centers)
    throw std::invalid_argument(
        "transform_ensemble_prediction: expects a shifted-center ensemble");
  for (const auto& m : e.members)
    if (!(m.beta == beta))
      throw std::invalid_argument("transform_ensemble_prediction: member beta mismatch");
  const WaveField s0 = ensemble_field(e, grid);
  WaveField mapped = gardner_transform(s0, beta);

  SolitonEnsemble kdv = e;
  for (auto& m : kdv.members) m.beta = 0.0;
  kdv.shift = ShiftPolicy::raw_centers;
  const WaveField r0 = ensemble_field(kdv, grid);

  const double dist = l2_distance(mapped, r0);
  return {std::move(mapped), dist};
}

}  // namespace slab

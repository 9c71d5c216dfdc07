#include "slab/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "slab/spectral.hpp"

namespace slab {

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

namespace {

WaveField rescaled(WaveField f, double target) {
  const double nrm = norm_l2(f);
  if (nrm == 0.0) throw std::runtime_error("noise: degenerate zero draw");
  const double s = target / nrm;
  for (double& v : f.samples) v *= s;
  return f;
}

}  // namespace

WaveField spectral_noise(const Grid1D& grid, std::uint64_t seed, double l2_norm,
                         std::size_t k_max) {
  if (k_max >= grid.n() / 2) throw std::invalid_argument("spectral_noise: k_max too large");
  Rng rng(seed);
  Spectrum F = Spectrum::zero(grid);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::complex<double> c(rng.gaussian(), rng.gaussian());
    F.coefficients[k] = c;
    F.coefficients[grid.n() - k] = std::conj(c);
  }
  return rescaled(inverse_transform(F), l2_norm);
}

WaveField windowed_noise(const Grid1D& grid, std::uint64_t seed, double l2_norm, double center,
                         double width, double xi_lo, double xi_hi) {
  if (!(xi_lo > 0.0 && xi_hi > xi_lo))
    throw std::invalid_argument("windowed_noise: need 0 < xi_lo < xi_hi");
  Rng rng(seed);
  Spectrum F = Spectrum::zero(grid);
  for (std::size_t k = 1; k < grid.n() / 2; ++k) {
    const double xi = grid.xi(k);
    if (xi < xi_lo || xi > xi_hi) continue;
    const std::complex<double> c(rng.gaussian(), rng.gaussian());
    F.coefficients[k] = c;
    F.coefficients[grid.n() - k] = std::conj(c);
  }
  WaveField f = inverse_transform(F);
  for (std::size_t j = 0; j < grid.n(); ++j) {
    const double s = (grid.x(j) - center) / width;
    f.samples[j] *= std::exp(-0.5 * s * s);
  }
  return rescaled(std::move(f), l2_norm);
}

}  // namespace slab

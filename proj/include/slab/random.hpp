// Seeded, platform-stable randomness. mt19937_64 output is pinned by the
// standard; gaussians come from an explicit Box-Muller so no
// implementation-defined distribution code is involved.
#pragma once

#include <cstdint>
#include <random>

#include "slab/grid.hpp"

namespace slab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // in [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double gaussian();

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Random band-limited field: Gaussian spectral coefficients on modes
// 1 <= |k| <= k_max (conjugate-symmetric), rescaled to an exact L2 norm.
WaveField spectral_noise(const Grid1D& grid, std::uint64_t seed, double l2_norm,
                         std::size_t k_max);

// Localized perturbation: random band of wavenumbers xi in [xi_lo, xi_hi],
// Gaussian-windowed around `center` with the given width, rescaled to an
// exact L2 norm. Spectral content stays away from xi = 0, so the field
// disperses away instead of lingering.
WaveField windowed_noise(const Grid1D& grid, std::uint64_t seed, double l2_norm, double center,
                         double width, double xi_lo, double xi_hi);

}  // namespace slab

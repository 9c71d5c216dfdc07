// Uniform periodic grid on [-length/2, length/2) with its Fourier wavenumber
// set and a shared FFT plan. Grids are value types; copies share the plan.
#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "slab/fft.hpp"

namespace slab {

class Grid1D {
 public:
  // n_points must be a power of two >= 16; length > 0.
  Grid1D(std::size_t n_points, double length);

  std::size_t n() const { return n_; }
  double length() const { return length_; }
  double dx() const { return dx_; }

  double x(std::size_t i) const { return -0.5 * length_ + static_cast<double>(i) * dx_; }

  // Signed mode number for array slot m: m for m < n/2, m - n otherwise.
  long mode(std::size_t m) const {
    return m < n_ / 2 ? static_cast<long>(m) : static_cast<long>(m) - static_cast<long>(n_);
  }

  // Wavenumber xi_k = 2*pi*k/length for array slot m.
  double xi(std::size_t m) const { return xi_[m]; }
  std::span<const double> wavenumbers() const { return xi_; }

  std::size_t nyquist_slot() const { return n_ / 2; }

  const FftPlan& plan() const { return *plan_; }

  bool operator==(const Grid1D& o) const { return n_ == o.n_ && length_ == o.length_; }

 private:
  std::size_t n_;
  double length_;
  double dx_;
  std::vector<double> xi_;
  std::shared_ptr<const FftPlan> plan_;
};

// Real-valued samples on a grid at one time stamp.
struct WaveField {
  Grid1D grid;
  std::vector<double> samples;
  double time = 0.0;

  WaveField(Grid1D g, std::vector<double> s, double t = 0.0);
  static WaveField zero(const Grid1D& g, double t = 0.0);
};

// Complex Fourier coefficients indexed by wavenumber slot.
struct Spectrum {
  Grid1D grid;
  std::vector<std::complex<double>> coefficients;
  double time = 0.0;

  Spectrum(Grid1D g, std::vector<std::complex<double>> c, double t = 0.0);
  static Spectrum zero(const Grid1D& g, double t = 0.0);
};

}  // namespace slab

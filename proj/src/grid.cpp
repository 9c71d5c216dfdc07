#include "slab/grid.hpp"

#include <numbers>
#include <stdexcept>

namespace slab {

namespace {
bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}  // namespace

Grid1D::Grid1D(std::size_t n_points, double length) : n_(n_points), length_(length) {
  if (!is_power_of_two(n_points) || n_points < 16)
    throw std::invalid_argument("Grid1D: n_points must be a power of two >= 16");
  if (!(length > 0.0)) throw std::invalid_argument("Grid1D: length must be positive");
  dx_ = length_ / static_cast<double>(n_);
  xi_.resize(n_);
  const double base = 2.0 * std::numbers::pi / length_;
  for (std::size_t m = 0; m < n_; ++m) xi_[m] = base * static_cast<double>(mode(m));
  plan_ = std::make_shared<const FftPlan>(n_);
}

WaveField::WaveField(Grid1D g, std::vector<double> s, double t)
    : grid(std::move(g)), samples(std::move(s)), time(t) {
  if (samples.size() != grid.n())
    throw std::invalid_argument("WaveField: sample count does not match grid");
}

WaveField WaveField::zero(const Grid1D& g, double t) {
  return WaveField(g, std::vector<double>(g.n(), 0.0), t);
}

Spectrum::Spectrum(Grid1D g, std::vector<std::complex<double>> c, double t)
    : grid(std::move(g)), coefficients(std::move(c)), time(t) {
  if (coefficients.size() != grid.n())
    throw std::invalid_argument("Spectrum: coefficient count does not match grid");
}

Spectrum Spectrum::zero(const Grid1D& g, double t) {
  return Spectrum(g, std::vector<std::complex<double>>(g.n(), {0.0, 0.0}), t);
}

}  // namespace slab

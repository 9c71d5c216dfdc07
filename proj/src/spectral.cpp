#include "slab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "slab/kernels.hpp"

namespace slab {

namespace {

using cplx = std::complex<double>;

void require_finite(const WaveField& f, const char* who) {
  for (double v : f.samples)
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(who) + ": non-finite input");
}

void require_same_grid(const WaveField& f, const WaveField& g, const char* who) {
  if (!(f.grid == g.grid)) throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

}  // namespace

Spectrum forward_transform(const WaveField& f) {
  require_finite(f, "forward_transform");
  const Grid1D& g = f.grid;
  const std::size_t n = g.n();
  std::vector<cplx> in(n), out(n);
  for (std::size_t j = 0; j < n; ++j) in[j] = cplx(f.samples[j], 0.0);
  g.plan().forward(in, out);
  // The (-1)^m factor carries the x_j = -length/2 origin into the phase, so
  // coefficients match the continuum transform of the centered domain.
  const double dx = g.dx();
  for (std::size_t m = 0; m < n; ++m) out[m] *= (m & 1) ? -dx : dx;
  return Spectrum(g, std::move(out), f.time);
}

WaveField inverse_transform(const Spectrum& F) {
  const Grid1D& g = F.grid;
  const std::size_t n = g.n();
  std::vector<cplx> in(n), out(n);
  for (std::size_t m = 0; m < n; ++m) in[m] = (m & 1) ? -F.coefficients[m] : F.coefficients[m];
  g.plan().inverse(in, out);
  std::vector<double> samples(n);
  const double scale = 1.0 / g.length();
  for (std::size_t j = 0; j < n; ++j) samples[j] = out[j].real() * scale;
  return WaveField(g, std::move(samples), F.time);
}

void derivative_in_place(Spectrum& F, int order) {
  if (order < 1) throw std::invalid_argument("derivative: order must be >= 1");
  const Grid1D& g = F.grid;
  const std::size_t n = g.n();
  for (std::size_t m = 0; m < n; ++m) {
    const cplx ixi(0.0, g.xi(m));
    cplx factor(1.0, 0.0);
    for (int p = 0; p < order; ++p) factor *= ixi;
    F.coefficients[m] *= factor;
  }
  if (order % 2 == 1) F.coefficients[g.nyquist_slot()] = 0.0;
}

WaveField derivative(const WaveField& f, int order) {
  Spectrum F = forward_transform(f);
  derivative_in_place(F, order);
  return inverse_transform(F);
}

void truncate_two_thirds(Spectrum& F) {
  const Grid1D& g = F.grid;
  const long kcut = static_cast<long>(g.n() / 3);
  for (std::size_t m = 0; m < g.n(); ++m)
    if (std::labs(g.mode(m)) > kcut) F.coefficients[m] = 0.0;
  F.coefficients[g.nyquist_slot()] = 0.0;
}

WaveField product(const WaveField& f, const WaveField& g, Dealias dealias) {
  require_same_grid(f, g, "product");
  if (dealias == Dealias::none) {
    std::vector<double> out(f.grid.n());
    kernels::mul(f.samples, g.samples, out);
    return WaveField(f.grid, std::move(out), f.time);
  }
  Spectrum F = forward_transform(f);
  Spectrum G = forward_transform(g);
  truncate_two_thirds(F);
  truncate_two_thirds(G);
  const WaveField ft = inverse_transform(F);
  const WaveField gt = inverse_transform(G);
  std::vector<double> prod(f.grid.n());
  kernels::mul(ft.samples, gt.samples, prod);
  Spectrum P = forward_transform(WaveField(f.grid, std::move(prod), f.time));
  truncate_two_thirds(P);
  return inverse_transform(P);
}

double integrate(const WaveField& f) { return f.grid.dx() * kernels::block_sum(f.samples); }

double norm_l2(const WaveField& f) {
  return std::sqrt(f.grid.dx() * kernels::block_sum_sq(f.samples));
}

double norm_h1(const WaveField& f) {
  const WaveField fx = derivative(f, 1);
  const double dx = f.grid.dx();
  return std::sqrt(dx * (kernels::block_sum_sq(f.samples) + kernels::block_sum_sq(fx.samples)));
}

double norm_l2_halfline(const WaveField& f, double x_min) {
  const Grid1D& g = f.grid;
  if (x_min < -0.5 * g.length() || x_min > 0.5 * g.length())
    throw std::invalid_argument("norm_l2_halfline: x_min outside domain");
  double s = 0.0;
  for (std::size_t j = 0; j < g.n(); ++j)
    if (g.x(j) >= x_min) s += f.samples[j] * f.samples[j];
  return std::sqrt(g.dx() * s);
}

double sup_norm(const WaveField& f) { return kernels::max_abs(f.samples); }

double l2_distance(const WaveField& f, const WaveField& g) {
  require_same_grid(f, g, "l2_distance");
  double s = 0.0;
  const std::size_t n = f.grid.n();
  const double* a = f.samples.data();
  const double* b = g.samples.data();
  // Blocked like kernels::block_sum so results are thread-count independent.
  for (std::size_t lo = 0; lo < n; lo += kernels::reduction_block) {
    const std::size_t hi = std::min(n, lo + kernels::reduction_block);
    double part = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      const double d = a[i] - b[i];
      part += d * d;
    }
    s += part;
  }
  return std::sqrt(f.grid.dx() * s);
}

double sup_distance(const WaveField& f, const WaveField& g) {
  require_same_grid(f, g, "sup_distance");
  double m = 0.0;
  for (std::size_t i = 0; i < f.samples.size(); ++i)
    m = std::max(m, std::abs(f.samples[i] - g.samples[i]));
  return m;
}

double spectral_l1(const Spectrum& F) {
  return kernels::block_sum_abs(F.coefficients) / F.grid.length();
}

double tail_energy_fraction(const WaveField& f) {
  const Spectrum F = forward_transform(f);
  const long kcut = static_cast<long>(F.grid.n() / 3);
  double tail = 0.0, total = 0.0;
  for (std::size_t m = 0; m < F.grid.n(); ++m) {
    const double e = std::norm(F.coefficients[m]);
    total += e;
    if (std::labs(F.grid.mode(m)) > kcut) tail += e;
  }
  return total > 0.0 ? tail / total : 0.0;
}

WaveField add(const WaveField& f, const WaveField& g) {
  require_same_grid(f, g, "add");
  std::vector<double> out(f.grid.n());
  kernels::axpby(1.0, f.samples, 1.0, g.samples, out);
  return WaveField(f.grid, std::move(out), f.time);
}

WaveField sub(const WaveField& f, const WaveField& g) {
  require_same_grid(f, g, "sub");
  std::vector<double> out(f.grid.n());
  kernels::axpby(1.0, f.samples, -1.0, g.samples, out);
  return WaveField(f.grid, std::move(out), f.time);
}

WaveField scale(const WaveField& f, double a) {
  std::vector<double> out(f.grid.n());
  kernels::axpby(a, f.samples, 0.0, f.samples, out);
  return WaveField(f.grid, std::move(out), f.time);
}

}  // namespace slab

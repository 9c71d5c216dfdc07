#include "slab/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace slab {

namespace {

double wrap_to_box(double s, double length) {
  // reduce to [-length/2, length/2)
  s = std::fmod(s + 0.5 * length, length);
  if (s < 0.0) s += length;
  return s - 0.5 * length;
}

void check_tail(double value_at_antipode, double tail_tol, const char* who) {
  if (std::abs(value_at_antipode) > tail_tol)
    throw std::invalid_argument(std::string(who) + ": tail exceeds tolerance at the boundary");
}

}  // namespace

double SolitonParams::rho() const { return std::sqrt(1.0 - 4.5 * beta * c); }

void SolitonParams::validate() const {
  if (!(c > 0.0)) throw std::invalid_argument("SolitonParams: c must be positive");
  if (beta < 0.0) throw std::invalid_argument("SolitonParams: beta must be >= 0");
  if (beta > 0.0 && !(c < 2.0 / (9.0 * beta)))
    throw std::invalid_argument("SolitonParams: inadmissible (c, beta), need c < 2/(9 beta)");
}

void SolitonEnsemble::validate() const {
  if (members.empty()) throw std::invalid_argument("SolitonEnsemble: empty");
  for (const auto& m : members) m.validate();
  for (std::size_t j = 1; j < members.size(); ++j) {
    if (!(members[j].c > members[j - 1].c))
      throw std::invalid_argument("SolitonEnsemble: speeds must be strictly increasing");
    if (!(members[j].x0 > members[j - 1].x0 + min_separation))
      throw std::invalid_argument("SolitonEnsemble: separation violation");
  }
}

double kdv_soliton_value(double c, double s) {
  const double u = 0.5 * std::sqrt(c) * s;
  const double sech = 1.0 / std::cosh(u);
  return 1.5 * c * sech * sech;
}

double gardner_soliton_value(double c, double beta, double s) {
  const double rho = std::sqrt(1.0 - 4.5 * beta * c);
  return 3.0 * c / (1.0 + rho * std::cosh(std::sqrt(c) * s));
}

WaveField soliton_field(const SolitonParams& p, const Grid1D& grid, double extra_shift,
                        double tail_tol) {
  p.validate();
  const double center = p.x0 + extra_shift;
  std::vector<double> samples(grid.n());
  if (p.beta == 0.0) {
    for (std::size_t j = 0; j < grid.n(); ++j)
      samples[j] = kdv_soliton_value(p.c, wrap_to_box(grid.x(j) - center, grid.length()));
    check_tail(kdv_soliton_value(p.c, 0.5 * grid.length()), tail_tol, "kdv_soliton");
  } else {
    for (std::size_t j = 0; j < grid.n(); ++j)
      samples[j] = gardner_soliton_value(p.c, p.beta, wrap_to_box(grid.x(j) - center, grid.length()));
    check_tail(gardner_soliton_value(p.c, p.beta, 0.5 * grid.length()), tail_tol,
               "gardner_soliton");
  }
  return WaveField(grid, std::move(samples), 0.0);
}

WaveField kdv_soliton(const SolitonParams& p, const Grid1D& grid, double tail_tol) {
  if (p.beta != 0.0) throw std::invalid_argument("kdv_soliton: beta must be 0");
  return soliton_field(p, grid, 0.0, tail_tol);
}

WaveField gardner_soliton(const SolitonParams& p, const Grid1D& grid, double tail_tol) {
  if (!(p.beta > 0.0)) throw std::invalid_argument("gardner_soliton: beta must be positive");
  return soliton_field(p, grid, 0.0, tail_tol);
}

double delta_shift(double c, double beta) {
  SolitonParams p{c, 0.0, beta};
  p.validate();
  if (!(beta > 0.0)) throw std::invalid_argument("delta_shift: beta must be positive");
  return std::acosh(1.0 / p.rho()) / std::sqrt(c);
}

WaveField ensemble_field(const SolitonEnsemble& e, const Grid1D& grid, double tail_tol) {
  e.validate();
  std::vector<double> acc(grid.n(), 0.0);
  for (const auto& m : e.members) {
    // The Gardner-to-KdV map displaces a soliton forward by delta, so the
    // pre-image of a KdV soliton at x_j sits at x_j - delta_j.
    const double shift = (e.shift == ShiftPolicy::shifted_centers && m.beta > 0.0)
                             ? -delta_shift(m.c, m.beta)
                             : 0.0;
    const WaveField f = soliton_field(m, grid, shift, tail_tol);
    for (std::size_t j = 0; j < grid.n(); ++j) acc[j] += f.samples[j];
  }
  return WaveField(grid, std::move(acc), 0.0);
}

// ---- Hirota N-soliton ------------------------------------------------------

namespace {

struct TauExpansion {
  // One term per subset of solitons: phase(x) = slope*x + offset.
  std::vector<double> slopes;
  std::vector<double> offsets;
};

TauExpansion build_tau(std::span<const double> speeds, std::span<const double> phases, double t) {
  const std::size_t n = speeds.size();
  if (n == 0 || n > 12) throw std::invalid_argument("hirota_n_soliton: need 1..12 solitons");
  if (phases.size() != n) throw std::invalid_argument("hirota_n_soliton: phases size mismatch");
  std::vector<double> k(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!(speeds[j] > 0.0)) throw std::invalid_argument("hirota_n_soliton: speeds must be > 0");
    k[j] = std::sqrt(speeds[j]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (speeds[i] == speeds[j])
        throw std::invalid_argument("hirota_n_soliton: coincident speeds");

  // theta_j(x) = k_j*(x - y_j - c_j*t); pair coupling exp(A_ij) =
  // ((k_i-k_j)/(k_i+k_j))^2.
  TauExpansion tau;
  const std::size_t subsets = std::size_t{1} << n;
  tau.slopes.resize(subsets);
  tau.offsets.resize(subsets);
  for (std::size_t mu = 0; mu < subsets; ++mu) {
    double slope = 0.0, offset = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mu & (std::size_t{1} << j))) continue;
      slope += k[j];
      offset -= k[j] * (phases[j] + speeds[j] * t);
      for (std::size_t i = 0; i < j; ++i) {
        if (!(mu & (std::size_t{1} << i))) continue;
        offset += 2.0 * std::log(std::abs((k[i] - k[j]) / (k[i] + k[j])));
      }
    }
    tau.slopes[mu] = slope;
    tau.offsets[mu] = offset;
  }
  return tau;
}

double tau_log(const TauExpansion& tau, double x) {
  double m = -1e300;
  for (std::size_t mu = 0; mu < tau.slopes.size(); ++mu)
    m = std::max(m, tau.slopes[mu] * x + tau.offsets[mu]);
  double s = 0.0;
  for (std::size_t mu = 0; mu < tau.slopes.size(); ++mu)
    s += std::exp(tau.slopes[mu] * x + tau.offsets[mu] - m);
  return m + std::log(s);
}

// 6 * d^2/dx^2 log(tau) = 6 * Var_p(slope) with p the softmax over subsets.
double tau_field_value(const TauExpansion& tau, double x) {
  double m = -1e300;
  for (std::size_t mu = 0; mu < tau.slopes.size(); ++mu)
    m = std::max(m, tau.slopes[mu] * x + tau.offsets[mu]);
  double z = 0.0, m1 = 0.0, m2 = 0.0;
  for (std::size_t mu = 0; mu < tau.slopes.size(); ++mu) {
    const double w = std::exp(tau.slopes[mu] * x + tau.offsets[mu] - m);
    z += w;
    m1 += w * tau.slopes[mu];
    m2 += w * tau.slopes[mu] * tau.slopes[mu];
  }
  m1 /= z;
  m2 /= z;
  return 6.0 * (m2 - m1 * m1);
}

}  // namespace

double hirota_value(std::span<const double> speeds, std::span<const double> phases, double t,
                    double x) {
  return tau_field_value(build_tau(speeds, phases, t), x);
}

double hirota_value_fd(std::span<const double> speeds, std::span<const double> phases, double t,
                       double x) {
  const TauExpansion tau = build_tau(speeds, phases, t);
  // Fourth-order central stencil on log(tau). The step balances truncation
  // against cancellation in the large linear-in-x log values.
  const double h = 1e-2;
  const double lm2 = tau_log(tau, x - 2 * h), lm1 = tau_log(tau, x - h);
  const double l0 = tau_log(tau, x);
  const double lp1 = tau_log(tau, x + h), lp2 = tau_log(tau, x + 2 * h);
  return 6.0 * (-lm2 + 16.0 * lm1 - 30.0 * l0 + 16.0 * lp1 - lp2) / (12.0 * h * h);
}

WaveField hirota_n_soliton(std::span<const double> speeds, std::span<const double> phases,
                           const Grid1D& grid, double t, double tail_tol) {
  const TauExpansion tau = build_tau(speeds, phases, t);
  std::vector<double> samples(grid.n());
  for (std::size_t j = 0; j < grid.n(); ++j) samples[j] = tau_field_value(tau, grid.x(j));
  const double edge = std::max(std::abs(samples.front()),
                               std::abs(tau_field_value(tau, 0.5 * grid.length())));
  check_tail(edge, tail_tol, "hirota_n_soliton");
  return WaveField(grid, std::move(samples), t);
}

PhaseShifts two_soliton_phase_shifts(double c1, double c2) {
  if (!(0.0 < c1 && c1 < c2)) throw std::invalid_argument("phase_shifts: need 0 < c1 < c2");
  const double k1 = std::sqrt(c1), k2 = std::sqrt(c2);
  const double a = 2.0 * std::log((k2 + k1) / (k2 - k1));
  return {-a / k1, a / k2};
}

// ---- quadrature ------------------------------------------------------------

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

double soliton_mass_integral(double c, double beta, double rel_tol) {
  SolitonParams p{c, 0.0, beta};
  p.validate();
  const auto q2 = [&](double s) {
    const double v = beta == 0.0 ? kdv_soliton_value(c, s) : gardner_soliton_value(c, beta, s);
    return v * v;
  };
  const double cut = 60.0 / std::sqrt(c);
  const double scale = 9.0 * c * c;  // rough integrand scale for the tolerance
  return 2.0 * integrate_adaptive(q2, 0.0, cut, rel_tol * scale);
}

double weinstein_derivative(double c, double beta, double dc) {
  if (!(dc > 0.0 && dc < c)) throw std::invalid_argument("weinstein_derivative: bad step");
  SolitonParams hi{c + dc, 0.0, beta};
  SolitonParams lo{c - dc, 0.0, beta};
  hi.validate();  // inadmissible stencil throws here
  lo.validate();
  const auto central = [&](double h) {
    return (soliton_mass_integral(c + h, beta) - soliton_mass_integral(c - h, beta)) / (2.0 * h);
  };
  const double d1 = central(dc);
  const double d2 = central(0.5 * dc);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace slab

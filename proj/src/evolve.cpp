#include "slab/evolve.hpp"

#include <cmath>
#include <stdexcept>

#include "slab/kernels.hpp"
#include "slab/spectral.hpp"

namespace slab {

namespace {

using cplx = std::complex<double>;

// phi1(z) = (e^z - 1)/z, phi2 = (e^z - 1 - z)/z^2, phi3 = (e^z - 1 - z - z^2/2)/z^3,
// with Taylor fallbacks near 0 (z is purely imaginary here, so the direct
// formulas cancel catastrophically for small |z|).
cplx phi(int q, cplx z) {
  if (std::abs(z) < 0.5) {
    // sum_{j>=0} z^j / (j+q)!
    double fact = 1.0;
    for (int i = 2; i <= q; ++i) fact *= i;
    cplx term = 1.0 / fact;
    cplx sum = term;
    for (int j = 1; j <= 18; ++j) {
      term *= z / static_cast<double>(j + q);
      sum += term;
    }
    return sum;
  }
  const cplx ez = std::exp(z);
  switch (q) {
    case 1:
      return (ez - 1.0) / z;
    case 2:
      return (ez - 1.0 - z) / (z * z);
    default:
      return (ez - 1.0 - z - 0.5 * z * z) / (z * z * z);
  }
}

class Stepper {
 public:
  Stepper(const Grid1D& grid, const PDESpec& spec, double dt, Integrator integrator)
      : grid_(grid), spec_(spec), dt_(dt), integrator_(integrator) {
    const std::size_t n = grid.n();
    e_.resize(n);
    e2_.resize(n);
    if (integrator == Integrator::exponential_rk4) {
      q_.resize(n);
      f1_.resize(n);
      f2_.resize(n);
      f3_.resize(n);
    }
    for (std::size_t m = 0; m < n; ++m) {
      const double xi = grid.xi(m);
      const cplx lz = cplx(0.0, xi * xi * xi) * dt;  // dt * L, L = i*xi^3
      e_[m] = std::exp(lz);
      e2_[m] = std::exp(0.5 * lz);
      if (integrator == Integrator::exponential_rk4) {
        q_[m] = 0.5 * dt * phi(1, 0.5 * lz);
        f1_[m] = dt * (phi(1, lz) - 3.0 * phi(2, lz) + 4.0 * phi(3, lz));
        f2_[m] = dt * (phi(2, lz) - 2.0 * phi(3, lz));
        f3_[m] = dt * (4.0 * phi(3, lz) - phi(2, lz));
      }
    }
  }

  // N(u_hat) = -i*xi * (q*(u^2)_dealiased + kappa*(u^3)_dealiased)
  std::vector<cplx> nonlinear(const std::vector<cplx>& u_hat) const {
    const std::size_t n = grid_.n();
    Spectrum trunc(grid_, u_hat);
    truncate_two_thirds(trunc);
    const WaveField u = inverse_transform(trunc);
    std::vector<double> sq(n);
    kernels::mul(u.samples, u.samples, sq);
    Spectrum sq_hat = forward_transform(WaveField(grid_, std::move(sq), 0.0));
    truncate_two_thirds(sq_hat);

    std::vector<cplx> flux(n);
    if (spec_.cubic_coeff != 0.0) {
      const WaveField u2 = inverse_transform(sq_hat);
      std::vector<double> cu(n);
      kernels::mul(u2.samples, u.samples, cu);
      Spectrum cube_hat = forward_transform(WaveField(grid_, std::move(cu), 0.0));
      truncate_two_thirds(cube_hat);
      for (std::size_t m = 0; m < n; ++m)
        flux[m] = spec_.quadratic_coeff * sq_hat.coefficients[m] +
                  spec_.cubic_coeff * cube_hat.coefficients[m];
    } else {
      for (std::size_t m = 0; m < n; ++m) flux[m] = spec_.quadratic_coeff * sq_hat.coefficients[m];
    }
    for (std::size_t m = 0; m < n; ++m) flux[m] *= cplx(0.0, -grid_.xi(m));
    flux[grid_.nyquist_slot()] = 0.0;
    return flux;
  }

  void advance(std::vector<cplx>& u) const {
    if (integrator_ == Integrator::exponential_rk4)
      advance_etdrk4(u);
    else
      advance_ifrk4(u);
  }

 private:
  void advance_etdrk4(std::vector<cplx>& u) const {
    const std::size_t n = grid_.n();
    const std::vector<cplx> nu = nonlinear(u);
    std::vector<cplx> a(n), b(n), c(n);
    kernels::etd_stage(e2_, u, q_, nu, a);
    const std::vector<cplx> na = nonlinear(a);
    kernels::etd_stage(e2_, u, q_, na, b);
    const std::vector<cplx> nb = nonlinear(b);
    // c = E2*a + Q*(2*Nb - Nv)
    std::vector<cplx> tmp(n);
    for (std::size_t m = 0; m < n; ++m) tmp[m] = 2.0 * nb[m] - nu[m];
    kernels::etd_stage(e2_, a, q_, tmp, c);
    const std::vector<cplx> nc = nonlinear(c);
    kernels::etd_final(e_, u, f1_, nu, f2_, na, nb, f3_, nc);
  }

  void advance_ifrk4(std::vector<cplx>& u) const {
    const std::size_t n = grid_.n();
    const std::vector<cplx> n0 = nonlinear(u);
    std::vector<cplx> u1(n), u2(n), u3(n);
    for (std::size_t m = 0; m < n; ++m) u1[m] = e2_[m] * (u[m] + 0.5 * dt_ * n0[m]);
    const std::vector<cplx> n1 = nonlinear(u1);
    for (std::size_t m = 0; m < n; ++m) u2[m] = e2_[m] * u[m] + 0.5 * dt_ * n1[m];
    const std::vector<cplx> n2 = nonlinear(u2);
    for (std::size_t m = 0; m < n; ++m) u3[m] = e_[m] * u[m] + dt_ * e2_[m] * n2[m];
    const std::vector<cplx> n3 = nonlinear(u3);
    for (std::size_t m = 0; m < n; ++m)
      u[m] = e_[m] * u[m] +
             dt_ / 6.0 * (e_[m] * n0[m] + 2.0 * e2_[m] * (n1[m] + n2[m]) + n3[m]);
  }

  Grid1D grid_;
  PDESpec spec_;
  double dt_;
  Integrator integrator_;
  std::vector<cplx> e_, e2_, q_, f1_, f2_, f3_;
};

void validate_config(const Grid1D& grid, const PDESpec& spec, double dt) {
  if (spec.cubic_coeff > 0.0)
    throw std::invalid_argument("evolve: cubic coefficient must be <= 0");
  if (!(dt > 0.0)) throw std::invalid_argument("evolve: dt must be positive");
  const double ceiling = dt_stability_ceiling(grid);
  if (dt > ceiling)
    throw std::invalid_argument("evolve: dt exceeds the stability ceiling " +
                                std::to_string(ceiling));
}

}  // namespace

double dt_stability_ceiling(const Grid1D& grid) {
  const double xi_max = grid.xi(grid.n() / 2 - 1);  // largest positive mode
  return dt_ceiling_constant / (xi_max * xi_max * xi_max);
}

double mass(const WaveField& f) { return 0.5 * f.grid.dx() * kernels::block_sum_sq(f.samples); }

double energy(const WaveField& f, const PDESpec& spec) {
  const WaveField fx = derivative(f, 1);
  const double dx = f.grid.dx();
  double cubic = 0.0, quartic = 0.0;
  for (double v : f.samples) {
    cubic += v * v * v;
    quartic += v * v * v * v;
  }
  return 0.5 * dx * kernels::block_sum_sq(fx.samples) -
         spec.quadratic_coeff / 3.0 * dx * cubic - spec.cubic_coeff / 4.0 * dx * quartic;
}

WaveField step(const WaveField& f, const PDESpec& spec, double dt, Integrator integrator) {
  validate_config(f.grid, spec, dt);
  for (double v : f.samples)
    if (!std::isfinite(v)) throw std::invalid_argument("step: non-finite input");
  Stepper stepper(f.grid, spec, dt, integrator);
  Spectrum u_hat = forward_transform(f);
  std::vector<cplx> u = std::move(u_hat.coefficients);
  stepper.advance(u);
  WaveField out = inverse_transform(Spectrum(f.grid, std::move(u), f.time));
  out.time = f.time + dt;
  return out;
}

EvolveResult evolve(const WaveField& f0, const PDESpec& spec, const EvolveConfig& cfg) {
  validate_config(f0.grid, spec, cfg.dt);
  if (!(cfg.t_end > f0.time)) throw std::invalid_argument("evolve: t_end must exceed start time");
  if (cfg.snapshot_stride < 1) throw std::invalid_argument("evolve: snapshot_stride must be >= 1");
  const double duration = cfg.t_end - f0.time;
  const double steps_real = duration / cfg.dt;
  const long n_steps = std::lround(steps_real);
  if (n_steps < 1 || std::abs(steps_real - static_cast<double>(n_steps)) > 1e-9)
    throw std::invalid_argument("evolve: dt must divide t_end - t0");

  EvolveResult result;
  const double sup0 = sup_norm(f0);
  const double mass0 = mass(f0);
  const double blow_cap = cfg.blowup_factor * std::max(sup0, 1e-300);

  Stepper stepper(f0.grid, spec, cfg.dt, cfg.integrator);
  Spectrum state = forward_transform(f0);

  WaveField last_good = f0;
  auto record = [&](const WaveField& f) {
    result.trajectory.snapshots.push_back(f);
    result.trajectory.log.push_back({f.time, mass(f), energy(f, spec), sup_norm(f)});
  };
  record(f0);

  for (long s = 1; s <= n_steps; ++s) {
    stepper.advance(state.coefficients);
    const bool at_snapshot = (s % cfg.snapshot_stride == 0) || s == n_steps;
    if (!at_snapshot) continue;
    WaveField f = inverse_transform(state);
    f.time = f0.time + static_cast<double>(s) * cfg.dt;
    bool finite = true;
    for (double v : f.samples)
      if (!std::isfinite(v)) {
        finite = false;
        break;
      }
    if (!finite || sup_norm(f) > blow_cap) {
      result.status = EvolveStatus::blow_up;
      result.message = "blow-up detected at t = " + std::to_string(f.time) +
                       "; returning the last good state";
      result.trajectory.snapshots.push_back(last_good);
      return result;
    }
    const double drift = std::abs(mass(f) - mass0) / std::max(std::abs(mass0), 1e-300);
    if (drift > cfg.conservation_tol) {
      result.status = EvolveStatus::conservation_breach;
      result.message = "relative mass drift " + std::to_string(drift) + " at t = " +
                       std::to_string(f.time);
      record(f);
      return result;
    }
    record(f);
    last_good = std::move(f);
  }
  return result;
}

}  // namespace slab

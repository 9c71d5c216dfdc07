// Closed-form soliton families and derived quantities.
//
// KdV:     Q_c(s) = c*Q(sqrt(c)*s), Q(s) = 3/(1+cosh(s)) = (3/2)sech^2(s/2)
// Gardner: Q_{c,b}(s) = 3c/(1+rho*cosh(sqrt(c)*s)), rho = sqrt(1-(9/2)*b*c),
//          admissible for 0 < c < 2/(9b).
//
// Profiles are sampled with nearest-image arguments on the periodic box; the
// box must be wide enough that the discarded tail is below tail_tol.
#pragma once

#include <span>
#include <vector>

#include "slab/grid.hpp"

namespace slab {

struct SolitonParams {
  double c = 1.0;     // speed, > 0
  double x0 = 0.0;    // center
  double beta = 0.0;  // 0 means KdV soliton

  double rho() const;  // in (0,1], 1 iff beta == 0
  void validate() const;
};

enum class ShiftPolicy { raw_centers, shifted_centers };

struct SolitonEnsemble {
  std::vector<SolitonParams> members;  // strictly increasing speeds
  double min_separation = 0.0;         // L
  ShiftPolicy shift = ShiftPolicy::raw_centers;

  void validate() const;
};

double kdv_soliton_value(double c, double s);
double gardner_soliton_value(double c, double beta, double s);

WaveField kdv_soliton(const SolitonParams& p, const Grid1D& grid, double tail_tol = 1e-12);
WaveField gardner_soliton(const SolitonParams& p, const Grid1D& grid, double tail_tol = 1e-12);

// Soliton (KdV when beta==0, Gardner otherwise) sampled with an extra center
// offset; used for shifted ensembles and fitted models.
WaveField soliton_field(const SolitonParams& p, const Grid1D& grid, double extra_shift = 0.0,
                        double tail_tol = 1e-12);

// The translation by which the Gardner-to-KdV map displaces a soliton:
// delta = arccosh(1/rho)/sqrt(c) > 0 for beta > 0.
double delta_shift(double c, double beta);

WaveField ensemble_field(const SolitonEnsemble& e, const Grid1D& grid, double tail_tol = 1e-12);

// Explicit KdV N-soliton profile via the tau function,
// u = 6 d^2/dx^2 log tau, normalized so N=1 reduces to Q_c(x - y - c t).
// Evaluated pointwise through softmax moments of the subset expansion, which
// stays stable for large |t|.
WaveField hirota_n_soliton(std::span<const double> speeds, std::span<const double> phases,
                           const Grid1D& grid, double t, double tail_tol = 1e-12);
double hirota_value(std::span<const double> speeds, std::span<const double> phases, double t,
                    double x);
// Second route to d^2/dx^2 log tau: high-order finite differences of the
// log-sum-exp; kept as an independent cross-check of the softmax moments.
double hirota_value_fd(std::span<const double> speeds, std::span<const double> phases, double t,
                       double x);

// Post-collision center offsets of the two-soliton solution:
// fast soliton +(2/k2)*log((k2+k1)/(k2-k1)), slow soliton -(2/k1)*log(...).
struct PhaseShifts {
  double slow;
  double fast;
};
PhaseShifts two_soliton_phase_shifts(double c1, double c2);

// integral of Q_{c,beta}^2 over the line, by adaptive quadrature on the
// closed form (beta == 0 allowed).
double soliton_mass_integral(double c, double beta, double rel_tol = 1e-13);

// d/dc of the above at (c, beta): Richardson-extrapolated central difference
// with base step dc.
double weinstein_derivative(double c, double beta, double dc);

}  // namespace slab

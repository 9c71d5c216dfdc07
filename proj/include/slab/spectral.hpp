// Discrete Fourier transform contract, spectral derivatives, dealiased
// products, quadrature and norms.
//
// Convention: F(xi_k) = dx * sum_j f(x_j) exp(-i xi_k x_j), so d/dx <-> i*xi
// and Parseval reads dx * sum |f_j|^2 = (1/length) * sum |F_k|^2.
#pragma once

#include "slab/grid.hpp"

namespace slab {

enum class Dealias { none, two_thirds };

Spectrum forward_transform(const WaveField& f);
WaveField inverse_transform(const Spectrum& F);

// Spectral differentiation: mode k multiplied by (i*xi_k)^order; the Nyquist
// mode of odd-order derivatives is zeroed.
WaveField derivative(const WaveField& f, int order);
void derivative_in_place(Spectrum& F, int order);

// Pointwise product; with Dealias::two_thirds both inputs and the output are
// truncated to |k| <= floor(n/3).
WaveField product(const WaveField& f, const WaveField& g, Dealias dealias);

double integrate(const WaveField& f);          // dx * sum (rectangle rule)
double norm_l2(const WaveField& f);            // sqrt(dx * sum f^2)
double norm_h1(const WaveField& f);            // sqrt(||f||^2 + ||f_x||^2)
double norm_l2_halfline(const WaveField& f, double x_min);
double sup_norm(const WaveField& f);

double l2_distance(const WaveField& f, const WaveField& g);
double sup_distance(const WaveField& f, const WaveField& g);

// Zero all modes with |k| > floor(n/3) (and the Nyquist slot).
void truncate_two_thirds(Spectrum& F);

// (1/length) * sum_k |F_k|: an upper bound for sup|f|.
double spectral_l1(const Spectrum& F);

// Fraction of spectral energy carried by modes with |k| > n/3; a smoothness
// diagnostic for callers that need band-limited inputs.
double tail_energy_fraction(const WaveField& f);

// In-place linear combination helpers on matching grids.
WaveField add(const WaveField& f, const WaveField& g);
WaveField sub(const WaveField& f, const WaveField& g);
WaveField scale(const WaveField& f, double a);

}  // namespace slab

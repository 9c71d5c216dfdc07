// The Gardner-to-KdV map, the classical Miura map, and their composition
// identity. All products are dealiased.
#pragma once

#include "slab/grid.hpp"
#include "slab/profiles.hpp"

namespace slab {

// M_beta[v] = v - (3/2)*sqrt(2*beta)*v_x - (3/2)*beta*v^2
WaveField gardner_transform(const WaveField& v, double beta);

// M[v] = (3/sqrt(2))*v_x - (3/2)*v^2
WaveField miura_transform(const WaveField& v);

// Sup-norm residual, at fixed time, of assembling M_beta[v] through the
// auxiliary function 1/(3*sqrt(beta)) - sqrt(beta)*v and the Miura map plus
// the constant 1/(6*beta). Exact algebraically; the residual is pure
// discretization error.
double composition_identity_residual(const WaveField& v, double beta);

struct EnsemblePrediction {
  WaveField transformed;  // M_beta[S0]
  double l2_distance;     // || M_beta[S0] - R0 ||_L2
};

// For a shifted-center Gardner ensemble, applies the transform and measures
// the L2 distance to the matching KdV sum at the raw centers (the cross-term
// defect).
EnsemblePrediction transform_ensemble_prediction(const SolitonEnsemble& e, double beta,
                                                 const Grid1D& grid);

}  // namespace slab

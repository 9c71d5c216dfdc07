// Regression and rank-correlation helpers for the bound-fitting experiments.
#pragma once

#include <span>
#include <vector>

namespace slab {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

// Fit y ~ a * exp(-gamma * x): log-linear regression; returns gamma > 0 for
// decaying data.
struct ExponentialFit {
  double gamma = 0.0;
  double log_amplitude = 0.0;
  double r_squared = 0.0;
};
ExponentialFit exponential_decay_fit(std::span<const double> x, std::span<const double> y);

double spearman_rho(std::span<const double> x, std::span<const double> y);

}  // namespace slab

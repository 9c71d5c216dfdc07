// Test-only oracles, kept independent of the library code paths they check:
// an adaptive Simpson quadrature, closed-form soliton expressions, and a
// dense collocation solver for the resolvent equation.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracle {

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 40);
}

inline double q_profile(double s) { return 3.0 / (1.0 + std::cosh(s)); }
inline double q_c(double c, double s) { return c * q_profile(std::sqrt(c) * s); }

inline double gardner_q(double c, double beta, double s) {
  const double rho = std::sqrt(1.0 - 4.5 * beta * c);
  return 3.0 * c / (1.0 + rho * std::cosh(std::sqrt(c) * s));
}

// Third derivative of Q_c from the closed form (u = sqrt(c)*s/2):
// Q_c''' = (3 c^{5/2} / 2) sech^2(u) tanh(u) (2 sech^2(u) - tanh^2(u)).
inline double q_c_third_derivative(double c, double s) {
  const double u = 0.5 * std::sqrt(c) * s;
  const double sech = 1.0 / std::cosh(u);
  const double tanh_u = std::tanh(u);
  return 1.5 * std::pow(c, 2.5) * sech * sech * tanh_u *
         (2.0 * sech * sech - tanh_u * tanh_u);
}

// Dense collocation oracle for L[w] = -(3/2)sqrt(2 beta) w_x + (1-3 beta S0) w = f
// on the periodic grid: spectral differentiation matrix in its cotangent
// closed form (even n), Gaussian elimination with partial pivoting.
inline std::vector<double> fourier_diff_matrix(std::size_t n, double length) {
  std::vector<double> d(n * n, 0.0);
  const double scale = 2.0 * std::numbers::pi / length;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const long diff = static_cast<long>(i) - static_cast<long>(j);
      const double sign = (diff % 2 == 0) ? 1.0 : -1.0;
      d[i * n + j] = scale * 0.5 * sign /
                     std::tan(std::numbers::pi * static_cast<double>(diff) /
                              static_cast<double>(n));
    }
  return d;
}

inline std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (a[piv * n + col] == 0.0) throw std::runtime_error("dense oracle: singular matrix");
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[col * n + k]);
      std::swap(b[piv], b[col]);
    }
    const double inv = 1.0 / a[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[r * n + col] * inv;
      if (factor == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) a[r * n + k] -= factor * a[col * n + k];
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t ri = n; ri-- > 0;) {
    double s = b[ri];
    for (std::size_t k = ri + 1; k < n; ++k) s -= a[ri * n + k] * x[k];
    x[ri] = s / a[ri * n + ri];
  }
  return x;
}

// Assemble and solve the collocation system for given S0 samples and rhs.
inline std::vector<double> dense_resolvent_solve(const std::vector<double>& s0,
                                                 const std::vector<double>& f, double beta,
                                                 double length) {
  const std::size_t n = f.size();
  std::vector<double> a = fourier_diff_matrix(n, length);
  const double coef = -1.5 * std::sqrt(2.0 * beta);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] *= coef;
    a[i * n + i] += 1.0 - 3.0 * beta * s0[i];
  }
  return solve_dense(std::move(a), f);
}

}  // namespace oracle

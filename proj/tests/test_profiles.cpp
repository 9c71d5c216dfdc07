#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "slab/profiles.hpp"
#include "slab/spectral.hpp"

using namespace slab;

// Frozen oracle values (high-precision evaluation of the closed forms):
//   rho(1, 0.1)        = 0.74161984870956629
//   peak 3/(1+rho)     = 1.72253434193622470
//   delta(1, 0.1)      = 0.81223325962408079
//   sinh(sqrt(c)delta) = 0.90453403373329087 (= (3/2rho)sqrt(2 beta c))
//   delta(1, 1e-4)     = 0.02121638627552275
//   2-soliton shifts c=(1,2): fast +2.49290096056092205, slow -3.52549434807817210
//   int Q_{1,0.1}^2    = 8.43223418948479814
//   d/dc int Q_{c,b}^2 at (1, 0.01) = 9.42408376963350785

TEST_CASE("kdv soliton values and peak") {
  CHECK(kdv_soliton_value(1.0, 0.0) == 1.5);  // Q(0) = 3/2
  const Grid1D g(1024, 100.0);
  const double x0 = g.x(640);  // 12.5, a grid point
  const WaveField q = kdv_soliton({2.0, x0, 0.0}, g);
  std::size_t argmax = 0;
  for (std::size_t j = 0; j < g.n(); ++j)
    if (q.samples[j] > q.samples[argmax]) argmax = j;
  CHECK(g.x(argmax) == x0);
  CHECK(q.samples[argmax] == doctest::Approx(3.0).epsilon(1e-12));  // 3c/2
}

TEST_CASE("soliton mass integral: int Q_c^2 = 6 c^{3/2}") {
  const double oracle_c4 = oracle::integrate(
      [](double s) { return oracle::q_c(4.0, s) * oracle::q_c(4.0, s); }, -40.0, 40.0, 1e-12);
  CHECK(oracle_c4 == doctest::Approx(48.0).epsilon(1e-10));
  const Grid1D g(1024, 100.0);
  const WaveField q = kdv_soliton({4.0, 0.0, 0.0}, g);
  CHECK(integrate(product(q, q, Dealias::none)) == doctest::Approx(48.0).epsilon(1e-8));
  CHECK(soliton_mass_integral(4.0, 0.0) == doctest::Approx(48.0).epsilon(1e-10));
}

TEST_CASE("scaling law Q_c(s) = c Q(sqrt(c) s)") {
  for (double c : {0.3, 1.0, 2.7}) {
    for (double s = -8.0; s <= 8.0; s += 0.37) {
      const double lhs = kdv_soliton_value(c, s);
      const double rhs = c * kdv_soliton_value(1.0, std::sqrt(c) * s);
      CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST_CASE("gardner soliton closed-form values") {
  CHECK(gardner_soliton_value(1.0, 0.1, 0.0) ==
        doctest::Approx(1.72253434193622470).epsilon(1e-12));
  SolitonParams p{1.0, 0.0, 0.1};
  CHECK(p.rho() == doctest::Approx(0.74161984870956629).epsilon(1e-14));
  // peak at x0, even, strictly decreasing in |x - x0|
  const Grid1D g(1024, 100.0);
  const WaveField q = gardner_soliton(p, g);
  const std::size_t mid = g.n() / 2;  // x = 0
  CHECK(g.x(mid) == 0.0);
  for (std::size_t j = 1; j < 200; ++j) {
    CHECK(q.samples[mid + j] == doctest::Approx(q.samples[mid - j]).epsilon(1e-12));
    CHECK(q.samples[mid + j] < q.samples[mid + j - 1]);
  }
}

TEST_CASE("gardner admissibility") {
  CHECK_THROWS_AS(SolitonParams({1.0, 0.0, 0.3}).validate(), std::invalid_argument);
  const Grid1D g(64, 50.0);
  CHECK_THROWS_AS(gardner_soliton({3.0, 0.0, 0.1}, g), std::invalid_argument);
  CHECK_THROWS_AS(gardner_soliton({1.0, 0.0, 0.0}, g), std::invalid_argument);
  CHECK_THROWS_AS(kdv_soliton({1.0, 0.0, 0.1}, g), std::invalid_argument);
}

TEST_CASE("beta -> 0 recovers the KdV soliton") {
  double worst = 0.0;
  for (double s = -20.0; s <= 20.0; s += 0.1)
    worst = std::max(worst,
                     std::abs(gardner_soliton_value(1.0, 1e-6, s) - kdv_soliton_value(1.0, s)));
  CHECK(worst < 1e-5);
}

TEST_CASE("delta shift and the hyperbolic identity") {
  const double delta = delta_shift(1.0, 0.1);
  CHECK(delta == doctest::Approx(0.81223325962408079).epsilon(1e-13));
  // cosh(sqrt(c) delta) = 1/rho and sinh(sqrt(c) delta) = (3/2rho)sqrt(2 beta c)
  const double rho = std::sqrt(0.55);
  CHECK(std::abs(std::cosh(delta) - 1.0 / rho) < 1e-12);
  CHECK(std::abs(std::sinh(delta) - 1.5 / rho * std::sqrt(0.2)) < 1e-12);
  CHECK(std::sinh(delta) == doctest::Approx(0.90453403373329087).epsilon(1e-13));

  // Bisection cross-check of arccosh.
  double lo = 0.0, hi = 5.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (std::cosh(mid) < 1.0 / rho ? lo : hi) = mid;
  }
  CHECK(delta == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-10));

  CHECK_THROWS_AS(delta_shift(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(delta_shift(3.0, 0.1), std::invalid_argument);
}

TEST_CASE("delta shift positivity and small-beta scaling") {
  // delta > 0 for every admissible beta > 0.
  for (double beta : {1e-6, 1e-3, 0.05, 0.1}) {
    for (double c : {0.3, 1.0, 1.9}) {
      if (beta > 0.0 && c >= 2.0 / (9.0 * beta)) continue;
      CHECK(delta_shift(c, beta) > 0.0);
    }
  }
  // Taylor limit: delta = (3/2)sqrt(2 beta) + O(beta^{3/2}), independent of c;
  // the numeric value at beta = 1e-4 pins the sqrt(beta) rate.
  CHECK(delta_shift(1.0, 1e-4) == doctest::Approx(0.02121638627552275).epsilon(1e-12));
  for (double c : {0.5, 1.0, 2.0}) {
    const double beta = 1e-4;
    const double limit = 1.5 * std::sqrt(2.0 * beta);
    CHECK(delta_shift(c, beta) == doctest::Approx(limit).epsilon(1e-3));
  }
}

TEST_CASE("ensemble field") {
  const Grid1D g(1024, 200.0);
  SolitonEnsemble single{{{1.0, -5.0, 0.0}}, 0.0, ShiftPolicy::raw_centers};
  CHECK(sup_distance(ensemble_field(single, g), kdv_soliton({1.0, -5.0, 0.0}, g)) == 0.0);

  SolitonEnsemble pair{{{1.0, -20.0, 0.0}, {2.0, 20.0, 0.0}}, 40.0 - 1e-9,
                       ShiftPolicy::raw_centers};
  const WaveField sum = ensemble_field(pair, g);
  // cross product of tails stays under e^{-gamma0 L / 2}, gamma0 = sqrt(c1)/2
  double worst = 0.0;
  for (std::size_t j = 0; j < g.n(); ++j)
    worst = std::max(worst, kdv_soliton_value(1.0, g.x(j) + 20.0) *
                                kdv_soliton_value(2.0, g.x(j) - 20.0));
  CHECK(worst < std::exp(-0.5 * 40.0 / 2.0));
  CHECK(sup_norm(sum) > 2.9);

  SolitonEnsemble bad = pair;
  bad.min_separation = 45.0;
  CHECK_THROWS_AS(ensemble_field(bad, g), std::invalid_argument);
  SolitonEnsemble unordered{{{2.0, -20.0, 0.0}, {1.0, 20.0, 0.0}}, 10.0,
                            ShiftPolicy::raw_centers};
  CHECK_THROWS_AS(ensemble_field(unordered, g), std::invalid_argument);
}

TEST_CASE("shifted ensemble displaces each member by exactly delta_j") {
  const Grid1D g(2048, 200.0);
  const double beta = 0.05;
  SolitonEnsemble raw{{{1.0, -30.0, beta}, {2.0, 30.0, beta}}, 50.0, ShiftPolicy::raw_centers};
  SolitonEnsemble shifted = raw;
  shifted.shift = ShiftPolicy::shifted_centers;
  const WaveField a = ensemble_field(shifted, g);
  std::vector<double> manual(g.n(), 0.0);
  for (const auto& m : raw.members) {
    const double d = delta_shift(m.c, beta);
    for (std::size_t j = 0; j < g.n(); ++j)
      manual[j] += gardner_soliton_value(m.c, beta, g.x(j) - (m.x0 - d));
  }
  CHECK(sup_distance(a, WaveField(g, std::move(manual))) < 1e-13);
}

TEST_CASE("hirota N=1 reduces to the KdV soliton") {
  const Grid1D g(1024, 100.0);
  const double speeds[] = {1.0};
  const double phases[] = {0.0};
  const WaveField h0 = hirota_n_soliton(speeds, phases, g, 0.0);
  CHECK(sup_distance(h0, kdv_soliton({1.0, 0.0, 0.0}, g)) < 1e-10);
  const WaveField h1 = hirota_n_soliton(speeds, phases, g, 2.5);
  CHECK(sup_distance(h1, kdv_soliton({1.0, 2.5, 0.0}, g)) < 1e-10);
}

TEST_CASE("hirota analytic second derivative agrees with the log-tau stencil") {
  const double speeds[] = {1.0, 2.0};
  const double phases[] = {0.0, 0.0};
  for (double t : {-30.0, -1.0, 0.0, 0.4, 30.0})
    for (double x = -70.0; x <= 70.0; x += 3.7) {
      const double a = hirota_value(speeds, phases, t, x);
      const double b = hirota_value_fd(speeds, phases, t, x);
      CHECK(std::abs(a - b) < 1e-7 + 1e-6 * std::abs(a));
    }
}

TEST_CASE("hirota coincident speeds rejected") {
  const Grid1D g(64, 400.0);
  const double speeds[] = {1.0, 1.0};
  const double phases[] = {0.0, 10.0};
  CHECK_THROWS_AS(hirota_n_soliton(speeds, phases, g, 0.0), std::invalid_argument);
}

TEST_CASE("hirota mass is conserved across the collision") {
  const Grid1D g(4096, 500.0);
  const double speeds[] = {1.0, 2.0};
  const double phases[] = {0.0, 0.0};
  const WaveField early = hirota_n_soliton(speeds, phases, g, -50.0);
  const WaveField late = hirota_n_soliton(speeds, phases, g, 50.0);
  const double m_early = 0.5 * integrate(product(early, early, Dealias::none));
  const double m_late = 0.5 * integrate(product(late, late, Dealias::none));
  CHECK(m_early == doctest::Approx(m_late).epsilon(1e-10));
}

TEST_CASE("two-soliton phase shifts from the tau function") {
  const PhaseShifts s = two_soliton_phase_shifts(1.0, 2.0);
  CHECK(s.fast == doctest::Approx(2.49290096056092205).epsilon(1e-14));
  CHECK(s.slow == doctest::Approx(-3.52549434807817210).epsilon(1e-14));
}

TEST_CASE("weinstein derivative") {
  CHECK(weinstein_derivative(1.0, 0.0, 1e-4) == doctest::Approx(9.0).epsilon(1e-8));
  CHECK(weinstein_derivative(1.0, 0.01, 1e-4) ==
        doctest::Approx(9.42408376963350785).epsilon(1e-6));
  CHECK(soliton_mass_integral(1.0, 0.1) == doctest::Approx(8.43223418948479814).epsilon(1e-9));
  // positivity across an admissible sample grid
  for (double beta : {0.0, 0.02, 0.06, 0.1}) {
    const double c_hi = beta > 0.0 ? 0.85 * 2.0 / (9.0 * beta) : 3.0;
    for (int j = 0; j < 5; ++j) {
      const double c = 0.2 + (std::min(c_hi, 3.0) - 0.2) * j / 4.0;
      CHECK(weinstein_derivative(c, beta, 1e-4 * c) > 0.0);
    }
  }
  // deviation from 9 grows like K*beta at c=1
  double k_max = 0.0;
  for (double beta : {0.01, 0.02, 0.05, 0.1}) {
    const double dev = std::abs(weinstein_derivative(1.0, beta, 1e-4) - 9.0);
    k_max = std::max(k_max, dev / beta);
  }
  CHECK(k_max < 100.0);
  CHECK_THROWS_AS(weinstein_derivative(2.2, 0.1, 0.05), std::invalid_argument);
}

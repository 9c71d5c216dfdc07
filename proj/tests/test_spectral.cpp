#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>

#include "oracles.hpp"
#include "slab/profiles.hpp"
#include "slab/random.hpp"
#include "slab/snapshot.hpp"
#include "slab/spectral.hpp"

using namespace slab;

TEST_CASE("grid invariants") {
  const Grid1D g(64, 32.0);
  CHECK(g.dx() * static_cast<double>(g.n()) == g.length());
  // wavenumber antisymmetry except Nyquist
  for (std::size_t m = 1; m < g.n() / 2; ++m)
    CHECK(g.xi(m) == doctest::Approx(-g.xi(g.n() - m)).epsilon(1e-15));
  CHECK_THROWS(Grid1D(48, 10.0));  // not a power of two
  CHECK_THROWS(Grid1D(8, 10.0));   // too small
  CHECK_THROWS(Grid1D(64, -1.0));
}

TEST_CASE("constant field transforms to the zero mode") {
  const Grid1D g(64, 20.0);
  const WaveField one(g, std::vector<double>(g.n(), 1.0));
  const Spectrum F = forward_transform(one);
  CHECK(F.coefficients[0].real() == doctest::Approx(g.length()).epsilon(1e-14));
  for (std::size_t m = 1; m < g.n(); ++m) CHECK(std::abs(F.coefficients[m]) < 1e-12);
}

TEST_CASE("pure cosine occupies exactly two modes") {
  const Grid1D g(128, 50.0);
  std::vector<double> s(g.n());
  for (std::size_t j = 0; j < g.n(); ++j)
    s[j] = std::cos(2.0 * std::numbers::pi * g.x(j) / g.length());
  const Spectrum F = forward_transform(WaveField(g, std::move(s)));
  for (std::size_t m = 0; m < g.n(); ++m) {
    const long k = g.mode(m);
    if (k == 1 || k == -1)
      CHECK(std::abs(F.coefficients[m]) == doctest::Approx(0.5 * g.length()).epsilon(1e-12));
    else
      CHECK(std::abs(F.coefficients[m]) < 1e-10);
  }
}

TEST_CASE("round trip and Parseval on seeded random fields") {
  const Grid1D g(256, 40.0);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(seed);
    std::vector<double> s(g.n());
    for (double& v : s) v = rng.gaussian();
    const WaveField f(g, std::move(s));
    const Spectrum F = forward_transform(f);
    const WaveField back = inverse_transform(F);
    CHECK(sup_distance(f, back) < 1e-12 * std::max(1.0, sup_norm(f)));

    double grid_sq = 0.0;
    for (double v : f.samples) grid_sq += v * v;
    grid_sq *= g.dx();
    double spec_sq = 0.0;
    for (const auto& c : F.coefficients) spec_sq += std::norm(c);
    spec_sq /= g.length();
    CHECK(grid_sq == doctest::Approx(spec_sq).epsilon(1e-12));
  }
}

TEST_CASE("conjugate symmetry for real fields") {
  const Grid1D g(64, 10.0);
  Rng rng(7);
  std::vector<double> s(g.n());
  for (double& v : s) v = rng.gaussian();
  const Spectrum F = forward_transform(WaveField(g, std::move(s)));
  for (std::size_t m = 1; m < g.n() / 2; ++m) {
    const auto a = F.coefficients[m];
    const auto b = std::conj(F.coefficients[g.n() - m]);
    CHECK(std::abs(a - b) < 1e-12 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("non-finite input is rejected") {
  const Grid1D g(16, 1.0);
  std::vector<double> s(g.n(), 0.0);
  s[3] = std::nan("");
  CHECK_THROWS_AS(forward_transform(WaveField(g, std::move(s))), std::invalid_argument);
}

TEST_CASE("derivative of a pure mode") {
  const Grid1D g(128, 30.0);
  const double w = 2.0 * std::numbers::pi / g.length();
  std::vector<double> s(g.n());
  for (std::size_t j = 0; j < g.n(); ++j) s[j] = std::sin(w * g.x(j));
  const WaveField fx = derivative(WaveField(g, std::move(s)), 1);
  double worst = 0.0;
  for (std::size_t j = 0; j < g.n(); ++j)
    worst = std::max(worst, std::abs(fx.samples[j] - w * std::cos(w * g.x(j))));
  CHECK(worst < 1e-10);
}

TEST_CASE("derivative of a constant vanishes") {
  const Grid1D g(64, 10.0);
  const WaveField fx = derivative(WaveField(g, std::vector<double>(g.n(), 3.5)), 1);
  CHECK(sup_norm(fx) < 1e-13);
}

TEST_CASE("third derivative of the c=1 soliton matches the closed form") {
  const Grid1D g(1024, 100.0);
  const WaveField q = kdv_soliton({1.0, 0.0, 0.0}, g);
  const WaveField q3 = derivative(q, 3);
  double worst = 0.0;
  for (std::size_t j = 0; j < g.n(); ++j)
    worst = std::max(worst, std::abs(q3.samples[j] - oracle::q_c_third_derivative(1.0, g.x(j))));
  CHECK(worst < 1e-8);
}

TEST_CASE("product identities") {
  const Grid1D g(64, 12.0);
  Rng rng(3);
  std::vector<double> s(g.n());
  for (double& v : s) v = rng.gaussian();
  const WaveField f(g, std::move(s));
  const WaveField one(g, std::vector<double>(g.n(), 1.0));
  CHECK(sup_distance(product(f, one, Dealias::none), f) == 0.0);

  // sin*sin = (1 - cos(2theta))/2
  const double w = 2.0 * std::numbers::pi / g.length();
  std::vector<double> sn(g.n()), target(g.n());
  for (std::size_t j = 0; j < g.n(); ++j) {
    sn[j] = std::sin(w * g.x(j));
    target[j] = 0.5 * (1.0 - std::cos(2.0 * w * g.x(j)));
  }
  const WaveField sine(g, std::move(sn));
  CHECK(sup_distance(product(sine, sine, Dealias::none), WaveField(g, std::move(target))) <
        1e-12);

  CHECK_THROWS_AS(product(f, WaveField(Grid1D(128, 12.0), std::vector<double>(128, 0.0)),
                          Dealias::none),
                  std::invalid_argument);
}

TEST_CASE("dealiased soliton square matches the closed form") {
  const Grid1D g(1024, 100.0);
  const WaveField q = kdv_soliton({1.0, 0.0, 0.0}, g);
  const WaveField q2 = product(q, q, Dealias::two_thirds);
  double worst = 0.0;
  for (std::size_t j = 0; j < g.n(); ++j) {
    const double exact = oracle::q_c(1.0, g.x(j)) * oracle::q_c(1.0, g.x(j));
    worst = std::max(worst, std::abs(q2.samples[j] - exact));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("dealiased product is symmetric and bilinear") {
  const Grid1D g(256, 30.0);
  const WaveField f = spectral_noise(g, 5, 1.0, 40);
  const WaveField h = spectral_noise(g, 6, 1.0, 40);
  const WaveField fh = product(f, h, Dealias::two_thirds);
  const WaveField hf = product(h, f, Dealias::two_thirds);
  CHECK(sup_distance(fh, hf) < 1e-12);

  const WaveField sum = add(f, h);
  const WaveField lhs = product(sum, h, Dealias::two_thirds);
  const WaveField rhs = add(fh, product(h, h, Dealias::two_thirds));
  CHECK(sup_distance(lhs, rhs) < 1e-12);

  const WaveField scaled_prod = product(scale(f, 2.5), h, Dealias::two_thirds);
  CHECK(sup_distance(scaled_prod, scale(fh, 2.5)) < 1e-12);
}

TEST_CASE("quadrature oracle values for the soliton") {
  // Freeze the oracle values first: integral of Q and Q^2 over the line.
  const double int_q = oracle::integrate([](double s) { return oracle::q_profile(s); }, -60.0,
                                         60.0, 1e-13);
  const double int_q2 = oracle::integrate(
      [](double s) { return oracle::q_profile(s) * oracle::q_profile(s); }, -60.0, 60.0, 1e-13);
  CHECK(int_q == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(int_q2 == doctest::Approx(6.0).epsilon(1e-10));

  const Grid1D g(1024, 100.0);
  const WaveField q = kdv_soliton({1.0, 0.0, 0.0}, g);
  CHECK(integrate(q) == doctest::Approx(6.0).epsilon(1e-8));
  const WaveField q2 = product(q, q, Dealias::none);
  CHECK(integrate(q2) == doctest::Approx(6.0).epsilon(1e-8));
  // Mass (1/2) integral Q^2 = 3
  CHECK(0.5 * integrate(q2) == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(norm_l2(WaveField::zero(g)) == 0.0);
}

TEST_CASE("periodicity: integral of a derivative vanishes") {
  const Grid1D g(256, 25.0);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const WaveField f = spectral_noise(g, seed, 1.0, 100);
    CHECK(std::abs(integrate(derivative(f, 1))) < 1e-12);
  }
}

TEST_CASE("half-line norm is monotone in the cutoff and guarded") {
  const Grid1D g(128, 40.0);
  const WaveField f = spectral_noise(g, 9, 1.0, 30);
  double prev = norm_l2_halfline(f, -20.0);
  for (double x = -18.0; x <= 18.0; x += 2.0) {
    const double cur = norm_l2_halfline(f, x);
    CHECK(cur <= prev + 1e-15);
    prev = cur;
  }
  CHECK(norm_l2_halfline(f, -20.0) == doctest::Approx(norm_l2(f)).epsilon(1e-14));
  CHECK_THROWS_AS(norm_l2_halfline(f, 21.0), std::invalid_argument);
}

TEST_CASE("snapshot round trip") {
  const Grid1D g(64, 15.0);
  WaveField f = spectral_noise(g, 4, 2.0, 20);
  f.time = 3.25;
  const auto path = std::filesystem::temp_directory_path() / "slab_test_snapshot.slab";
  write_snapshot(path, f);
  const WaveField back = read_snapshot(path);
  CHECK(back.grid.n() == g.n());
  CHECK(back.grid.length() == g.length());
  CHECK(back.time == f.time);
  CHECK(back.samples == f.samples);
  std::filesystem::remove(path);
}

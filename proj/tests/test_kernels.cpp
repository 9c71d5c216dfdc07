#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "slab/kernels.hpp"
#include "slab/random.hpp"

using namespace slab;
using kernels::cplx;

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (double& x : v) x = rng.gaussian();
  return v;
}

std::vector<cplx> random_cvec(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<cplx> v(n);
  for (cplx& x : v) x = {rng.gaussian(), rng.gaussian()};
  return v;
}

}  // namespace

TEST_CASE("serial and omp kernels agree bitwise") {
  for (std::size_t n : {std::size_t{1000}, std::size_t{1} << 15}) {
    const auto x = random_vec(n, 11);
    const auto y = random_vec(n, 12);
    std::vector<double> a(n), b(n);
    kernels::serial::mul(x, y, a);
    kernels::omp::mul(x, y, b);
    CHECK(a == b);
    kernels::serial::axpby(1.25, x, -0.5, y, a);
    kernels::omp::axpby(1.25, x, -0.5, y, b);
    CHECK(a == b);

    const auto cx = random_cvec(n, 13);
    const auto cy = random_cvec(n, 14);
    const auto cq = random_cvec(n, 15);
    const auto cn = random_cvec(n, 16);
    std::vector<cplx> ca(n), cb(n);
    kernels::serial::etd_stage(cx, cy, cq, cn, ca);
    kernels::omp::etd_stage(cx, cy, cq, cn, cb);
    CHECK(ca == cb);

    std::vector<cplx> u1 = cy, u2 = cy;
    kernels::serial::etd_final(cx, u1, cq, cn, cq, cn, cx, cq, cn);
    kernels::omp::etd_final(cx, u2, cq, cn, cq, cn, cx, cq, cn);
    CHECK(u1 == u2);

    CHECK(kernels::serial::block_sum(x) == kernels::omp::block_sum(x));
    CHECK(kernels::serial::block_sum_sq(x) == kernels::omp::block_sum_sq(x));
    CHECK(kernels::serial::block_sum_abs(cx) == kernels::omp::block_sum_abs(cx));
    CHECK(kernels::serial::block_sum_sq(cx) == kernels::omp::block_sum_sq(cx));
    CHECK(kernels::serial::max_abs(x) == kernels::omp::max_abs(x));
  }
}

TEST_CASE("blocked reduction is independent of the parallel switch") {
  const auto x = random_vec((std::size_t{1} << 16) + 37, 21);
  kernels::set_parallel_enabled(false);
  const double s_serial = kernels::block_sum(x);
  kernels::set_parallel_enabled(true);
  const double s_parallel = kernels::block_sum(x);
  CHECK(s_serial == s_parallel);
}

TEST_CASE("worker count plumbing") {
  kernels::set_worker_count(3);
  CHECK(kernels::worker_count() == 3);
  kernels::set_worker_count(0);
  CHECK(kernels::worker_count() >= 1);
}

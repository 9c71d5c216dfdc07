#include "slab/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace slab::kernels {

namespace {

std::atomic<int> g_workers{0};       // 0 = not set yet
std::atomic<bool> g_parallel{true};

int env_workers() {
  if (const char* s = std::getenv("SOLITON_LAB_THREADS")) {
    const int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 0;
}

}  // namespace

int worker_count() {
  int w = g_workers.load(std::memory_order_relaxed);
  if (w > 0) return w;
  w = env_workers();
  if (w > 0) return w;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_worker_count(int n) {
  g_workers.store(n > 0 ? n : 0, std::memory_order_relaxed);
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#endif
}

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel_enabled(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

namespace serial {

void mul(std::span<const double> x, std::span<const double> y, std::span<double> out) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

void mul(std::span<const cplx> x, std::span<const cplx> y, std::span<cplx> out) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void etd_stage(std::span<const cplx> e, std::span<const cplx> u, std::span<const cplx> q,
               std::span<const cplx> n, std::span<cplx> out) {
  const std::size_t m = u.size();
  for (std::size_t i = 0; i < m; ++i) out[i] = e[i] * u[i] + q[i] * n[i];
}

void etd_final(std::span<const cplx> e, std::span<cplx> u, std::span<const cplx> f1,
               std::span<const cplx> n1, std::span<const cplx> f2, std::span<const cplx> n2,
               std::span<const cplx> n3, std::span<const cplx> f3, std::span<const cplx> n4) {
  const std::size_t m = u.size();
  for (std::size_t i = 0; i < m; ++i)
    u[i] = e[i] * u[i] + f1[i] * n1[i] + 2.0 * f2[i] * (n2[i] + n3[i]) + f3[i] * n4[i];
}

namespace {

// One reduction block, accumulated in index order.
template <class T, class F>
double block_accumulate(std::span<const T> x, std::size_t b, F&& term) {
  const std::size_t lo = b * reduction_block;
  const std::size_t hi = std::min(x.size(), lo + reduction_block);
  double s = 0.0;
  for (std::size_t i = lo; i < hi; ++i) s += term(x[i]);
  return s;
}

template <class T, class F>
double blocked_reduce_serial(std::span<const T> x, F&& term) {
  const std::size_t nb = (x.size() + reduction_block - 1) / reduction_block;
  double total = 0.0;
  for (std::size_t b = 0; b < nb; ++b) total += block_accumulate(x, b, term);
  return total;
}

}  // namespace

double block_sum(std::span<const double> x) {
  return blocked_reduce_serial(x, [](double v) { return v; });
}
double block_sum_sq(std::span<const double> x) {
  return blocked_reduce_serial(x, [](double v) { return v * v; });
}
double block_sum_abs(std::span<const cplx> x) {
  return blocked_reduce_serial(x, [](cplx v) { return std::abs(v); });
}
double block_sum_sq(std::span<const cplx> x) {
  return blocked_reduce_serial(x, [](cplx v) { return std::norm(v); });
}
double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace serial

namespace omp {

namespace {

template <class T, class F>
double blocked_reduce_parallel(std::span<const T> x, F&& term) {
  const std::size_t nb = (x.size() + reduction_block - 1) / reduction_block;
  std::vector<double> partial(nb);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long b = 0; b < static_cast<long>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * reduction_block;
    const std::size_t hi = std::min(x.size(), lo + reduction_block);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += term(x[i]);
    partial[static_cast<std::size_t>(b)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;  // fixed block order
  return total;
}

}  // namespace

void mul(std::span<const double> x, std::span<const double> y, std::span<double> out) {
  const long n = static_cast<long>(x.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

void mul(std::span<const cplx> x, std::span<const cplx> y, std::span<cplx> out) {
  const long n = static_cast<long>(x.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) {
  const long n = static_cast<long>(x.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void etd_stage(std::span<const cplx> e, std::span<const cplx> u, std::span<const cplx> q,
               std::span<const cplx> n, std::span<cplx> out) {
  const long m = static_cast<long>(u.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long i = 0; i < m; ++i) out[i] = e[i] * u[i] + q[i] * n[i];
}

void etd_final(std::span<const cplx> e, std::span<cplx> u, std::span<const cplx> f1,
               std::span<const cplx> n1, std::span<const cplx> f2, std::span<const cplx> n2,
               std::span<const cplx> n3, std::span<const cplx> f3, std::span<const cplx> n4) {
  const long m = static_cast<long>(u.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long i = 0; i < m; ++i)
    u[i] = e[i] * u[i] + f1[i] * n1[i] + 2.0 * f2[i] * (n2[i] + n3[i]) + f3[i] * n4[i];
}

double block_sum(std::span<const double> x) {
  return blocked_reduce_parallel(x, [](double v) { return v; });
}
double block_sum_sq(std::span<const double> x) {
  return blocked_reduce_parallel(x, [](double v) { return v * v; });
}
double block_sum_abs(std::span<const cplx> x) {
  return blocked_reduce_parallel(x, [](cplx v) { return std::abs(v); });
}
double block_sum_sq(std::span<const cplx> x) {
  return blocked_reduce_parallel(x, [](cplx v) { return std::norm(v); });
}
double max_abs(std::span<const double> x) {
  const std::size_t nb = (x.size() + reduction_block - 1) / reduction_block;
  std::vector<double> partial(nb, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long b = 0; b < static_cast<long>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * reduction_block;
    const std::size_t hi = std::min(x.size(), lo + reduction_block);
    double m = 0.0;
    for (std::size_t i = lo; i < hi; ++i) m = std::max(m, std::abs(x[i]));
    partial[static_cast<std::size_t>(b)] = m;
  }
  double m = 0.0;
  for (double p : partial) m = std::max(m, p);
  return m;
}

}  // namespace omp

namespace {
inline bool go_parallel(std::size_t n) {
  return parallel_enabled() && n >= parallel_threshold && worker_count() > 1;
}
}  // namespace

void mul(std::span<const double> x, std::span<const double> y, std::span<double> out) {
  go_parallel(x.size()) ? omp::mul(x, y, out) : serial::mul(x, y, out);
}
void mul(std::span<const cplx> x, std::span<const cplx> y, std::span<cplx> out) {
  go_parallel(x.size()) ? omp::mul(x, y, out) : serial::mul(x, y, out);
}
void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) {
  go_parallel(x.size()) ? omp::axpby(a, x, b, y, out) : serial::axpby(a, x, b, y, out);
}
void etd_stage(std::span<const cplx> e, std::span<const cplx> u, std::span<const cplx> q,
               std::span<const cplx> n, std::span<cplx> out) {
  go_parallel(u.size()) ? omp::etd_stage(e, u, q, n, out) : serial::etd_stage(e, u, q, n, out);
}
void etd_final(std::span<const cplx> e, std::span<cplx> u, std::span<const cplx> f1,
               std::span<const cplx> n1, std::span<const cplx> f2, std::span<const cplx> n2,
               std::span<const cplx> n3, std::span<const cplx> f3, std::span<const cplx> n4) {
  go_parallel(u.size()) ? omp::etd_final(e, u, f1, n1, f2, n2, n3, f3, n4)
                        : serial::etd_final(e, u, f1, n1, f2, n2, n3, f3, n4);
}
double block_sum(std::span<const double> x) {
  return go_parallel(x.size()) ? omp::block_sum(x) : serial::block_sum(x);
}
double block_sum_sq(std::span<const double> x) {
  return go_parallel(x.size()) ? omp::block_sum_sq(x) : serial::block_sum_sq(x);
}
double block_sum_abs(std::span<const cplx> x) {
  return go_parallel(x.size()) ? omp::block_sum_abs(x) : serial::block_sum_abs(x);
}
double block_sum_sq(std::span<const cplx> x) {
  return go_parallel(x.size()) ? omp::block_sum_sq(x) : serial::block_sum_sq(x);
}
double max_abs(std::span<const double> x) {
  return go_parallel(x.size()) ? omp::max_abs(x) : serial::max_abs(x);
}

}  // namespace slab::kernels

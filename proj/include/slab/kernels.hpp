// Data-parallel primitives shared by every module. Each kernel has a serial
// reference implementation (kernels::serial) and an OpenMP one (kernels::omp);
// the unqualified entry points dispatch at runtime. Reductions accumulate in a
// fixed block order, so both paths return bitwise-identical results for any
// thread count.
#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace slab::kernels {

using cplx = std::complex<double>;

// Worker count: --threads flag > SOLITON_LAB_THREADS env > OpenMP default.
int worker_count();
void set_worker_count(int n);

// Loops shorter than this stay serial; OpenMP overhead dominates below it.
inline constexpr std::size_t parallel_threshold = 1u << 14;

// Fixed reduction block size (independent of thread count).
inline constexpr std::size_t reduction_block = 4096;

bool parallel_enabled();
void set_parallel_enabled(bool on);

namespace serial {
void mul(std::span<const double> x, std::span<const double> y, std::span<double> out);
void mul(std::span<const cplx> x, std::span<const cplx> y, std::span<cplx> out);
void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out);
// out = e*u + q*n (ETD stage update)
void etd_stage(std::span<const cplx> e, std::span<const cplx> u, std::span<const cplx> q,
               std::span<const cplx> n, std::span<cplx> out);
// u = e*u + f1*n1 + 2*f2*(n2+n3) + f3*n4
void etd_final(std::span<const cplx> e, std::span<cplx> u, std::span<const cplx> f1,
               std::span<const cplx> n1, std::span<const cplx> f2, std::span<const cplx> n2,
               std::span<const cplx> n3, std::span<const cplx> f3, std::span<const cplx> n4);
double block_sum(std::span<const double> x);
double block_sum_sq(std::span<const double> x);
double block_sum_abs(std::span<const cplx> x);
double block_sum_sq(std::span<const cplx> x);
double max_abs(std::span<const double> x);
}  // namespace serial

namespace omp {
void mul(std::span<const double> x, std::span<const double> y, std::span<double> out);
void mul(std::span<const cplx> x, std::span<const cplx> y, std::span<cplx> out);
void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out);
void etd_stage(std::span<const cplx> e, std::span<const cplx> u, std::span<const cplx> q,
               std::span<const cplx> n, std::span<cplx> out);
void etd_final(std::span<const cplx> e, std::span<cplx> u, std::span<const cplx> f1,
               std::span<const cplx> n1, std::span<const cplx> f2, std::span<const cplx> n2,
               std::span<const cplx> n3, std::span<const cplx> f3, std::span<const cplx> n4);
double block_sum(std::span<const double> x);
double block_sum_sq(std::span<const double> x);
double block_sum_abs(std::span<const cplx> x);
double block_sum_sq(std::span<const cplx> x);
double max_abs(std::span<const double> x);
}  // namespace omp

// Dispatching entry points.
void mul(std::span<const double> x, std::span<const double> y, std::span<double> out);
void mul(std::span<const cplx> x, std::span<const cplx> y, std::span<cplx> out);
void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out);
void etd_stage(std::span<const cplx> e, std::span<const cplx> u, std::span<const cplx> q,
               std::span<const cplx> n, std::span<cplx> out);
void etd_final(std::span<const cplx> e, std::span<cplx> u, std::span<const cplx> f1,
               std::span<const cplx> n1, std::span<const cplx> f2, std::span<const cplx> n2,
               std::span<const cplx> n3, std::span<const cplx> f3, std::span<const cplx> n4);
double block_sum(std::span<const double> x);
double block_sum_sq(std::span<const double> x);
double block_sum_abs(std::span<const cplx> x);
double block_sum_sq(std::span<const cplx> x);
double max_abs(std::span<const double> x);

}  // namespace slab::kernels

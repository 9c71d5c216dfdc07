// Iterative radix-2 complex FFT for power-of-two sizes. A plan holds the
// bit-reversal permutation and twiddle table for one size; plans are immutable
// after construction and safe to share across workers.
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace slab {

class FftPlan {
 public:
  explicit FftPlan(std::size_t n);

  std::size_t size() const { return n_; }

  // Unnormalized transforms: forward computes X_k = sum_j x_j w^{-jk},
  // inverse computes Y_j = sum_k X_k w^{+jk} (= n * x_j after a round trip).
  void forward(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out) const;
  void inverse(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out) const;

 private:
  void execute(std::span<const std::complex<double>> in, std::span<std::complex<double>> out,
               bool inverse) const;

  std::size_t n_;
  std::size_t log2n_;
  std::vector<std::size_t> bitrev_;
  std::vector<std::complex<double>> twiddle_;  // w^{-j} = exp(-2*pi*i*j/n), j < n/2
};

}  // namespace slab

#include "slab/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace slab {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t ilog2(std::size_t n) {
  std::size_t l = 0;
  while ((std::size_t{1} << l) < n) ++l;
  return l;
}

}  // namespace

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("FftPlan: size must be a power of two");
  log2n_ = ilog2(n);
  bitrev_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < log2n_; ++b)
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (log2n_ - 1 - b);
    bitrev_[i] = r;
  }
  twiddle_.resize(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double a = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    twiddle_[j] = {std::cos(a), std::sin(a)};
  }
}

void FftPlan::execute(std::span<const std::complex<double>> in,
                      std::span<std::complex<double>> out, bool inverse) const {
  if (in.size() != n_ || out.size() != n_) throw std::invalid_argument("FftPlan: size mismatch");
  for (std::size_t i = 0; i < n_; ++i) out[bitrev_[i]] = in[i];
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t stride = n_ / len;  // twiddle stride for this stage
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        std::complex<double> w = twiddle_[j * stride];
        if (inverse) w = std::conj(w);
        const std::complex<double> u = out[start + j];
        const std::complex<double> v = out[start + j + half] * w;
        out[start + j] = u + v;
        out[start + j + half] = u - v;
      }
    }
  }
}

void FftPlan::forward(std::span<const std::complex<double>> in,
                      std::span<std::complex<double>> out) const {
  execute(in, out, false);
}

void FftPlan::inverse(std::span<const std::complex<double>> in,
                      std::span<std::complex<double>> out) const {
  execute(in, out, true);
}

}  // namespace slab

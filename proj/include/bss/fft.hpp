// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bss {

std::size_t next_pow2(std::size_t n);

// In-place radix-2 FFT; size must be a power of two.
void fft(std::vector<std::complex<double>>& a, bool inverse);

// Frequency-domain linear convolution against a fixed kernel. Caches the
// kernel spectrum and twiddle table; apply() is safe to call from multiple
// threads on one shared plan.
class ConvolutionPlan {
 public:
  ConvolutionPlan(std::span<const double> kernel, std::size_t max_signal_len);

  // Writes full-convolution values at positions [pos0, pos0 + out.size()).
  void apply(std::span<const double> signal, std::size_t pos0,
             std::span<double> out) const;
  // Two signals against the same kernel for the price of one transform pair.
  void apply_pair(std::span<const double> s1, std::span<const double> s2,
                  std::size_t pos0, std::span<double> out1,
                  std::span<double> out2) const;

  std::size_t fft_len() const { return fft_len_; }

 private:
  std::size_t kernel_len_ = 0;
  std::size_t fft_len_ = 0;
  std::vector<std::complex<double>> kernel_fft_;
  std::vector<std::complex<double>> twiddle_;  // e^{-2 pi i k / N}, k < N/2
};

// O(n m) reference used by tests and the benchmark.
std::vector<double> convolve_direct(std::span<const double> a,
                                    std::span<const double> b);

}  // namespace bss

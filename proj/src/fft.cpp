// SPDX-License-Identifier: Apache-2.0
#include "bss/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace bss {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

void bit_reverse(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

// butterflies with a precomputed half-size twiddle table
void fft_with_table(std::vector<std::complex<double>>& a,
                    const std::vector<std::complex<double>>& table, bool inverse) {
  const std::size_t n = a.size();
  bit_reverse(a);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> w = table[j * stride];
        if (inverse) w = std::conj(w);
        const std::complex<double> u = a[i + j];
        const std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv_n;
  }
}

std::vector<std::complex<double>> make_table(std::size_t n) {
  std::vector<std::complex<double>> table(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double ang = -kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    table[k] = {std::cos(ang), std::sin(ang)};
  }
  return table;
}

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft: size must be a power of two");
  if (n == 1) return;
  fft_with_table(a, make_table(n), inverse);
}

ConvolutionPlan::ConvolutionPlan(std::span<const double> kernel,
                                 std::size_t max_signal_len)
    : kernel_len_(kernel.size()) {
  if (kernel.empty()) throw std::invalid_argument("ConvolutionPlan: empty kernel");
  fft_len_ = next_pow2(kernel_len_ + max_signal_len - 1);
  twiddle_ = make_table(fft_len_);
  kernel_fft_.assign(fft_len_, {0.0, 0.0});
  for (std::size_t i = 0; i < kernel_len_; ++i) kernel_fft_[i] = kernel[i];
  fft_with_table(kernel_fft_, twiddle_, false);
}

void ConvolutionPlan::apply(std::span<const double> signal, std::size_t pos0,
                            std::span<double> out) const {
  std::vector<std::complex<double>> buf(fft_len_, {0.0, 0.0});
  for (std::size_t i = 0; i < signal.size(); ++i) buf[i] = signal[i];
  fft_with_table(buf, twiddle_, false);
  for (std::size_t i = 0; i < fft_len_; ++i) buf[i] *= kernel_fft_[i];
  fft_with_table(buf, twiddle_, true);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = buf[pos0 + i].real();
}

void ConvolutionPlan::apply_pair(std::span<const double> s1,
                                 std::span<const double> s2, std::size_t pos0,
                                 std::span<double> out1,
                                 std::span<double> out2) const {
  if (s1.size() != s2.size() || out1.size() != out2.size())
    throw std::invalid_argument("apply_pair: mismatched spans");
  // pack the two real signals as one complex signal; the two real
  // convolutions come back as real and imaginary parts
  std::vector<std::complex<double>> buf(fft_len_, {0.0, 0.0});
  for (std::size_t i = 0; i < s1.size(); ++i) buf[i] = {s1[i], s2[i]};
  fft_with_table(buf, twiddle_, false);
  for (std::size_t i = 0; i < fft_len_; ++i) buf[i] *= kernel_fft_[i];
  fft_with_table(buf, twiddle_, true);
  for (std::size_t i = 0; i < out1.size(); ++i) {
    out1[i] = buf[pos0 + i].real();
    out2[i] = buf[pos0 + i].imag();
  }
}

std::vector<double> convolve_direct(std::span<const double> a,
                                    std::span<const double> b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("convolve_direct: empty input");
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += ai * b[j];
  }
  return out;
}

}  // namespace bss

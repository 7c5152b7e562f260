// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bss/kernel.hpp"
#include "bss/quad.hpp"
#include "bss/sample_path.hpp"

namespace bss {

// Grid geometry for the hybrid scheme. Steps are indexed so that the sigma
// sample runs over time indices -big_n .. n*t_end, length steps() + 1.
struct HybridConfig {
  std::size_t big_n = 0;   // Riemann-sum terms; at least n
  std::size_t n = 0;       // observations per unit time
  double t_end = 1.0;
  std::size_t kappa = 3;   // lower-sum terms

  std::size_t observations() const;          // n * t_end, rounded
  std::size_t steps() const;                 // big_n + observations()
  double delta() const { return 1.0 / static_cast<double>(n); }
  void validate() const;
};

// sigma_t = exp(beta v_t), dv = -theta v dt + dB
struct VolatilityConfig {
  double theta = 2.0;
  double beta = 0.125;
  void validate() const;

  double stationary_second_moment() const;  // E[sigma_0^2] = exp(beta^2/theta)
};

struct SimulationOutput {
  SamplePath core;  // Gaussian core (sigma == 1 on the same draws)
  SamplePath bss;
  SamplePath vol;
};

// Covariance of the per-step Gaussian vector (dW, V_1, ..., V_kappa), where
// V_k = int_0^delta (k delta - u)^alpha dW_u. Row-major (kappa+1)^2.
std::vector<double> hybrid_cov_matrix(std::size_t kappa, std::size_t n,
                                      double alpha, const QuadratureSpec& q = {});

// Factor B with B B^T = m after symmetrisation and clamping of eigenvalue
// leakage below -1e-12 * scale; larger violations raise numeric_error.
std::vector<double> cov_factor(std::vector<double> m, std::size_t dim);

// Minimum-MSE Riemann evaluation point b_k (in step units), k >= 1.
double riemann_eval_point(std::size_t k, double alpha);

// Euler scheme for the volatility, initialised from the stationary law
// N(0, 1/(2 theta)); returns sigma on indices -big_n .. n*t_end.
std::vector<double> simulate_volatility(const VolatilityConfig& vc,
                                        const HybridConfig& hc,
                                        std::uint64_t seed);

// Hybrid scheme. sigma must have length steps() + 1 and be strictly positive.
// The core path reuses the same Brownian draws with sigma == 1.
SimulationOutput simulate_bss(const HybridConfig& hc, const KernelSpec& k,
                              std::span<const double> sigma, std::uint64_t seed);

// Direct-summation serial reference; identical draws, same contract.
SimulationOutput simulate_bss_reference(const HybridConfig& hc,
                                        const KernelSpec& k,
                                        std::span<const double> sigma,
                                        std::uint64_t seed);

// Left Riemann sum  delta * sum_{i=0..floor(t/delta)} |sigma_i|^p.
double integrated_vol_oracle(const SamplePath& sigma, double p, double t);

}  // namespace bss

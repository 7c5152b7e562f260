// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

#include "bss/quad.hpp"

namespace bss {

enum class KernelFamily { gamma, power };

// Parametric kernel family for the moving-average representation.
//   gamma: g(x) = x^alpha exp(-decay x),        decay = lambda > 0
//   power: g(x) = x^alpha (1 + x)^(decay-alpha), decay = beta < -1/2
// alpha in (-1/2, 0) u (0, 1/2) in both cases; g(x) = 0 for x <= 0.
struct KernelSpec {
  KernelFamily family = KernelFamily::gamma;
  double alpha = 0.0;
  double decay = 1.0;

  static KernelSpec gamma_kernel(double alpha, double lambda);
  static KernelSpec power_kernel(double alpha, double beta);
  void validate() const;
};

double eval_kernel(const KernelSpec& k, double x);
// L_g(x) = g(x) / x^alpha; finite at x = 0.
double slowly_varying_part(const KernelSpec& k, double x);

// gamma_X(h) = int_0^inf g(x) g(x+h) dx. Closed forms for the gamma kernel
// (Bessel K) and for the power kernel at h = 0 (beta function); quadrature
// otherwise.
double autocovariance(const KernelSpec& k, double h, const QuadratureSpec& q = {});
double autocorrelation(const KernelSpec& k, double h, const QuadratureSpec& q = {});
// R(t) = E[(X_t - X_0)^2] = 2 gamma(0) - 2 gamma(t)
double variogram(const KernelSpec& k, double t, const QuadratureSpec& q = {});

// Exact scale factor tau_n for the gamma kernel at grid spacing delta.
double scale_factor_exact(const KernelSpec& k, double delta);
// Small-delta approximation; depends on alpha only.
double scale_factor_asymptotic(double alpha, double delta);
// sqrt(R(delta)) for any kernel via quadrature.
double scale_factor_quadrature(const KernelSpec& k, double delta,
                               const QuadratureSpec& q = {});

// {"kernel":"gamma","alpha":...,"lambda":...} / {"kernel":"power","alpha":...,"beta":...}
nlohmann::json kernel_to_json(const KernelSpec& k);
KernelSpec kernel_from_json(const nlohmann::json& j);

}  // namespace bss

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace bss {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;

  void validate() const;
};

// Adaptive Gauss-Kronrod (G7/K15) on [a, b], worst-interval-first refinement.
// Nodes are interior, so integrable endpoint singularities x^alpha, alpha > -1,
// are handled by subdivision alone.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

// [a, +inf) via the substitution x = a + t/(1-t).
double integrate_to_inf(const std::function<double(double)>& f, double a,
                        const QuadratureSpec& spec = {});

}  // namespace bss

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace bss {

// A numerical routine (quadrature, eigensolve, ...) failed to converge.
// Carries the best estimate obtained before giving up.
class numeric_error : public std::runtime_error {
 public:
  numeric_error(const std::string& what, double partial)
      : std::runtime_error(what), partial_(partial) {}
  double partial() const noexcept { return partial_; }

 private:
  double partial_ = 0.0;
};

// Model fitting / estimation failed. Carries the best-so-far parameters.
class fit_error : public std::runtime_error {
 public:
  explicit fit_error(const std::string& what, double alpha = 0.0,
                     double decay = 0.0, double mse = 0.0)
      : std::runtime_error(what), alpha_(alpha), decay_(decay), mse_(mse) {}
  double alpha() const noexcept { return alpha_; }
  double decay() const noexcept { return decay_; }
  double mse() const noexcept { return mse_; }

 private:
  double alpha_, decay_, mse_;
};

}  // namespace bss

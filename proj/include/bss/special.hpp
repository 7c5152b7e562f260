// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace bss {

/// Gamma function for real non-pole arguments (Lanczos approximation,
/// reflection for x < 1/2). Throws std::domain_error at non-positive integers.
double gamma_fn(double x);

/// Modified Bessel function of the third kind K_nu(x), x > 0.
/// Series for small x, asymptotic expansion for large x, numeric integral
/// representation in the crossover and near integer order.
double bessel_k(double nu, double x);

/// K-bar: x^nu * K_nu(x). Computed so the x -> 0+ limit 2^(nu-1) Gamma(nu)
/// is reached without under/overflow.
double bessel_k_bar(double nu, double x);

/// Probabilists' Hermite polynomial H_l(x): H_0 = 1, H_1 = x,
/// H_{l+1}(x) = x H_l(x) - l H_{l-1}(x).
double hermite(int l, double x);

/// H_l(0): zero for odd l, (-1)^(l/2) (l-1)!! for even l.
double hermite_number(int l);

/// k!! with (-1)!! = 0!! = 1. Throws std::domain_error for k < -1.
long long double_factorial(long long k);

}  // namespace bss

// SPDX-License-Identifier: Apache-2.0
#include "bss/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bss/quad.hpp"

namespace bss {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos, g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double gamma_positive(double x) {
  // valid for x >= 0.5
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma_fn(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw std::domain_error("gamma_fn: pole at non-positive integer");
  if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma_positive(1.0 - x));
  return gamma_positive(x);
}

namespace {

// I_nu power series with the (x/2)^nu prefactor replaced by `front`, so the
// caller can fold x^nu factors in analytically.
double bessel_i_series(double nu, double x, double front) {
  const double q = 0.25 * x * x;
  double term = front / gamma_fn(1.0 + nu);
  double sum = term;
  for (int m = 1; m < 400; ++m) {
    term *= q / (m * (m + nu));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// K_nu for 0 < nu < 2 away from integers, x <= 2:
//   K_nu = pi/2 (I_{-nu} - I_nu) / sin(pi nu)
double bessel_k_series(double nu, double x) {
  const double half = std::pow(0.5 * x, nu);
  const double i_neg = bessel_i_series(-nu, x, 1.0 / half);
  const double i_pos = bessel_i_series(nu, x, half);
  return 0.5 * kPi * (i_neg - i_pos) / std::sin(kPi * nu);
}

// Same series arranged for x^nu K_nu(x); stable as x -> 0+.
double bessel_k_bar_series(double nu, double x) {
  const double i_neg = bessel_i_series(-nu, x, std::pow(2.0, nu));
  const double i_pos =
      bessel_i_series(nu, x, std::pow(x, 2.0 * nu) * std::pow(2.0, -nu));
  return 0.5 * kPi * (i_neg - i_pos) / std::sin(kPi * nu);
}

// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.
double bessel_k_integral(double nu, double x) {
  const double t_cut = std::acosh(1.0 + 160.0 / x);
  QuadratureSpec tight{1e-13, 1e-300, 4000};
  return integrate(
      [nu, x](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); },
      0.0, t_cut, tight);
}

// Large-x asymptotic series; truncation error ~ exp(-2x), use for x >= 18.
double bessel_k_asymptotic(double nu, double x) {
  const double fournu2 = 4.0 * nu * nu;
  double term = 1.0, sum = 1.0;
  double prev = std::numeric_limits<double>::max();
  for (int k = 1; k <= 40; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (fournu2 - odd * odd) / (8.0 * k * x);
    if (std::abs(term) >= prev) break;  // series started diverging
    sum += term;
    prev = std::abs(term);
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) * sum;
}

bool near_integer(double nu) { return std::abs(nu - std::round(nu)) < 1e-3; }

// base case for 0 <= nu < 2
double bessel_k_base(double nu, double x) {
  if (x >= 18.0) return bessel_k_asymptotic(nu, x);
  if (x <= 2.0 && !near_integer(nu)) return bessel_k_series(nu, x);
  return bessel_k_integral(nu, x);
}

}  // namespace

double bessel_k(double nu, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_k: requires x > 0");
  nu = std::abs(nu);  // K_{-nu} = K_nu
  if (nu < 2.0) return bessel_k_base(nu, x);
  // upward recurrence K_{mu+1} from (K_{mu-1}, K_mu); stable for K
  const int steps = static_cast<int>(std::floor(nu)) - 1;
  const double mu = nu - steps - 1.0;  // in [0, 1)
  double k_prev = bessel_k_base(mu, x);
  double k_cur = bessel_k_base(mu + 1.0, x);
  for (int j = 0; j < steps; ++j) {
    const double k_next = k_prev + 2.0 * (mu + 1.0 + j) / x * k_cur;
    k_prev = k_cur;
    k_cur = k_next;
  }
  return k_cur;
}

double bessel_k_bar(double nu, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_k_bar: requires x > 0");
  if (nu > 0.0 && nu < 2.0 && x <= 2.0 && !near_integer(nu))
    return bessel_k_bar_series(nu, x);
  return std::pow(x, nu) * bessel_k(nu, x);
}

double hermite(int l, double x) {
  if (l < 0) throw std::domain_error("hermite: order must be >= 0");
  if (l == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int k = 1; k < l; ++k) {
    const double next = x * cur - k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_number(int l) {
  if (l < 0) throw std::domain_error("hermite_number: order must be >= 0");
  if (l % 2 == 1) return 0.0;
  const double sign = (l / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * static_cast<double>(double_factorial(l - 1));
}

long long double_factorial(long long k) {
  if (k < -1) throw std::domain_error("double_factorial: requires k >= -1");
  long long acc = 1;
  for (long long v = k; v > 1; v -= 2) acc *= v;
  return acc;
}

}  // namespace bss

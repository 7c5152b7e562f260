// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "bss/quad.hpp"
#include "bss/special.hpp"

using bss::bessel_k;
using bss::bessel_k_bar;
using bss::double_factorial;
using bss::gamma_fn;
using bss::hermite;
using bss::hermite_number;

namespace {
constexpr double kPi = 3.14159265358979323846;
double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}
}  // namespace

TEST_CASE("gamma at known points") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rel_err(gamma_fn(0.5), std::sqrt(kPi)) < 1e-13);
  // independent quadrature oracle: int_0^inf t^{-0.4} e^{-t} dt
  const double oracle = bss::integrate_to_inf(
      [](double t) { return std::pow(t, -0.4) * std::exp(-t); }, 0.0);
  CHECK(rel_err(gamma_fn(0.6), oracle) < 1e-9);
  CHECK(rel_err(gamma_fn(0.6), 1.4891922488128171) < 1e-12);
  // reflection: Gamma(-0.5) = -2 sqrt(pi)
  CHECK(rel_err(gamma_fn(-0.5), -2.0 * std::sqrt(kPi)) < 1e-12);
}

TEST_CASE("gamma recurrence property") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng);
    CHECK(rel_err(gamma_fn(x + 1.0), x * gamma_fn(x)) < 1e-12);
  }
}

TEST_CASE("gamma poles raise domain errors") {
  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-3.0), std::domain_error);
}

TEST_CASE("bessel k-bar half-integer closed form") {
  // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}, so Kbar_{1/2}(1) = sqrt(pi/2) e^{-1}
  const double want = std::sqrt(kPi / 2.0) * std::exp(-1.0);
  CHECK(rel_err(bessel_k_bar(0.5, 1.0), want) < 1e-12);
  CHECK(rel_err(bessel_k_bar(0.5, 1.0), 0.46106850444789456) < 1e-12);
}

TEST_CASE("bessel k-bar small-x limit") {
  // Kbar_nu(x) -> 2^{nu-1} Gamma(nu) as x -> 0+
  const double limit = std::pow(2.0, -0.5) * gamma_fn(0.5);
  CHECK(rel_err(bessel_k_bar(0.5, 1e-8), limit) < 1e-7);
  const double limit03 = std::pow(2.0, 0.3 - 1.0) * gamma_fn(0.3);
  CHECK(rel_err(bessel_k_bar(0.3, 1e-10), limit03) < 1e-5);
}

TEST_CASE("bessel k against quadrature of the integral representation") {
  // K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt, evaluated independently
  auto oracle = [](double nu, double x) {
    return bss::integrate(
        [nu, x](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); },
        0.0, 12.0, {1e-12, 1e-16, 4000});
  };
  CHECK(rel_err(bessel_k(0.3, 2.0), oracle(0.3, 2.0)) < 1e-10);
  CHECK(rel_err(bessel_k(0.3, 2.0), 0.11603697434811926) < 1e-11);
  CHECK(rel_err(bessel_k_bar(0.3, 2.0), 0.14285827271013438) < 1e-11);
  CHECK(rel_err(bessel_k(0.9, 0.7), oracle(0.9, 0.7)) < 1e-10);
  CHECK(rel_err(bessel_k(0.1, 21.0), oracle(0.1, 21.0)) < 1e-10);
}

TEST_CASE("bessel k against the standard library") {
  for (double nu : {0.1, 0.3, 0.5, 0.7, 0.9, 1.3, 2.6}) {
    for (double x : {0.05, 0.5, 1.0, 2.0, 3.0, 7.0, 12.0, 25.0}) {
      CHECK(rel_err(bessel_k(nu, x), std::cyl_bessel_k(nu, x)) < 5e-11);
    }
  }
}

TEST_CASE("bessel k domain") {
  CHECK_THROWS_AS(bessel_k(0.3, 0.0), std::domain_error);
  CHECK_THROWS_AS(bessel_k_bar(0.3, -1.0), std::domain_error);
}

TEST_CASE("hermite polynomials match explicit forms") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 20; ++i) {
    const double x = u(rng);
    CHECK(hermite(0, x) == 1.0);
    CHECK(hermite(1, x) == x);
    CHECK(rel_err(hermite(2, x), x * x - 1.0) < 1e-13);
    CHECK(rel_err(hermite(3, x), x * x * x - 3.0 * x) < 1e-12);
    CHECK(rel_err(hermite(4, x), std::pow(x, 4) - 6.0 * x * x + 3.0) < 1e-12);
    CHECK(rel_err(hermite(5, x), std::pow(x, 5) - 10.0 * std::pow(x, 3) + 15.0 * x) <
          1e-12);
  }
}

TEST_CASE("hermite orthogonality by quadrature") {
  // <H_m, H_n> = sqrt(2 pi) n! delta_mn under weight exp(-x^2/2)
  for (int m = 0; m <= 8; ++m) {
    for (int n = m; n <= 8; ++n) {
      const double v = bss::integrate(
          [m, n](double x) {
            return hermite(m, x) * hermite(n, x) * std::exp(-0.5 * x * x);
          },
          -14.0, 14.0, {1e-10, 1e-7, 4000});
      double want = 0.0;
      if (m == n) {
        want = std::sqrt(2.0 * kPi);
        for (int k = 2; k <= n; ++k) want *= k;
      }
      CHECK(std::abs(v - want) < 1e-7 * (1.0 + std::abs(want)));
    }
  }
}

TEST_CASE("hermite numbers") {
  CHECK(hermite_number(0) == 1.0);
  CHECK(hermite_number(1) == 0.0);
  CHECK(hermite_number(4) == 3.0);          // x^4 - 6x^2 + 3 at 0
  CHECK(hermite_number(4) == hermite(4, 0.0));
  for (int l = 0; l <= 16; l += 2) CHECK(hermite_number(l) == hermite(l, 0.0));
}

TEST_CASE("double factorial conventions") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(6) == 48);
  CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
}

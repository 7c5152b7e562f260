// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bss/stats.hpp"

TEST_CASE("normal quantile") {
  CHECK(std::abs(bss::normal_quantile(0.975) - 1.959963984540054) < 1e-9);
  CHECK(std::abs(bss::normal_quantile(0.5)) < 1e-12);
  for (double p : {0.001, 0.01, 0.2, 0.7, 0.99, 0.9999}) {
    CHECK(std::abs(bss::normal_cdf(bss::normal_quantile(p)) - p) < 1e-12);
  }
  CHECK_THROWS_AS(bss::normal_quantile(0.0), std::invalid_argument);
}

TEST_CASE("basic moments and median") {
  std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  CHECK(bss::mean(v) == doctest::Approx(2.5));
  CHECK(bss::sample_variance(v) == doctest::Approx(5.0 / 3.0));
  CHECK(bss::median(v) == doctest::Approx(2.5));
  std::vector<double> w{5.0, 1.0, 3.0};
  CHECK(bss::median(w) == doctest::Approx(3.0));
}

TEST_CASE("ols slope on an exact line") {
  std::vector<double> x{0.0, 1.0, 2.0, 3.0};
  std::vector<double> y{1.0, 3.0, 5.0, 7.0};
  CHECK(bss::ols_slope(x, y) == doctest::Approx(2.0));
}

TEST_CASE("ks distance separates normal-like from shifted samples") {
  // quantile grid of N(0,1): the best possible agreement for n points
  std::vector<double> q;
  const int n = 200;
  for (int i = 1; i <= n; ++i)
    q.push_back(bss::normal_quantile((i - 0.5) / static_cast<double>(n)));
  CHECK(bss::ks_distance_normal(q) < 0.01);
  for (auto& v : q) v += 1.0;
  CHECK(bss::ks_distance_normal(q) > 0.3);
}

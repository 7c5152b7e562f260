// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <utility>
#include <vector>

namespace bss {

double mean(std::span<const double> x);
double sample_variance(std::span<const double> x);  // 1/(n-1) normalisation
double sample_sd(std::span<const double> x);
double median(std::span<const double> x);

double normal_cdf(double x);
// Inverse standard normal CDF, p in (0, 1).
double normal_quantile(double p);

// Least-squares slope of y on x.
double ols_slope(std::span<const double> x, std::span<const double> y);

// Kolmogorov-Smirnov distance between the empirical CDF and N(0,1).
double ks_distance_normal(std::vector<double> samples);

}  // namespace bss

// SPDX-License-Identifier: Apache-2.0
#include "bss/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bss/errors.hpp"
#include "bss/fft.hpp"
#include "bss/rng.hpp"

namespace bss {

std::size_t HybridConfig::observations() const {
  return static_cast<std::size_t>(
      std::llround(static_cast<double>(n) * t_end));
}

std::size_t HybridConfig::steps() const { return big_n + observations(); }

void HybridConfig::validate() const {
  if (n < 1) throw std::invalid_argument("HybridConfig: n must be >= 1");
  if (big_n < n) throw std::invalid_argument("HybridConfig: big_n must be >= n");
  if (kappa < 1) throw std::invalid_argument("HybridConfig: kappa must be >= 1");
  if (kappa > big_n)
    throw std::invalid_argument("HybridConfig: kappa must be <= big_n");
  if (!(t_end > 0.0)) throw std::invalid_argument("HybridConfig: t_end must be > 0");
  if (observations() < 1)
    throw std::invalid_argument("HybridConfig: n * t_end rounds to zero");
}

void VolatilityConfig::validate() const {
  if (!(theta > 0.0))
    throw std::invalid_argument("VolatilityConfig: theta must be > 0");
}

double VolatilityConfig::stationary_second_moment() const {
  return std::exp(beta * beta / theta);
}

std::vector<double> hybrid_cov_matrix(std::size_t kappa, std::size_t n,
                                      double alpha, const QuadratureSpec& q) {
  if (kappa < 1 || n < 1)
    throw std::invalid_argument("hybrid_cov_matrix: kappa and n must be >= 1");
  if (!(alpha > -0.5 && alpha < 0.5))
    throw std::invalid_argument("hybrid_cov_matrix: alpha must be in (-1/2,1/2)");
  const std::size_t dim = kappa + 1;
  const double d = 1.0 / static_cast<double>(n);
  std::vector<double> m(dim * dim, 0.0);
  m[0] = d;
  for (std::size_t k = 1; k <= kappa; ++k) {
    const double kd = static_cast<double>(k) * d;
    const double km1d = static_cast<double>(k - 1) * d;
    m[k] = (std::pow(kd, alpha + 1.0) - std::pow(km1d, alpha + 1.0)) / (alpha + 1.0);
    m[k * dim] = m[k];
    m[k * dim + k] = (std::pow(kd, 2.0 * alpha + 1.0) -
                      std::pow(km1d, 2.0 * alpha + 1.0)) /
                     (2.0 * alpha + 1.0);
  }
  for (std::size_t j = 1; j <= kappa; ++j) {
    for (std::size_t k = j + 1; k <= kappa; ++k) {
      const double jd = static_cast<double>(j) * d;
      const double kd = static_cast<double>(k) * d;
      const double v = integrate(
          [jd, kd, alpha](double u) {
            return std::pow((jd - u) * (kd - u), alpha);
          },
          0.0, d, q);
      m[j * dim + k] = v;
      m[k * dim + j] = v;
    }
  }
  return m;
}

namespace {

// classic Jacobi sweeps; dim stays tiny (kappa + 1)
void jacobi_eigen(std::vector<double>& a, std::size_t dim,
                  std::vector<double>& values, std::vector<double>& vectors) {
  vectors.assign(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) vectors[i * dim + i] = 1.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    scale = std::max(scale, std::abs(a[i * dim + i]));
  if (scale == 0.0) scale = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t r = p + 1; r < dim; ++r) off += std::abs(a[p * dim + r]);
    if (off < 1e-15 * scale) break;
    for (std::size_t p = 0; p < dim; ++p) {
      for (std::size_t r = p + 1; r < dim; ++r) {
        const double apq = a[p * dim + r];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = 0.5 * (a[r * dim + r] - a[p * dim + p]) / apq;
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t i = 0; i < dim; ++i) {
          const double aip = a[i * dim + p];
          const double air = a[i * dim + r];
          a[i * dim + p] = c * aip - s * air;
          a[i * dim + r] = s * aip + c * air;
        }
        for (std::size_t i = 0; i < dim; ++i) {
          const double api = a[p * dim + i];
          const double ari = a[r * dim + i];
          a[p * dim + i] = c * api - s * ari;
          a[r * dim + i] = s * api + c * ari;
        }
        for (std::size_t i = 0; i < dim; ++i) {
          const double vip = vectors[i * dim + p];
          const double vir = vectors[i * dim + r];
          vectors[i * dim + p] = c * vip - s * vir;
          vectors[i * dim + r] = s * vip + c * vir;
        }
      }
    }
  }
  values.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) values[i] = a[i * dim + i];
}

}  // namespace

std::vector<double> cov_factor(std::vector<double> m, std::size_t dim) {
  if (m.size() != dim * dim)
    throw std::invalid_argument("cov_factor: size mismatch");
  // symmetrise quadrature noise away first
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      const double v = 0.5 * (m[i * dim + j] + m[j * dim + i]);
      m[i * dim + j] = v;
      m[j * dim + i] = v;
    }
  double scale = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    scale = std::max(scale, std::abs(m[i * dim + i]));
  if (scale == 0.0) scale = 1.0;

  std::vector<double> values, vectors;
  jacobi_eigen(m, dim, values, vectors);
  std::vector<double> b(dim * dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    double lam = values[j];
    if (lam < -1e-12 * scale)
      throw numeric_error("cov_factor: matrix is not positive semi-definite", lam);
    lam = std::max(0.0, lam);
    const double root = std::sqrt(lam);
    for (std::size_t i = 0; i < dim; ++i) b[i * dim + j] = vectors[i * dim + j] * root;
  }
  return b;
}

double riemann_eval_point(std::size_t k, double alpha) {
  if (k < 1) throw std::invalid_argument("riemann_eval_point: k must be >= 1");
  const double kk = static_cast<double>(k);
  if (alpha == 0.0) {
    // limit of the general expression as alpha -> 0
    const double lead = (k == 1) ? 0.0 : (kk - 1.0) * std::log(kk - 1.0);
    return std::exp(kk * std::log(kk) - lead - 1.0);
  }
  const double base = (std::pow(kk, alpha + 1.0) - std::pow(kk - 1.0, alpha + 1.0)) /
                      (alpha + 1.0);
  return std::exp(std::log(base) / alpha);
}

std::vector<double> simulate_volatility(const VolatilityConfig& vc,
                                        const HybridConfig& hc,
                                        std::uint64_t seed) {
  vc.validate();
  hc.validate();
  const double d = hc.delta();
  if (d * vc.theta >= 1.0)
    throw std::invalid_argument(
        "simulate_volatility: unstable discretisation, needs delta * theta < 1");
  const std::size_t len = hc.steps() + 1;
  NormalRng rng(seed);
  std::vector<double> sigma(len);
  double v = rng.normal() / std::sqrt(2.0 * vc.theta);
  sigma[0] = std::exp(vc.beta * v);
  const double keep = 1.0 - d * vc.theta;
  const double root_d = std::sqrt(d);
  for (std::size_t i = 1; i < len; ++i) {
    v = keep * v + root_d * rng.normal();
    sigma[i] = std::exp(vc.beta * v);
  }
  return sigma;
}

namespace {

struct HybridDraws {
  std::vector<double> dw;               // Brownian increments, one per step
  std::vector<std::vector<double>> v;   // v[k-1][j] = V_{j,k}
};

HybridDraws make_draws(const HybridConfig& hc, double alpha,
                       const QuadratureSpec& q, std::uint64_t seed) {
  const std::size_t dim = hc.kappa + 1;
  const std::vector<double> b = cov_factor(
      hybrid_cov_matrix(hc.kappa, hc.n, alpha, q), dim);
  const std::size_t s = hc.steps();
  HybridDraws out;
  out.dw.resize(s);
  out.v.assign(hc.kappa, std::vector<double>(s));
  NormalRng rng(seed);
  std::vector<double> z(dim), y(dim);
  for (std::size_t j = 0; j < s; ++j) {
    for (auto& zi : z) zi = rng.normal();
    for (std::size_t r = 0; r < dim; ++r) {
      double acc = 0.0;
      for (std::size_t c = 0; c < dim; ++c) acc += b[r * dim + c] * z[c];
      y[r] = acc;
    }
    out.dw[j] = y[0];
    for (std::size_t k = 1; k < dim; ++k) out.v[k - 1][j] = y[k];
  }
  return out;
}

struct HybridWeights {
  std::vector<double> lower;  // L_g(k delta), k = 1..kappa
  std::vector<double> upper;  // g(b_k delta) at k = 0..big_n, zero for k <= kappa
};

HybridWeights make_weights(const HybridConfig& hc, const KernelSpec& kernel) {
  HybridWeights w;
  const double d = hc.delta();
  w.lower.resize(hc.kappa);
  for (std::size_t k = 1; k <= hc.kappa; ++k)
    w.lower[k - 1] = slowly_varying_part(kernel, static_cast<double>(k) * d);
  w.upper.assign(hc.big_n + 1, 0.0);
  for (std::size_t k = hc.kappa + 1; k <= hc.big_n; ++k)
    w.upper[k] = eval_kernel(kernel, riemann_eval_point(k, kernel.alpha) * d);
  return w;
}

void check_sigma(const HybridConfig& hc, std::span<const double> sigma) {
  if (sigma.size() != hc.steps() + 1)
    throw std::invalid_argument(
        "simulate_bss: sigma must have length big_n + n*t_end + 1");
  for (double s : sigma)
    if (!(s > 0.0))
      throw std::invalid_argument("simulate_bss: sigma must be strictly positive");
}

bool is_constant(std::span<const double> x) {
  for (double v : x)
    if (v != x[0]) return false;
  return true;
}

SimulationOutput assemble(const HybridConfig& hc, std::span<const double> sigma,
                          const HybridDraws& draws, const HybridWeights& weights,
                          bool use_fft) {
  const std::size_t obs = hc.observations();
  const std::size_t big_n = hc.big_n;
  const std::size_t s = hc.steps();
  const double d = hc.delta();
  const bool flat = is_constant(sigma);

  std::vector<double> core_upper(obs + 1, 0.0), bss_upper(obs + 1, 0.0);
  if (use_fft) {
    ConvolutionPlan plan(weights.upper, s);
    if (flat) {
      plan.apply(draws.dw, big_n, core_upper);
    } else {
      std::vector<double> sdw(s);
      #pragma omp parallel for schedule(static)
      for (long long j = 0; j < static_cast<long long>(s); ++j)
        sdw[j] = sigma[j] * draws.dw[j];
      plan.apply_pair(draws.dw, sdw, big_n, core_upper, bss_upper);
    }
  } else {
    for (std::size_t i = 0; i <= obs; ++i) {
      const std::size_t a = i + big_n;
      double acc_core = 0.0, acc_bss = 0.0;
      for (std::size_t k = hc.kappa + 1; k <= big_n; ++k) {
        const double w = weights.upper[k];
        acc_core += w * draws.dw[a - k];
        if (!flat) acc_bss += w * sigma[a - k] * draws.dw[a - k];
      }
      core_upper[i] = acc_core;
      bss_upper[i] = acc_bss;
    }
  }

  std::vector<double> core(obs + 1), bss(obs + 1);
  #pragma omp parallel for schedule(static) if (use_fft)
  for (long long i = 0; i <= static_cast<long long>(obs); ++i) {
    const std::size_t a = static_cast<std::size_t>(i) + big_n;
    double acc_core = core_upper[i], acc_bss = bss_upper[i];
    for (std::size_t k = 1; k <= hc.kappa; ++k) {
      const double lv = weights.lower[k - 1] * draws.v[k - 1][a - k];
      acc_core += lv;
      if (!flat) acc_bss += sigma[a - k] * lv;
    }
    core[i] = acc_core;
    bss[i] = flat ? sigma[0] * acc_core : acc_bss;
  }

  SimulationOutput out;
  out.core = SamplePath{std::move(core), d};
  out.bss = SamplePath{std::move(bss), d};
  out.vol = SamplePath{{sigma.begin() + static_cast<long>(big_n), sigma.end()}, d};
  return out;
}

SimulationOutput simulate_impl(const HybridConfig& hc, const KernelSpec& kernel,
                               std::span<const double> sigma, std::uint64_t seed,
                               bool use_fft) {
  hc.validate();
  kernel.validate();
  check_sigma(hc, sigma);
  const HybridDraws draws = make_draws(hc, kernel.alpha, {}, seed);
  const HybridWeights weights = make_weights(hc, kernel);
  return assemble(hc, sigma, draws, weights, use_fft);
}

}  // namespace

SimulationOutput simulate_bss(const HybridConfig& hc, const KernelSpec& k,
                              std::span<const double> sigma, std::uint64_t seed) {
  return simulate_impl(hc, k, sigma, seed, true);
}

SimulationOutput simulate_bss_reference(const HybridConfig& hc,
                                        const KernelSpec& k,
                                        std::span<const double> sigma,
                                        std::uint64_t seed) {
  return simulate_impl(hc, k, sigma, seed, false);
}

double integrated_vol_oracle(const SamplePath& sigma, double p, double t) {
  sigma.validate();
  if (!(p > 0.0)) throw std::invalid_argument("integrated_vol_oracle: p must be > 0");
  if (t < 0.0) throw std::invalid_argument("integrated_vol_oracle: t must be >= 0");
  if (t > sigma.horizon() * (1.0 + 1e-9))
    throw std::invalid_argument("integrated_vol_oracle: t beyond path horizon");
  const std::size_t last = grid_index(sigma, t);
  double acc = 0.0;
  for (std::size_t i = 0; i <= last; ++i)
    acc += std::pow(std::abs(sigma.values[i]), p);
  return acc * sigma.delta;
}

}  // namespace bss

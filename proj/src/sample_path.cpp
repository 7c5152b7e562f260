// SPDX-License-Identifier: Apache-2.0
#include "bss/sample_path.hpp"

#include <cmath>
#include <stdexcept>

namespace bss {

void SamplePath::validate() const {
  if (values.empty()) throw std::invalid_argument("SamplePath: values are empty");
  if (!(delta > 0.0)) throw std::invalid_argument("SamplePath: delta must be > 0");
}

SamplePath subsample(const SamplePath& p, std::size_t factor) {
  p.validate();
  if (factor < 1) throw std::invalid_argument("subsample: factor must be >= 1");
  if (factor >= p.values.size())
    throw std::invalid_argument("subsample: factor exceeds path length");
  if (factor == 1) return p;
  SamplePath out;
  out.delta = p.delta * static_cast<double>(factor);
  out.values.reserve(p.values.size() / factor + 1);
  for (std::size_t i = 0; i < p.values.size(); i += factor)
    out.values.push_back(p.values[i]);
  return out;
}

std::size_t grid_index(const SamplePath& p, double t) {
  if (t < 0.0) throw std::invalid_argument("grid_index: t must be >= 0");
  const double raw = t / p.delta;
  auto idx = static_cast<std::size_t>(std::floor(raw + 1e-9));
  if (idx >= p.values.size()) idx = p.values.size() - 1;
  return idx;
}

}  // namespace bss

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace bss {

// Uniformly spaced observations; delta is the grid spacing, so 1/delta
// observations per unit of time.
struct SamplePath {
  std::vector<double> values;
  double delta = 0.0;

  double obs_per_unit() const { return 1.0 / delta; }
  std::size_t increments() const { return values.empty() ? 0 : values.size() - 1; }
  double horizon() const { return delta * static_cast<double>(increments()); }
  void validate() const;
};

// Keep every factor-th element starting at index 0; trailing remainder is
// dropped. New delta = old delta * factor.
SamplePath subsample(const SamplePath& p, std::size_t factor);

// Grid index of time t, robust to t being an exact multiple of delta.
std::size_t grid_index(const SamplePath& p, double t);

}  // namespace bss

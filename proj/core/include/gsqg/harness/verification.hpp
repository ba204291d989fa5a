#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsqg/harness/config.hpp"

namespace gsqg::harness {

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;      // measured error or ratio
  double tolerance = 0.0;  // threshold it was compared against
  std::string detail;
};

/// Every Fourier multiplier against a per-mode loop, and advect against an
/// O(n^4) convolution, on a 16 x 16 grid.
std::vector<CheckResult> verify_operators(std::uint64_t seed);

/// Ensemble checks of the dyadic, interpolation and commutator inequalities
/// at the configured sample count.
std::vector<CheckResult> verify_inequalities(const ScenarioConfig& config);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace gsqg::harness

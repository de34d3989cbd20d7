#pragma once

#include <cstdint>

namespace fuzmet {

// Sampling density for grid-based axiom checks. t_samples controls the number
// of random t probes per profile on top of the structural points (breakpoints
// and their right neighbours); km4_samples controls the random (t,s) pairs per
// ordered triple in the triangle check.
struct GridConfig {
  int t_samples = 12;
  int km4_samples = 6;
  bool include_breakpoints = true;
  std::uint64_t seed = 0;
};

}  // namespace fuzmet

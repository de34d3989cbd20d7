#pragma once

// Brute-force reference implementations used only by the tests. They know
// nothing about profile internals: every answer comes from point evaluations
// on a dense time grid, so agreement with the closed-form library results is
// meaningful evidence rather than a tautology.
//
// The level oracles assume the profile is nondecreasing on t > 0 (that is
// what lets a coarse scan bracket the crossing before the fine scan pins it
// down); monotonicity itself is verified elsewhere by the axiom checks, never
// by these oracles.

#include <cmath>
#include <functional>
#include <limits>

namespace fuzmet::testing {

inline constexpr double kOracleStep = 1e-6;

// inf{t > 0 : f(t) > lambda} to within one kOracleStep, found by a doubling
// search for an exceeding time, a coarse scan (1024 steps at a stride) to
// bracket the crossing, and a fine scan inside the bracket. Returns +inf when
// f never exceeds lambda below give_up.
inline double oracle_level_inf(const std::function<double(double)>& f, double lambda,
                               double give_up = 1e12) {
  double hi = 1.0;
  while (hi <= give_up && !(f(hi) > lambda)) hi *= 2.0;
  if (hi > give_up) return std::numeric_limits<double>::infinity();

  double coarse = kOracleStep * 1024.0;
  double lo = 0.0;
  for (double t = coarse; t < hi; t += coarse) {
    if (f(t) > lambda) {
      hi = t;
      break;
    }
    lo = t;
  }
  // Pad the bracket by two coarse cells against edge effects, then walk the
  // fine grid for the first exceeding time.
  double start = std::max(0.0, lo - 2.0 * coarse);
  double stop = hi + 2.0 * coarse;
  for (double t = start + kOracleStep; t <= stop; t += kOracleStep) {
    if (f(t) > lambda) return t;
  }
  return hi;
}

// sup{t >= 0 : f(t) < lambda} to within one kOracleStep, same scheme: the
// fine scan keeps the last time still below lambda. Returns +inf when f stays
// below lambda through give_up.
inline double oracle_level_sup(const std::function<double(double)>& f, double lambda,
                               double give_up = 1e12) {
  double hi = 1.0;
  while (hi <= give_up && !(f(hi) >= lambda)) hi *= 2.0;
  if (hi > give_up) return std::numeric_limits<double>::infinity();

  double coarse = kOracleStep * 1024.0;
  double lo = 0.0;
  for (double t = coarse; t < hi; t += coarse) {
    if (f(t) >= lambda) {
      hi = t;
      break;
    }
    lo = t;
  }
  double start = std::max(0.0, lo - 2.0 * coarse);
  double stop = hi + 2.0 * coarse;
  double last_below = 0.0;
  for (double t = start + kOracleStep; t <= stop; t += kOracleStep) {
    if (f(t) < lambda) last_below = t;
  }
  return last_below > 0.0 ? last_below : start;
}

// sup{t >= 0 : f(t) <= 1 - t} by flat scan over [0, 1] (the set can never
// reach past 1 because f >= 0). Step 1e-7, so the answer is within 1e-7 of
// the true crossing for profiles continuous there.
inline double oracle_crossing(const std::function<double(double)>& f) {
  double last = 0.0;
  for (double t = 0.0; t <= 1.0; t += 1e-7) {
    if (f(t) <= 1.0 - t) last = t;
  }
  return last;
}

}  // namespace fuzmet::testing

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>

namespace fuzmet {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Shortest decimal string that round-trips to the same double ("0.75", not
// "0.7500000001"). Infinities render as "inf"/"-inf".
std::string format_double(double v);

// t^n with the n == 1 fast path kept exact (no pow rounding).
inline double pown(double t, double n) { return n == 1.0 ? t : __builtin_pow(t, n); }

struct BoundaryResult {
  bool found = false;
  double value = 0;
};

// Boundary searches on [0, cap] for monotone predicates. Both bracket by
// doubling from 1 and bisect to width <= tol, returning the bracket midpoint
// (error <= tol/2). "found" is false when the predicate never flips below cap.
//
// up_closed: pred is false below the boundary, true above (e.g. eval(t) > lambda).
// down_closed: pred is true below the boundary, false above (e.g. eval(t) < lambda).
BoundaryResult boundary_up_closed(const std::function<bool(double)>& pred, double cap, double tol);
BoundaryResult boundary_down_closed(const std::function<bool(double)>& pred, double cap, double tol);

// Largest representable t in [0, cap] with pred(t) true, for a down-closed
// pred with pred(0) true; bisects until the bracket collapses to adjacent
// doubles, so representable boundaries are returned exactly. Returns 0 when
// pred(0) is false and +inf when pred holds through the cap.
double sup_down_closed(const std::function<bool(double)>& pred, double cap);

}  // namespace fuzmet

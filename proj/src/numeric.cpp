#include "fuzmet/numeric.hpp"

#include <charconv>
#include <cmath>

namespace fuzmet {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  if (v == 0.0) return "0";  // normalize -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

namespace {

// Grow [0, hi] until pred(hi) flips (relative to its value at 0) or hi > cap.
// Returns the first probe at which the flip was seen, or -1 if none <= cap.
double find_flip(const std::function<bool(double)>& pred, bool at_zero, double cap) {
  double hi = 1.0;
  while (hi <= cap) {
    if (pred(hi) != at_zero) return hi;
    hi *= 2;
  }
  if (pred(cap) != at_zero) return cap;
  return -1;
}

}  // namespace

BoundaryResult boundary_up_closed(const std::function<bool(double)>& pred, double cap,
                                  double tol) {
  if (pred(0.0)) return {true, 0.0};
  double hi = find_flip(pred, false, cap);
  if (hi < 0) return {false, 0.0};
  double lo = hi > 1.0 ? hi / 2 : 0.0;
  while (hi - lo > tol) {
    double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    (pred(mid) ? hi : lo) = mid;
  }
  return {true, lo + (hi - lo) / 2};
}

BoundaryResult boundary_down_closed(const std::function<bool(double)>& pred, double cap,
                                    double tol) {
  if (!pred(0.0)) return {true, 0.0};
  double hi = find_flip(pred, true, cap);
  if (hi < 0) return {false, 0.0};
  double lo = hi > 1.0 ? hi / 2 : 0.0;
  while (hi - lo > tol) {
    double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    (pred(mid) ? lo : hi) = mid;
  }
  return {true, lo + (hi - lo) / 2};
}

double sup_down_closed(const std::function<bool(double)>& pred, double cap) {
  if (!pred(0.0)) return 0.0;
  double hi = find_flip(pred, true, cap);
  if (hi < 0) return kInf;
  double lo = hi > 1.0 ? hi / 2 : 0.0;
  while (true) {
    double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    (pred(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace fuzmet

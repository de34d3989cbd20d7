#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fuzmet/grid.hpp"
#include "fuzmet/report.hpp"

namespace fuzmet {

// Thrown by black-box level queries when the requested level is not reached
// below the configured search cap, so neither a finite answer nor divergence
// can be certified.
struct LevelUnreachable : std::runtime_error {
  LevelUnreachable(double lambda, double cap);
  double lambda;
  double cap;
};

// One affine piece of a piecewise profile. The piece covers the half-open
// interval (prev_end, end] — prev_end being the previous piece's end, or 0
// for the first piece — and interpolates linearly from v_start (the right-
// open limit at prev_end) to v_end (attained at end). Endpoint-value form
// keeps the attained values exact under time scaling, where a slope would
// pick up rounding.
struct Segment {
  double end;
  double v_start;
  double v_end;
};

// Piecewise-affine profile: 0 for t <= 0, the segments in order, then the
// constant `tail` on (last end, +inf). Segments may be empty (tail only).
struct PiecewiseSpec {
  std::vector<Segment> segments;
  double tail = 1.0;
};

// Rational profile: 0 for t <= 0, then
//     scale * k * t^n / (k * t^n + m * c)
// on (0, cap] (or all of t > 0 when no cap), and 1 beyond the cap. The value
// is strictly increasing in t with supremum `scale`. Requires m, n, k, c > 0
// and scale in (0, 1].
struct RationalSpec {
  double m = 1.0;
  double n = 1.0;
  double k = 1.0;
  double c = 1.0;
  double scale = 1.0;
  std::optional<double> cap;
};

// Opaque profile evaluated only through `fn`, declared nondecreasing on t > 0.
// Level queries bisect, narrowing the bracket to width <= tol and returning
// its midpoint (error <= tol/2); the search gives up past search_cap. A value
// within fd_tol of 1 counts as "reached 1" for threshold queries.
struct BlackBoxSpec {
  std::function<double(double)> fn;
  double tol = 1e-9;
  double search_cap = 1e12;
  double fd_tol = 1e-9;
};

// Solution set of M(t) == lambda over t > 0. For nondecreasing profiles the
// set is convex, so the bounds describe it exactly; for non-monotone profiles
// they give its convex hull.
struct Plateau {
  enum class Kind { empty, point, interval };
  Kind kind = Kind::empty;
  double lo = 0;
  double hi = 0;
  bool lo_closed = false;
  bool hi_closed = false;
  bool at_most_one() const { return kind != Kind::interval; }
};

// inf{t > 0 : M(t) == 1}. finite == false when the profile never reaches 1;
// attained tells whether M(t_star) == 1 (the infimum belongs to the set).
struct OneThreshold {
  bool finite = false;
  double t_star = 0;
  bool attained = false;
};

// A single time-dependence profile t -> M(t) with values in [0, 1] and
// M(t) = 0 for t <= 0. Exact backends (piecewise, rational) answer level
// queries in closed form; the black-box backend bisects.
class Membership {
 public:
  static Membership piecewise(PiecewiseSpec spec);
  static Membership rational(RationalSpec spec);
  static Membership black_box(BlackBoxSpec spec);
  static Membership always_one();          // 1 on t > 0
  static Membership step_at(double c);     // 0 on (0, c], 1 beyond (c >= 0)
  static Membership ramp01();              // t on (0, 1], 1 beyond

  double eval(double t) const;

  // inf{t : M(t) > lambda}, +inf when the set is empty. lambda in [0, 1].
  double level_inf(double lambda) const;

  // sup{t >= 0 : M(t) < lambda}, 0 when the set is empty (M(0) = 0, so the
  // set is nonempty for lambda > 0). +inf when M stays below lambda forever.
  // lambda in [0, 1].
  double level_sup(double lambda) const;

  // Solution set of M(t) == lambda on t > 0, lambda in (0, 1]. Exact
  // backends only; throws std::logic_error for black-box profiles, whose
  // point evaluations cannot decide equality.
  Plateau plateau(double lambda) const;

  OneThreshold one_threshold() const;

  // sup{t >= 0 : M(t) < 1}; the independent lower-branch companion of
  // one_threshold(). +inf when M never reaches 1.
  double sup_below_one() const;

  // Profile t -> M(t / f) for f > 0: the time axis stretched by f, so a unit
  // template becomes the profile of a pair at distance f.
  Membership with_time_scale(double f) const;

  bool is_exact() const { return !std::holds_alternative<BlackBoxSpec>(spec_); }
  const char* backend_name() const;

  // Backend introspection: non-null exactly for the active backend.
  const PiecewiseSpec* piecewise_spec() const { return std::get_if<PiecewiseSpec>(&spec_); }
  const RationalSpec* rational_spec() const { return std::get_if<RationalSpec>(&spec_); }
  const BlackBoxSpec* black_box_spec() const { return std::get_if<BlackBoxSpec>(&spec_); }

  // Structural discontinuity/junction points (segment ends, the cap), used to
  // seed verification grids. Empty for black-box profiles.
  std::vector<double> breakpoints() const;

  // A positive time scale by which the profile's features are spanned; grids
  // probe a few multiples of this.
  double span_hint() const;

 private:
  explicit Membership(std::variant<PiecewiseSpec, RationalSpec, BlackBoxSpec> spec)
      : spec_(std::move(spec)) {}
  std::variant<PiecewiseSpec, RationalSpec, BlackBoxSpec> spec_;
};

// Per-profile axiom battery: KM1, KM5 (monotone / left-continuity / tail),
// SDP or the KM2 side selected by is_diagonal, and FD classification. Exact
// backends are checked structurally; black-box profiles are probed on a grid
// derived from `grid` (see each entry's detail for what was actually decided).
std::vector<AxiomCheck> verify_profile(const Membership& m, bool is_diagonal,
                                       const GridConfig& grid = {});

}  // namespace fuzmet

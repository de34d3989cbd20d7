#pragma once

#include <string>
#include <vector>

#include "fuzmet/crisp_metric.hpp"
#include "fuzmet/grid.hpp"
#include "fuzmet/membership.hpp"
#include "fuzmet/point_set.hpp"
#include "fuzmet/report.hpp"

namespace fuzmet {

// One off-diagonal profile assignment used when assembling a space by hand.
struct PairAssignment {
  std::string x;
  std::string y;
  Membership m;
};

// Fuzzy metric space over a finite carrier: one membership profile per
// unordered pair of distinct points (stored upper-triangle), with the
// diagonal fixed to the identity profile (1 for t > 0, 0 otherwise) and
// symmetry holding by construction. Construction enforces only this
// structure; the KM axioms are judged by check_axioms.
class FuzzyMetricSpace {
 public:
  FuzzyMetricSpace(PointSet points, std::vector<Membership> upper_triangle);

  const PointSet& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  // Profile of the unordered pair {i, j}; i == j is a logic error (the
  // diagonal has no stored profile).
  const Membership& pair(std::size_t i, std::size_t j) const;

  double eval(std::size_t i, std::size_t j, double t) const {
    if (i == j) return t > 0 ? 1.0 : 0.0;
    return pair(i, j).eval(t);
  }

  bool is_exact() const;

 private:
  std::size_t tri(std::size_t i, std::size_t j) const;  // requires i < j
  PointSet points_;
  std::vector<Membership> tri_;
};

// Assembles a space from per-pair assignments. Throws std::invalid_argument
// on unknown labels, assignments to the diagonal, duplicate pairs, or pairs
// left unassigned.
FuzzyMetricSpace build_space(PointSet points, std::vector<PairAssignment> pairs);

// Space built from a crisp metric d and a unit profile template g, with
// M(x,y,t) = g(t / d(x,y)). Validates d against the metric axioms with zero
// slack and g as an admissible off-diagonal template (nondecreasing, tail
// limit 1, not identically 1); a vanishing limit at 0+ is deliberately not
// required, so templates violating the small-t decay condition can still be
// assembled and then flagged by check_axioms.
FuzzyMetricSpace generate_profile_space(const CrispMetric& d, const Membership& g);

// Space-level axiom report: KM1/KM5/SDP aggregated over the pair profiles,
// KM2 from the diagonal convention plus per-pair distinguishability, KM3
// structural, KM4 probed on a grid of (t, s) pairs assembled from all pair
// breakpoints (and their right neighbours, midpoints, seeded random draws,
// and completions t + s landing exactly on breakpoints), compared with zero
// slack. FD reports whether every pair reaches 1 at finite time.
AxiomReport check_axioms(const FuzzyMetricSpace& space, const GridConfig& grid = {});

// Fuzzy open ball {y : M(center, y, r) > 1 - eps} for r > 0, eps in (0, 1).
// Returns labels in carrier order; the center is always a member.
std::vector<std::string> open_ball(const FuzzyMetricSpace& space, const std::string& center,
                                   double r, double eps);

// Sorted probe times shared by the grid-based space checks: every pair's
// breakpoints and their right neighbours, midpoints between consecutive
// breakpoints, seeded random draws, and points beyond every profile's span.
std::vector<double> axiom_time_grid(const FuzzyMetricSpace& space, const GridConfig& grid = {});

}  // namespace fuzmet

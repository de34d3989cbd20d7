#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fuzmet/crisp_metric.hpp"
#include "fuzmet/fuzzy_space.hpp"

namespace fuzmet {

// Open crisp ball {y : d(x, y) < s}, strict. Labels come back in carrier
// order. Throws on unknown center or nonpositive radius.
std::vector<std::string> crisp_ball(const CrispMetric& d, const std::string& x, double s);

// Radius conversions for the rational family k*t^n / (k*t^n + m*d): the
// fuzzy ball of radius r at truth threshold 1-eps equals the crisp ball of
// radius s, and conversely. The two maps are mutual inverses.
//   fuzzy_to_crisp_radius: s = eps/(1-eps) * k*r^n / m
//   crisp_to_fuzzy_radius: r = ((1-eps)/eps * eta*m / k)^(1/n)
double fuzzy_to_crisp_radius(double m, double n, double k, double r, double eps);
double crisp_to_fuzzy_radius(double m, double n, double k, double eta, double eps);

// One side of a ball-family comparison: a crisp metric with a radius grid,
// or a fuzzy space with an (r, eps) parameter grid. Balls are taken at every
// sample point as center. Families whose grids are left empty inherit the
// shared default grids passed to compare_ball_families.
struct FuzzyBallParams {
  double r = 1.0;
  double eps = 0.5;
};

struct BallFamily {
  std::variant<CrispMetric, FuzzyMetricSpace> source;
  std::vector<double> crisp_radii;            // used when source is crisp
  std::vector<FuzzyBallParams> fuzzy_params;  // used when source is fuzzy

  static BallFamily of_metric(CrispMetric d, std::vector<double> radii = {});
  static BallFamily of_space(FuzzyMetricSpace space,
                             std::vector<FuzzyBallParams> params = {});
  bool is_crisp() const { return std::holds_alternative<CrispMetric>(source); }
};

// Shared parameter grids applied to any family that did not bring its own.
// Crisp families take `radii`; fuzzy families take the radii x epsilons
// product.
struct BallGrids {
  std::vector<double> radii;
  std::vector<double> epsilons;
};

BallGrids default_ball_grids();

enum class BallRelation { equal, left_refines_right, right_refines_left, incomparable };

std::string_view relation_name(BallRelation r);

// A concrete ball pinned down for reporting: which side it came from, its
// parameters, and its members on the sample.
struct BallWitness {
  std::string side;  // "left" or "right"
  std::string center;
  double radius = 0.0;
  std::optional<double> eps;  // engaged for fuzzy balls
  std::vector<std::string> members;
  std::string why;
};

struct ComparisonVerdict {
  BallRelation relation = BallRelation::incomparable;
  std::vector<BallWitness> witnesses;  // nonempty whenever relation != equal
  std::string note;                    // scope of the verdict (sample + grids)
};

// Extensional comparison of two ball families on a finite sample. Every
// sample label must exist in both sources' carriers. First the families are
// tested for extensional set-equality (each ball of one side has an equal
// ball somewhere on the other side, both directions); failing that, each
// direction is tested for refinement: the left family refines the right one
// when every point of every right ball sits inside some left ball centered
// at that point that is contained in the right ball. Mutual refinement
// without set-equality still reports `equal` (the families generate the same
// opens on the sample), one-sided refinement reports the finer side, and
// neither direction reports `incomparable`.
ComparisonVerdict compare_ball_families(const BallFamily& left, const BallFamily& right,
                                        const PointSet& sample,
                                        const BallGrids& params = default_ball_grids());

// Containment of actual-metric balls in fuzzy balls with the same radius:
// for every sampled center x0, radius r0, and threshold eps0, checks
// {y : d_M(x0, y) < r0} is a subset of {y : M(x0, y, r0) > 1 - eps0}. The
// space must satisfy FD on every sampled pair (the actual metric must
// converge) or the check throws. Verdict `equal` when every cell is an
// equality of sets, `left_refines_right` (the actual-metric side is finer)
// when containment always holds and is strict somewhere, `incomparable` with
// witnesses when containment fails.
ComparisonVerdict check_refinement_thm47(const FuzzyMetricSpace& space,
                                         const PointSet& sample,
                                         const std::vector<double>& r0_grid,
                                         const std::vector<double>& eps0_grid);

}  // namespace fuzmet

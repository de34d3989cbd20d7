#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "fuzmet/balls.hpp"
#include "fuzmet/catalog.hpp"
#include "fuzmet/crisp_metric.hpp"
#include "fuzmet/crispify.hpp"
#include "fuzmet/fuzzify.hpp"
#include "fuzmet/membership.hpp"
#include "fuzmet/point_set.hpp"
#include "generators.hpp"

using namespace fuzmet;

namespace {

CrispMetric line_metric() {
  return CrispMetric::from_euclidean(
      PointSet::from_coords_1d({"a", "b", "c"}, {0.0, 1.0, 2.0}));
}

}  // namespace

TEST_CASE("crisp balls are strict and listed in carrier order") {
  CrispMetric d = line_metric();
  CHECK(crisp_ball(d, "a", 0.5) == std::vector<std::string>{"a"});
  CHECK(crisp_ball(d, "a", 1.0) == std::vector<std::string>{"a"});  // strict: d = 1 is out
  CHECK(crisp_ball(d, "a", 1.5) == std::vector<std::string>{"a", "b"});
  CHECK(crisp_ball(d, "b", 1.5) == std::vector<std::string>{"a", "b", "c"});
  CHECK_THROWS_AS(crisp_ball(d, "zz", 1.0), std::invalid_argument);
  CHECK_THROWS_AS(crisp_ball(d, "a", 0.0), std::invalid_argument);
}

TEST_CASE("radius conversions reproduce the closed-form values") {
  CHECK(fuzzy_to_crisp_radius(1, 1, 1, 1.0, 0.5) == 1.0);
  CHECK(fuzzy_to_crisp_radius(2, 1, 1, 1.0, 0.5) == 0.5);
  CHECK(crisp_to_fuzzy_radius(1, 1, 1, 1.0, 0.5) == 1.0);
  CHECK(crisp_to_fuzzy_radius(1, 1, 2, 1.0, 0.5) == 0.5);
  // Quadratic exponent: s = eps/(1-eps) * r^2, so r = 2, eps = 1/2 gives 4.
  CHECK(fuzzy_to_crisp_radius(1, 2, 1, 2.0, 0.5) == 4.0);
}

TEST_CASE("the two radius maps are mutual inverses") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> pos(0.2, 5.0);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  for (int trial = 0; trial < 200; ++trial) {
    double m = pos(rng), n = pos(rng), k = pos(rng), r = pos(rng);
    double eps = unit(rng);
    double s = fuzzy_to_crisp_radius(m, n, k, r, eps);
    double back = crisp_to_fuzzy_radius(m, n, k, s, eps);
    CHECK(std::abs(back - r) <= 1e-12 * r);
  }
}

TEST_CASE("radius conversions validate their arguments") {
  CHECK_THROWS_AS(fuzzy_to_crisp_radius(0, 1, 1, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(fuzzy_to_crisp_radius(1, 1, 1, -1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(fuzzy_to_crisp_radius(1, 1, 1, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(fuzzy_to_crisp_radius(1, 1, 1, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(crisp_to_fuzzy_radius(1, 1, 1, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("indicator balls and metric balls generate the same family") {
  std::mt19937_64 rng(4242);
  CrispMetric d = fuzmet::testing::random_euclidean_metric(rng, 5);
  BallFamily left = BallFamily::of_space(indicator_fuzzify(d));
  BallFamily right = BallFamily::of_metric(d);
  ComparisonVerdict v = compare_ball_families(left, right, d.points());
  CHECK(v.relation == BallRelation::equal);
  CHECK(v.witnesses.empty());
  CHECK_FALSE(v.note.empty());
}

TEST_CASE("rational balls match metric balls under the radius conversion") {
  std::mt19937_64 rng(1717);
  CrispMetric d = fuzmet::testing::random_euclidean_metric(rng, 5);
  double m = 2.0, n = 1.5, k = 0.7;
  BallGrids grids = default_ball_grids();
  std::vector<FuzzyBallParams> params;
  std::vector<double> converted;
  for (double r : grids.radii)
    for (double eps : grids.epsilons) {
      params.push_back({r, eps});
      converted.push_back(fuzzy_to_crisp_radius(m, n, k, r, eps));
    }
  BallFamily left = BallFamily::of_space(mnk_space(d, m, n, k), params);
  BallFamily right = BallFamily::of_metric(d, converted);
  ComparisonVerdict v = compare_ball_families(left, right, d.points());
  CHECK(v.relation == BallRelation::equal);
}

TEST_CASE("a finer radius grid refines a coarser one and shows a witness") {
  CrispMetric d = line_metric();
  BallFamily fine = BallFamily::of_metric(d, {0.6, 2.5});
  BallFamily coarse = BallFamily::of_metric(d, {2.5});
  ComparisonVerdict v = compare_ball_families(fine, coarse, d.points());
  CHECK(v.relation == BallRelation::left_refines_right);
  REQUIRE_FALSE(v.witnesses.empty());
  CHECK(v.witnesses.front().side == "left");
  CHECK(v.witnesses.front().members.size() == 1);  // the unmatched singleton

  ComparisonVerdict flipped = compare_ball_families(coarse, fine, d.points());
  CHECK(flipped.relation == BallRelation::right_refines_left);
}

TEST_CASE("families that cannot simulate each other are incomparable") {
  PointSet pts = PointSet::from_labels({"a", "b", "c"});
  CrispMetric da(pts, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  CrispMetric db(pts, {{0, 2, 1}, {2, 0, 2}, {1, 2, 0}});
  ComparisonVerdict v = compare_ball_families(BallFamily::of_metric(da, {1.5}),
                                              BallFamily::of_metric(db, {1.5}), pts);
  CHECK(v.relation == BallRelation::incomparable);
  CHECK(v.witnesses.size() == 2);  // one stuck ball per direction
}

TEST_CASE("ball comparison validates the sample against both carriers") {
  CrispMetric d = line_metric();
  PointSet bad = PointSet::from_labels({"a", "zz"});
  CHECK_THROWS_AS(compare_ball_families(BallFamily::of_metric(d), BallFamily::of_metric(d), bad),
                  std::invalid_argument);
  BallFamily empty_grid = BallFamily::of_metric(d, {});
  CHECK_THROWS_AS(compare_ball_families(empty_grid, empty_grid, d.points(),
                                        BallGrids{{}, {}}),
                  std::invalid_argument);
}

TEST_CASE("limit-metric balls refine the fuzzy balls that induced them") {
  // Capped rational law: the limit metric is constant 2, so its balls are
  // singletons below radius 2 while the fuzzy balls stay graded intervals.
  PointSet sample = grid_carrier_1d(-1.0, 1.0, 21);
  FuzzyMetricSpace space = fixture("ex4_6", sample);
  ActualMetric lim = actual_metric(space);
  REQUIRE(lim.fd);

  ComparisonVerdict v = check_refinement_thm47(space, sample, {0.5, 1.0, 1.9, 2.0, 2.5},
                                               {0.1, 0.25, 0.5, 0.75, 0.9});
  CHECK(v.relation == BallRelation::left_refines_right);
  REQUIRE_FALSE(v.witnesses.empty());
  CHECK(v.witnesses.front().members.size() == 1);
  CHECK(v.witnesses.front().radius <= 2.0);
}

TEST_CASE("refinement collapses to equality for indicator spaces") {
  std::mt19937_64 rng(314);
  CrispMetric d = fuzmet::testing::random_euclidean_metric(rng, 6);
  FuzzyMetricSpace s = indicator_fuzzify(d);
  ComparisonVerdict v =
      check_refinement_thm47(s, d.points(), {0.5, 1.0, 5.0, 40.0}, {0.25, 0.5, 0.9});
  CHECK(v.relation == BallRelation::equal);
  CHECK(v.witnesses.empty());
  CHECK(v.note.find("every") != std::string::npos);
}

TEST_CASE("refinement checking requires a convergent limit metric") {
  PointSet pts = PointSet::from_labels({"x", "y"});
  FuzzyMetricSpace s = build_space(pts, {{"x", "y", Membership::rational({})}});
  CHECK_THROWS_AS(check_refinement_thm47(s, pts, {1.0}, {0.5}), std::invalid_argument);
}

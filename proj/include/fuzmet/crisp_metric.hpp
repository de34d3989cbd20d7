#pragma once

#include <vector>

#include "fuzmet/point_set.hpp"
#include "fuzmet/report.hpp"

namespace fuzmet {

// Symmetric nonnegative distance matrix over a point set with an exactly zero
// diagonal. Construction enforces only that structure; whether the values
// form a genuine metric (identity of indiscernibles, triangle inequality) is
// judged separately by check_metric_axioms.
class CrispMetric {
 public:
  CrispMetric(PointSet points, std::vector<std::vector<double>> rows);
  static CrispMetric from_euclidean(PointSet points);
  static CrispMetric constant(PointSet points, double off_diagonal);

  const PointSet& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double at(std::size_t i, std::size_t j) const { return d_[i * size() + j]; }
  void set(std::size_t i, std::size_t j, double v);  // keeps symmetry

 private:
  CrispMetric(PointSet points, std::vector<double> flat)
      : points_(std::move(points)), d_(std::move(flat)) {}
  PointSet points_;
  std::vector<double> d_;  // row-major n*n
};

// Checks nonnegativity, identity of indiscernibles, symmetry, and the
// triangle inequality d(x,z) <= d(x,y) + d(y,z) + slack over all triples.
// slack = 0 demands the inequality hold in exact double comparison.
AxiomReport check_metric_axioms(const CrispMetric& d, double slack = 0.0);

}  // namespace fuzmet

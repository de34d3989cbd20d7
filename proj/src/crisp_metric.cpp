#include "fuzmet/crisp_metric.hpp"

#include <cmath>
#include <stdexcept>

#include "fuzmet/numeric.hpp"

namespace fuzmet {

CrispMetric::CrispMetric(PointSet points, std::vector<std::vector<double>> rows)
    : points_(std::move(points)) {
  std::size_t n = points_.size();
  if (rows.size() != n) throw std::invalid_argument("distance matrix must have one row per point");
  d_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("distance matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      double v = rows[i][j];
      if (!std::isfinite(v) || v < 0)
        throw std::invalid_argument("distances must be finite and nonnegative");
      d_[i * n + j] = v;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d_[i * n + i] != 0.0)
      throw std::invalid_argument("distance matrix diagonal must be exactly zero");
    for (std::size_t j = i + 1; j < n; ++j)
      if (d_[i * n + j] != d_[j * n + i])
        throw std::invalid_argument("distance matrix must be exactly symmetric");
  }
}

CrispMetric CrispMetric::from_euclidean(PointSet points) {
  if (!points.has_coords())
    throw std::invalid_argument("Euclidean distances need point coordinates");
  std::size_t n = points.size();
  std::vector<double> flat(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      flat[i * n + j] = flat[j * n + i] = euclidean(points, i, j);
  return CrispMetric(std::move(points), std::move(flat));
}

CrispMetric CrispMetric::constant(PointSet points, double off_diagonal) {
  if (!std::isfinite(off_diagonal) || off_diagonal < 0)
    throw std::invalid_argument("constant distance must be finite and nonnegative");
  std::size_t n = points.size();
  std::vector<double> flat(n * n, off_diagonal);
  for (std::size_t i = 0; i < n; ++i) flat[i * n + i] = 0.0;
  return CrispMetric(std::move(points), std::move(flat));
}

void CrispMetric::set(std::size_t i, std::size_t j, double v) {
  if (i == j) {
    if (v != 0.0) throw std::invalid_argument("diagonal entries must stay zero");
    return;
  }
  if (!std::isfinite(v) || v < 0)
    throw std::invalid_argument("distances must be finite and nonnegative");
  d_[i * size() + j] = v;
  d_[j * size() + i] = v;
}

AxiomReport check_metric_axioms(const CrispMetric& d, double slack) {
  AxiomReport rep;
  std::size_t n = d.size();
  const auto& labels = d.points().labels;

  // Nonnegativity and symmetry are enforced at construction; re-derive them
  // here anyway so the report stands on its own.
  AxiomCheck nonneg{Axiom::DNonneg, true, "", "all entries >= 0"};
  AxiomCheck sym{Axiom::DSymmetry, true, "", "d(x,y) == d(y,x) for all pairs"};
  AxiomCheck ident{Axiom::DIdentity, true, "", "d(x,y) == 0 exactly when x == y"};
  for (std::size_t i = 0; i < n && (nonneg.passed || sym.passed || ident.passed); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (nonneg.passed && d.at(i, j) < 0) {
        nonneg.passed = false;
        nonneg.witness = "(" + labels[i] + ", " + labels[j] + ")";
        nonneg.detail = "negative distance " + format_double(d.at(i, j));
      }
      if (sym.passed && d.at(i, j) != d.at(j, i)) {
        sym.passed = false;
        sym.witness = "(" + labels[i] + ", " + labels[j] + ")";
        sym.detail = format_double(d.at(i, j)) + " != " + format_double(d.at(j, i));
      }
      if (ident.passed && (i == j ? d.at(i, j) != 0.0 : d.at(i, j) == 0.0)) {
        ident.passed = false;
        ident.witness = "(" + labels[i] + ", " + labels[j] + ")";
        ident.detail = i == j ? "nonzero diagonal entry" : "zero distance between distinct points";
      }
    }
  }
  rep.add(nonneg);
  rep.add(ident);
  rep.add(sym);

  AxiomCheck tri{Axiom::DTriangle, true, "", ""};
  std::size_t violations = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (d.at(i, k) > d.at(i, j) + d.at(j, k) + slack) {
          if (violations == 0) {
            tri.passed = false;
            tri.witness = "(" + labels[i] + ", " + labels[j] + ", " + labels[k] + ")";
            tri.detail = "d(x,z)=" + format_double(d.at(i, k)) + " > " +
                         format_double(d.at(i, j)) + " + " + format_double(d.at(j, k));
          }
          ++violations;
        }
      }
    }
  }
  if (tri.passed) {
    tri.detail = "triangle inequality holds on all triples (slack=" + format_double(slack) + ")";
  } else {
    tri.detail += "; " + std::to_string(violations) + " violating triple(s)";
  }
  rep.add(tri);
  return rep;
}

}  // namespace fuzmet

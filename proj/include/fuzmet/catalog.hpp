#pragma once

#include <string>
#include <vector>

#include "fuzmet/crisp_metric.hpp"
#include "fuzmet/fuzzy_space.hpp"

namespace fuzmet {

// Named example spaces used by the tests and addressable from the CLI. Each
// entry builds the same membership law on every off-diagonal pair of the
// chosen carrier; the coordinate-dependent ones read |x - y| off the
// carrier's coordinates.
struct CatalogEntry {
  std::string id;
  std::string description;
  bool needs_coords;
};

const std::vector<CatalogEntry>& catalog_entries();

// The carrier each fixture is demonstrated on when the caller does not bring
// one. Label-only {p, q, r} for the coordinate-free fixtures; short 1D grids
// for the rest.
PointSet default_carrier(const std::string& id);

// Uniform 1D grid carrier on [lo, hi] with `count` points, labelled by their
// coordinate values. Handy as a ball-comparison sample.
PointSet grid_carrier_1d(double lo, double hi, std::size_t count);

FuzzyMetricSpace fixture(const std::string& id, const PointSet& carrier);
FuzzyMetricSpace fixture(const std::string& id);  // on default_carrier(id)

// Parameterized constructors over a crisp metric. standard_space is the
// uncapped t/(t + d) space (the m=n=k=1 rational family); indicator_space
// and mnk_space forward to the fuzzification module.
FuzzyMetricSpace standard_space(const CrispMetric& d);
FuzzyMetricSpace indicator_space(const CrispMetric& d);
FuzzyMetricSpace mnk_space(const CrispMetric& d, double m, double n, double k);

}  // namespace fuzmet

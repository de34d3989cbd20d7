#include "fuzmet/catalog.hpp"

#include <stdexcept>

#include "fuzmet/fuzzify.hpp"
#include "fuzmet/numeric.hpp"

namespace fuzmet {

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"ex2_4",
       "staircase: t on (0, 1/4], flat 1/2 on (1/4, 3/4], t on (3/4, 1], then 1; the flat "
       "stretch makes the two lambda-metrics differ at lambda = 1/2",
       false},
      {"ex2_5",
       "constant 1/2 on (0, 1/2], then 1; fails the separation condition (the limit at 0+ "
       "is 1/2, not 0)",
       false},
      {"ex3_6", "3t/(4(t + |x-y|)) on (0, 2], then 1; capped rational with a jump at t = 2",
       true},
      {"ex3_7", "t/(t + |x-y|), uncapped; never reaches 1, so the limit metric diverges",
       true},
      {"ex4_5", "ramp: t on (0, 1], then 1", false},
      {"ex4_6", "t/(t + |x-y|) on (0, 2], then 1; the limit metric is constant 2", true},
  };
  return entries;
}

namespace {

const CatalogEntry& entry_for(const std::string& id) {
  for (const auto& e : catalog_entries())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown fixture id \"" + id + "\"");
}

Membership coordinate_free_profile(const std::string& id) {
  if (id == "ex2_4")
    return Membership::piecewise(
        {{{0.25, 0.0, 0.25}, {0.75, 0.5, 0.5}, {1.0, 0.75, 1.0}}, 1.0});
  if (id == "ex2_5") return Membership::piecewise({{{0.5, 0.5, 0.5}}, 1.0});
  return Membership::ramp01();  // ex4_5
}

Membership distance_profile(const std::string& id, double c) {
  RationalSpec spec;
  spec.m = 1.0;
  spec.n = 1.0;
  spec.k = 1.0;
  spec.c = c;
  if (id == "ex3_6") {
    spec.scale = 0.75;
    spec.cap = 2.0;
  } else if (id == "ex4_6") {
    spec.scale = 1.0;
    spec.cap = 2.0;
  } else {  // ex3_7
    spec.scale = 1.0;
  }
  return Membership::rational(spec);
}

}  // namespace

PointSet grid_carrier_1d(double lo, double hi, std::size_t count) {
  if (count < 1) throw std::invalid_argument("grid carrier needs at least one point");
  std::vector<std::string> labels(count);
  std::vector<double> coords(count);
  for (std::size_t i = 0; i < count; ++i) {
    coords[i] = count == 1 ? lo
                           : lo + (hi - lo) * static_cast<double>(i) /
                                      static_cast<double>(count - 1);
    labels[i] = format_double(coords[i]);
  }
  return PointSet::from_coords_1d(std::move(labels), std::move(coords));
}

PointSet default_carrier(const std::string& id) {
  entry_for(id);
  if (id == "ex3_6") return grid_carrier_1d(0.0, 1.0, 11);  // {0, 0.1, ..., 1}
  if (id == "ex3_7") return PointSet::from_coords_1d({"1", "2", "5"}, {1.0, 2.0, 5.0});
  if (id == "ex4_6") return PointSet::from_coords_1d({"0", "1"}, {0.0, 1.0});
  return PointSet::from_labels({"p", "q", "r"});
}

FuzzyMetricSpace fixture(const std::string& id, const PointSet& carrier) {
  const CatalogEntry& e = entry_for(id);
  std::size_t n = carrier.size();
  if (e.needs_coords && !carrier.has_coords())
    throw std::invalid_argument("fixture \"" + id +
                                "\" needs carrier coordinates to read |x-y|");
  std::vector<Membership> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (e.needs_coords) {
        double c = euclidean(carrier, i, j);
        if (!(c > 0))
          throw std::invalid_argument("carrier points \"" + carrier.labels[i] + "\" and \"" +
                                      carrier.labels[j] + "\" coincide");
        upper.push_back(distance_profile(id, c));
      } else {
        upper.push_back(coordinate_free_profile(id));
      }
    }
  }
  return FuzzyMetricSpace(carrier, std::move(upper));
}

FuzzyMetricSpace fixture(const std::string& id) { return fixture(id, default_carrier(id)); }

FuzzyMetricSpace standard_space(const CrispMetric& d) { return mnk_fuzzify(d, 1.0, 1.0, 1.0); }

FuzzyMetricSpace indicator_space(const CrispMetric& d) { return indicator_fuzzify(d); }

FuzzyMetricSpace mnk_space(const CrispMetric& d, double m, double n, double k) {
  return mnk_fuzzify(d, m, n, k);
}

}  // namespace fuzmet

#include "fuzmet/point_set.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace fuzmet {

namespace {

void validate_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) throw std::invalid_argument("point set must be nonempty");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw std::invalid_argument("point labels must be nonempty strings");
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate point label \"" + l + "\"");
  }
}

}  // namespace

PointSet PointSet::from_labels(std::vector<std::string> labels) {
  validate_labels(labels);
  return PointSet{std::move(labels), {}};
}

PointSet PointSet::from_coords(std::vector<std::string> labels,
                               std::vector<std::vector<double>> coords) {
  validate_labels(labels);
  if (coords.size() != labels.size())
    throw std::invalid_argument("need exactly one coordinate vector per label");
  std::size_t dim = coords.front().size();
  if (dim == 0) throw std::invalid_argument("coordinates must have at least one dimension");
  for (const auto& c : coords) {
    if (c.size() != dim)
      throw std::invalid_argument("all coordinate vectors must share one dimension");
    for (double v : c)
      if (!std::isfinite(v)) throw std::invalid_argument("coordinates must be finite");
  }
  return PointSet{std::move(labels), std::move(coords)};
}

PointSet PointSet::from_coords_1d(std::vector<std::string> labels, std::vector<double> coords) {
  std::vector<std::vector<double>> wrapped;
  wrapped.reserve(coords.size());
  for (double v : coords) wrapped.push_back({v});
  return from_coords(std::move(labels), std::move(wrapped));
}

std::optional<std::size_t> PointSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  return std::nullopt;
}

double euclidean(const PointSet& ps, std::size_t i, std::size_t j) {
  if (!ps.has_coords()) throw std::logic_error("point set has no coordinates");
  double sum = 0;
  for (std::size_t d = 0; d < ps.coords[i].size(); ++d) {
    double diff = ps.coords[i][d] - ps.coords[j][d];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

}  // namespace fuzmet

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fuzmet {

// Finite labelled carrier set. Coordinates are optional; when present there is
// one coordinate vector per label, all of the same dimension, and Euclidean
// distances between points are defined.
struct PointSet {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> coords;  // empty, or one entry per label

  static PointSet from_labels(std::vector<std::string> labels);
  static PointSet from_coords(std::vector<std::string> labels,
                              std::vector<std::vector<double>> coords);
  static PointSet from_coords_1d(std::vector<std::string> labels, std::vector<double> coords);

  std::size_t size() const { return labels.size(); }
  bool has_coords() const { return !coords.empty(); }
  std::optional<std::size_t> index_of(std::string_view label) const;
};

double euclidean(const PointSet& ps, std::size_t i, std::size_t j);

}  // namespace fuzmet

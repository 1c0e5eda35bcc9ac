#include "tgeom/sigma_space.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "tgeom/error.hpp"

namespace tgeom {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kDuplicateEntry: return "DuplicateEntry";
    case ErrorCode::kConflictingEntry: return "ConflictingEntry";
    case ErrorCode::kMissingEntry: return "MissingEntry";
    case ErrorCode::kNonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptySpace: return "EmptySpace";
    case ErrorCode::kInvalidGrid: return "InvalidGrid";
    case ErrorCode::kUnknownPoint: return "UnknownPoint";
    case ErrorCode::kChainMismatch: return "ChainMismatch";
    case ErrorCode::kNotGuaranteed: return "NotGuaranteed";
    case ErrorCode::kSearchLimitExceeded: return "SearchLimitExceeded";
    case ErrorCode::kOracleLimitExceeded: return "OracleLimitExceeded";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

namespace {

void check_tolerance(double tolerance) {
  if (!std::isfinite(tolerance) || tolerance < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "tolerance must be a finite non-negative number");
  }
}

}  // namespace

void SigmaSpace::index_labels() {
  index_.clear();
  index_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!index_.emplace(points_[i].label(), i).second) {
      throw Error(ErrorCode::kDuplicateLabel,
                  "duplicate point label '" + points_[i].label() + "'");
    }
  }
}

SigmaSpace SigmaSpace::from_matrix(std::vector<PointId> points,
                                   std::vector<double> values,
                                   double tolerance) {
  check_tolerance(tolerance);
  if (points.empty()) {
    throw Error(ErrorCode::kEmptySpace, "a σ-space needs at least one point");
  }
  const std::size_t n = points.size();
  if (values.size() != n * n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "σ matrix must have " + std::to_string(n * n) + " entries");
  }
  SigmaSpace space;
  space.points_ = std::move(points);
  space.values_ = std::move(values);
  space.tolerance_ = tolerance;
  space.index_labels();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(space.sigma(i, j))) {
        throw Error(ErrorCode::kNonFiniteValue,
                    "σ(" + space.points_[i].label() + "," +
                        space.points_[j].label() + ") is not finite");
      }
    }
    if (std::abs(space.sigma(i, i)) > tolerance) {
      throw Error(ErrorCode::kNonzeroDiagonal,
                  "σ(" + space.points_[i].label() + "," +
                      space.points_[i].label() + ") must be 0");
    }
  }
  return space;
}

SigmaSpace SigmaSpace::from_coordinates(std::vector<PointId> points,
                                        std::vector<std::vector<double>> coords,
                                        double tolerance) {
  if (points.size() != coords.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "one coordinate vector is required per point");
  }
  if (points.empty()) {
    throw Error(ErrorCode::kEmptySpace, "a σ-space needs at least one point");
  }
  const std::size_t dim = coords.front().size();
  if (dim == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "coordinate dimension must be >= 1");
  }
  std::vector<double> flat;
  flat.reserve(coords.size() * dim);
  for (const auto& row : coords) {
    if (row.size() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "all coordinate vectors must have dimension " + std::to_string(dim));
    }
    for (double x : row) {
      if (!std::isfinite(x)) {
        throw Error(ErrorCode::kNonFiniteValue, "coordinates must be finite");
      }
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }

  const std::size_t n = points.size();
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::span<const double> x(flat.data() + i * dim, dim);
    for (std::size_t j = 0; j < n; ++j) {
      values[i * n + j] = euclidean_sigma(x, {flat.data() + j * dim, dim});
    }
  }

  SigmaSpace space = from_matrix(std::move(points), std::move(values), tolerance);
  space.backing_ = Backing::kCoordinates;
  space.dimension_ = dim;
  space.coords_ = std::move(flat);
  return space;
}

std::optional<std::size_t> SigmaSpace::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SigmaSpace::index_of(const PointId& point) const {
  if (auto index = find(point.label())) return *index;
  throw Error(ErrorCode::kUnknownPoint, "unknown point '" + point.label() + "'");
}

std::span<const double> SigmaSpace::coordinates(std::size_t index) const {
  if (backing_ != Backing::kCoordinates) {
    throw Error(ErrorCode::kInvalidArgument, "space is not coordinate-backed");
  }
  if (index >= points_.size()) {
    throw Error(ErrorCode::kUnknownPoint, "point index out of range");
  }
  return {coords_.data() + index * dimension_, dimension_};
}

SigmaSpace SigmaSpace::with_tolerance(double tolerance) const {
  check_tolerance(tolerance);
  SigmaSpace copy = *this;
  for (std::size_t i = 0; i < size(); ++i) {
    if (std::abs(sigma(i, i)) > tolerance) {
      throw Error(ErrorCode::kNonzeroDiagonal,
                  "σ(" + points_[i].label() + "," + points_[i].label() +
                      ") exceeds the new tolerance");
    }
  }
  copy.tolerance_ = tolerance;
  return copy;
}

SigmaSpace SigmaSpace::to_table() const {
  SigmaSpace copy = *this;
  copy.backing_ = Backing::kTable;
  copy.dimension_ = 0;
  copy.coords_.clear();
  return copy;
}

SigmaSpace build_finite_table(const std::vector<std::string>& labels,
                              const std::vector<SigmaEntry>& entries,
                              double tolerance) {
  check_tolerance(tolerance);
  std::vector<PointId> points;
  points.reserve(labels.size());
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& label : labels) {
    if (!index.emplace(label, points.size()).second) {
      throw Error(ErrorCode::kDuplicateLabel, "duplicate point label '" + label + "'");
    }
    points.emplace_back(label);
  }
  if (points.empty()) {
    throw Error(ErrorCode::kEmptySpace, "a σ-space needs at least one point");
  }

  const std::size_t n = points.size();
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) {
      throw Error(ErrorCode::kUnknownPoint, "unknown point '" + label + "'");
    }
    return it->second;
  };

  std::vector<double> values(n * n, 0.0);
  std::vector<bool> given(n * n, false);
  for (const auto& entry : entries) {
    const std::size_t i = lookup(entry.from);
    const std::size_t j = lookup(entry.to);
    if (given[i * n + j]) {
      throw Error(ErrorCode::kDuplicateEntry,
                  "σ(" + entry.from + "," + entry.to + ") given twice");
    }
    if (!std::isfinite(entry.value)) {
      throw Error(ErrorCode::kNonFiniteValue,
                  "σ(" + entry.from + "," + entry.to + ") is not finite");
    }
    if (i == j && std::abs(entry.value) > tolerance) {
      throw Error(ErrorCode::kNonzeroDiagonal,
                  "σ(" + entry.from + "," + entry.to + ") must be 0");
    }
    given[i * n + j] = true;
    values[i * n + j] = entry.value;
  }

  bool mirrored = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || given[i * n + j]) continue;
      if (!given[j * n + i]) {
        throw Error(ErrorCode::kMissingEntry, "missing σ(" + labels[i] + "," +
                                                  labels[j] + ")");
      }
      mirrored = true;
    }
  }
  if (mirrored) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool forward = given[i * n + j];
        const bool backward = given[j * n + i];
        if (forward && backward &&
            std::abs(values[i * n + j] - values[j * n + i]) > tolerance) {
          throw Error(ErrorCode::kConflictingEntry,
                      "σ(" + labels[i] + "," + labels[j] + ") and σ(" + labels[j] +
                          "," + labels[i] + ") conflict in a symmetric table");
        }
        if (!backward) values[j * n + i] = values[i * n + j];
        if (!forward) values[i * n + j] = values[j * n + i];
      }
    }
  }
  return SigmaSpace::from_matrix(std::move(points), std::move(values), tolerance);
}

double euclidean_sigma(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "euclidean_sigma: dimensions " + std::to_string(x.size()) + " and " +
                    std::to_string(y.size()) + " differ");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    sum += d * d;
  }
  return 0.5 * sum;
}

std::string grid_label(const GridPoint& point) {
  std::string label = "p";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i > 0) label += '_';
    label += std::to_string(point[i]);
  }
  return label;
}

SigmaSpace build_grid_space(const GridSpec& spec, double tolerance) {
  if (spec.dim == 0 || spec.size == 0) {
    throw Error(ErrorCode::kInvalidGrid, "grid dimension and size must be positive");
  }
  double total = 1.0;
  for (std::size_t d = 0; d < spec.dim; ++d) total *= static_cast<double>(spec.size);
  if (total > 1e6) {
    throw Error(ErrorCode::kInvalidGrid, "grid has too many points");
  }
  for (const auto& p : spec.deleted) {
    bool inside = p.size() == spec.dim;
    for (int c : p) inside = inside && c >= 0 && static_cast<std::size_t>(c) < spec.size;
    if (!inside) {
      throw Error(ErrorCode::kInvalidGrid,
                  "deleted point " + grid_label(p) + " is not on the grid");
    }
  }

  std::vector<PointId> points;
  std::vector<std::vector<double>> coords;
  GridPoint current(spec.dim, 0);
  const auto count = static_cast<std::size_t>(total);
  for (std::size_t k = 0; k < count; ++k) {
    // Decode k with the first coordinate most significant.
    std::size_t rest = k;
    for (std::size_t d = spec.dim; d-- > 0;) {
      current[d] = static_cast<int>(rest % spec.size);
      rest /= spec.size;
    }
    if (spec.deleted.contains(current)) continue;
    points.emplace_back(grid_label(current));
    coords.emplace_back(current.begin(), current.end());
  }
  if (points.empty()) {
    throw Error(ErrorCode::kEmptySpace, "every grid point was deleted");
  }
  return SigmaSpace::from_coordinates(std::move(points), std::move(coords), tolerance);
}

bool is_symmetric(const SigmaSpace& space) {
  const std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(space.sigma(i, j) - space.sigma(j, i)) > space.tolerance()) {
        return false;
      }
    }
  }
  return true;
}

SigmaSpace perturb_table(const SigmaSpace& space,
                         const std::vector<SigmaEntry>& deltas) {
  std::vector<double> values(space.values().begin(), space.values().end());
  const std::size_t n = space.size();
  for (const auto& delta : deltas) {
    const std::size_t i = space.index_of(PointId(delta.from));
    const std::size_t j = space.index_of(PointId(delta.to));
    values[i * n + j] += delta.value;
  }
  return SigmaSpace::from_matrix(space.points(), std::move(values), space.tolerance());
}

}  // namespace tgeom

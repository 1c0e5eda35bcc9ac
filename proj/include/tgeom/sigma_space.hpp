#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tgeom {

// Label of one element of Ω. Comparison is exact string equality.
class PointId {
 public:
  PointId() = default;
  explicit PointId(std::string label) : label_(std::move(label)) {}

  const std::string& label() const noexcept { return label_; }

  friend bool operator==(const PointId&, const PointId&) = default;
  friend auto operator<=>(const PointId&, const PointId&) = default;

 private:
  std::string label_;
};

enum class Backing { kTable, kCoordinates };

// A finite σ-space {σ, Ω}: an ordered point list plus the world function on
// every ordered pair. Immutable once built; every mutating operation returns
// a new space.
//
// The world function is stored as a dense row-major |Ω|×|Ω| matrix for both
// backings. For coordinate-backed spaces the matrix is filled from
// euclidean_sigma at construction and the coordinates are kept alongside.
class SigmaSpace {
 public:
  static constexpr double kDefaultTolerance = 1e-9;

  // Validates |σ(P,P)| ≤ tolerance, finiteness and label uniqueness.
  static SigmaSpace from_matrix(std::vector<PointId> points,
                                std::vector<double> values,
                                double tolerance = kDefaultTolerance);

  // All coordinate rows must share one dimension n ≥ 1.
  static SigmaSpace from_coordinates(std::vector<PointId> points,
                                     std::vector<std::vector<double>> coords,
                                     double tolerance = kDefaultTolerance);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<PointId>& points() const noexcept { return points_; }
  const PointId& point(std::size_t index) const { return points_.at(index); }

  std::optional<std::size_t> find(std::string_view label) const;
  // Throws Error(kUnknownPoint).
  std::size_t index_of(const PointId& point) const;
  bool contains(const PointId& point) const { return find(point.label()).has_value(); }

  double sigma(std::size_t from, std::size_t to) const noexcept {
    return values_[from * points_.size() + to];
  }
  double sigma(const PointId& from, const PointId& to) const {
    return sigma(index_of(from), index_of(to));
  }
  std::span<const double> values() const noexcept { return values_; }

  double tolerance() const noexcept { return tolerance_; }
  Backing backing() const noexcept { return backing_; }

  // 0 for table-backed spaces.
  std::size_t dimension() const noexcept { return dimension_; }
  // Throws Error(kInvalidArgument) on a table-backed space.
  std::span<const double> coordinates(std::size_t index) const;

  SigmaSpace with_tolerance(double tolerance) const;
  // Same points and σ values, Table backing.
  SigmaSpace to_table() const;

 private:
  SigmaSpace() = default;
  void index_labels();

  std::vector<PointId> points_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> values_;
  double tolerance_ = kDefaultTolerance;
  Backing backing_ = Backing::kTable;
  std::size_t dimension_ = 0;
  std::vector<double> coords_;
};

// One σ(from, to) value, or a delta on it for perturb_table.
struct SigmaEntry {
  std::string from;
  std::string to;
  double value = 0.0;
};

// Builds a table-backed space. Each ordered pair P≠Q must be covered either by
// its own entry or, when absent, by the entry for (Q,P), which is mirrored.
// When some pairs are mirrored the table is read as symmetric, and a pair given
// in both orders must then agree within `tolerance`. Diagonal entries are
// optional and default to 0.
SigmaSpace build_finite_table(const std::vector<std::string>& labels,
                              const std::vector<SigmaEntry>& entries,
                              double tolerance = SigmaSpace::kDefaultTolerance);

// ½·Σ(xᵢ−yᵢ)². Throws Error(kDimensionMismatch).
double euclidean_sigma(std::span<const double> x, std::span<const double> y);

using GridPoint = std::vector<int>;

struct GridSpec {
  std::size_t dim = 1;
  std::size_t size = 1;
  std::set<GridPoint> deleted;
};

// "p0_1" for (0,1).
std::string grid_label(const GridPoint& point);

// Integer grid {0..size-1}^dim minus `deleted`, σ = euclidean_sigma. Points are
// ordered with the first coordinate most significant.
SigmaSpace build_grid_space(const GridSpec& spec,
                            double tolerance = SigmaSpace::kDefaultTolerance);

bool is_symmetric(const SigmaSpace& space);

// σ'(P,Q) = σ(P,Q) + delta on each listed ordered pair; the result is
// table-backed and re-validated.
SigmaSpace perturb_table(const SigmaSpace& space,
                         const std::vector<SigmaEntry>& deltas);

}  // namespace tgeom

#include "tgeom/random_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "tgeom/error.hpp"

namespace tgeom {

SigmaSpace random_table(std::mt19937_64& rng, const RandomTableOptions& options) {
  if (options.points == 0 || !(options.low <= options.high)) {
    throw Error(ErrorCode::kInvalidArgument, "random_table: bad options");
  }
  std::uniform_real_distribution<double> real(options.low, options.high);
  std::uniform_int_distribution<long long> whole(
      static_cast<long long>(std::ceil(options.low)),
      static_cast<long long>(std::floor(options.high)));
  auto draw = [&] {
    return options.integer ? static_cast<double>(whole(rng)) : real(rng);
  };

  const std::size_t n = options.points;
  std::vector<PointId> points;
  for (std::size_t i = 0; i < n; ++i) points.emplace_back("x" + std::to_string(i));
  std::vector<double> values(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      values[i * n + j] = draw();
      values[j * n + i] = options.symmetric ? values[i * n + j] : draw();
    }
  }
  return SigmaSpace::from_matrix(std::move(points), std::move(values), options.tolerance);
}

GridSpec random_deleted_grid(std::mt19937_64& rng, std::size_t dim, std::size_t size,
                             std::size_t min_deleted, std::size_t max_deleted) {
  GridSpec spec{dim, size, {}};
  std::size_t total = 1;
  for (std::size_t d = 0; d < dim; ++d) total *= size;
  max_deleted = std::min(max_deleted, total - 1);
  min_deleted = std::min(min_deleted, max_deleted);
  std::uniform_int_distribution<std::size_t> how_many(min_deleted, max_deleted);
  const std::size_t k = how_many(rng);

  std::vector<std::size_t> cells(total);
  std::iota(cells.begin(), cells.end(), std::size_t{0});
  std::shuffle(cells.begin(), cells.end(), rng);
  for (std::size_t c = 0; c < k; ++c) {
    GridPoint p(dim);
    std::size_t rest = cells[c];
    for (std::size_t d = dim; d-- > 0;) {
      p[d] = static_cast<int>(rest % size);
      rest /= size;
    }
    spec.deleted.insert(p);
  }
  return spec;
}

}  // namespace tgeom

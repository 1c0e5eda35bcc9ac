#pragma once

#include <cstddef>
#include <random>

#include "tgeom/sigma_space.hpp"

namespace tgeom {

struct RandomTableOptions {
  std::size_t points = 4;
  double low = 0.0;
  double high = 10.0;
  bool symmetric = true;
  // Draw integers in [low, high] instead of reals.
  bool integer = false;
  double tolerance = SigmaSpace::kDefaultTolerance;
};

// Labels x0, x1, ...; zero diagonal.
SigmaSpace random_table(std::mt19937_64& rng, const RandomTableOptions& options);

// size^dim grid with a uniformly drawn number of deletions in
// [min_deleted, max_deleted], never deleting every point.
GridSpec random_deleted_grid(std::mt19937_64& rng, std::size_t dim, std::size_t size,
                             std::size_t min_deleted, std::size_t max_deleted);

}  // namespace tgeom

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tgeom/linear_ops.hpp"
#include "tgeom/sigma_space.hpp"
#include "tgeom/vector_algebra.hpp"

// Naive reference implementations. They touch a SigmaSpace only through
// index_of() and sigma(i, j) and share no other code with the main paths.
namespace tgeom::oracle {

inline constexpr std::size_t kOracleLimit = 12;

// Σ (p1ᵢ−p0ᵢ)(q1ᵢ−q0ᵢ). Throws Error(kDimensionMismatch).
double euclid_dot_oracle(std::span<const double> p0, std::span<const double> p1,
                         std::span<const double> q0, std::span<const double> q1);

bool brute_force_equivalent(const SigmaSpace& space, const Vector& v, const Vector& w);

// Quadruple loop over (S₀,S₁,Q₀,Q₁); sorted by point-list order.
// Throws Error(kOracleLimitExceeded) above kOracleLimit points.
std::vector<Vector> brute_force_solve(const SigmaSpace& space, Coefficients c,
                                      const Vector& v, const Vector& w);

}  // namespace tgeom::oracle

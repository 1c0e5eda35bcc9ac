#pragma once

#include <compare>
#include <cstddef>
#include <string_view>
#include <vector>

#include "tgeom/sigma_space.hpp"

namespace tgeom {

// Ordered point pair P₀P₁. Not a free vector: it stays anchored to its
// endpoints and only has meaning relative to a SigmaSpace.
struct Vector {
  PointId origin;
  PointId end;

  friend bool operator==(const Vector&, const Vector&) = default;
  friend auto operator<=>(const Vector&, const Vector&) = default;
};

// Index form of Vector, used by the hot loops. Ordering is by point-list
// position, which is the ordering every sorted result in the library uses.
struct IndexVector {
  std::size_t origin = 0;
  std::size_t end = 0;

  friend bool operator==(const IndexVector&, const IndexVector&) = default;
  friend auto operator<=>(const IndexVector&, const IndexVector&) = default;
};

// Throws Error(kUnknownPoint).
IndexVector resolve(const SigmaSpace& space, const Vector& v);
Vector to_vector(const SigmaSpace& space, IndexVector v);

// σ(P₀,Q₁) + σ(P₁,Q₀) − σ(P₀,Q₀) − σ(P₁,Q₁), summed left to right.
inline double scalar_product(const SigmaSpace& space, IndexVector v, IndexVector w) {
  return space.sigma(v.origin, w.end) + space.sigma(v.end, w.origin) -
         space.sigma(v.origin, w.origin) - space.sigma(v.end, w.end);
}

double scalar_product(const SigmaSpace& space, const Vector& v, const Vector& w);
double norm_squared(const SigmaSpace& space, const Vector& v);

// Universal identities of the scalar product, checked by verify_identities.
enum class Identity {
  kSymmetry,            // (P₀P₁.Q₀Q₁) = (Q₀Q₁.P₀P₁), symmetric spaces only
  kAntisymmetrySecond,  // (P₀P₁.Q₀Q₁) = −(P₀P₁.Q₁Q₀)
  kAntisymmetryFirst,   // (Q₀Q₁.P₀P₁) = −(Q₀Q₁.P₁P₀)
  kChainFirst,          // (P₀P₁.Q) + (P₁P₂.Q) = (P₀P₂.Q)
  kChainSecond,         // (Q.P₀P₁) + (Q.P₁P₂) = (Q.P₀P₂)
};

std::string_view to_string(Identity identity);

struct IdentityViolation {
  Identity identity;
  // Point indices: (P₀,P₁,Q₀,Q₁) for four-point identities,
  // (P₀,P₁,P₂,Q₀,Q₁) for the chain identities.
  std::vector<std::size_t> points;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct IdentityReport {
  std::size_t checked = 0;
  // False when the space is not symmetric and kSymmetry was skipped.
  bool symmetry_checked = false;
  // Sorted by identity, then by point tuple.
  std::vector<IdentityViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

inline constexpr std::size_t kDefaultIdentityLimit = 12;

// Exhaustive check over every 4- and 5-tuple of points (O(|Ω|⁵)). Spaces
// larger than `max_points` are refused with Error(kSearchLimitExceeded)
// rather than sampled.
IdentityReport verify_identities(const SigmaSpace& space,
                                 std::size_t max_points = kDefaultIdentityLimit);

}  // namespace tgeom

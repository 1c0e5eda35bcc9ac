#include "tgeom/vector_algebra.hpp"

#include <algorithm>
#include <cmath>

#include "tgeom/error.hpp"

namespace tgeom {

IndexVector resolve(const SigmaSpace& space, const Vector& v) {
  return {space.index_of(v.origin), space.index_of(v.end)};
}

Vector to_vector(const SigmaSpace& space, IndexVector v) {
  return {space.point(v.origin), space.point(v.end)};
}

double scalar_product(const SigmaSpace& space, const Vector& v, const Vector& w) {
  return scalar_product(space, resolve(space, v), resolve(space, w));
}

double norm_squared(const SigmaSpace& space, const Vector& v) {
  const IndexVector iv = resolve(space, v);
  return scalar_product(space, iv, iv);
}

std::string_view to_string(Identity identity) {
  switch (identity) {
    case Identity::kSymmetry: return "symmetry";
    case Identity::kAntisymmetrySecond: return "antisymmetry-second";
    case Identity::kAntisymmetryFirst: return "antisymmetry-first";
    case Identity::kChainFirst: return "chain-first";
    case Identity::kChainSecond: return "chain-second";
  }
  return "unknown";
}

IdentityReport verify_identities(const SigmaSpace& space, std::size_t max_points) {
  const std::size_t n = space.size();
  if (n > max_points) {
    throw Error(ErrorCode::kSearchLimitExceeded,
                "identity verification is limited to " + std::to_string(max_points) +
                    " points, space has " + std::to_string(n));
  }
  const double eps = space.tolerance();
  IdentityReport report;
  report.symmetry_checked = is_symmetric(space);

  auto check = [&](Identity id, std::vector<std::size_t> tuple, double lhs, double rhs) {
    ++report.checked;
    if (std::abs(lhs - rhs) > eps) {
      report.violations.push_back({id, std::move(tuple), lhs, rhs});
    }
  };

  for (std::size_t p0 = 0; p0 < n; ++p0) {
    for (std::size_t p1 = 0; p1 < n; ++p1) {
      const IndexVector p{p0, p1};
      const IndexVector p_rev{p1, p0};
      for (std::size_t q0 = 0; q0 < n; ++q0) {
        for (std::size_t q1 = 0; q1 < n; ++q1) {
          const IndexVector q{q0, q1};
          const IndexVector q_rev{q1, q0};
          const double pq = scalar_product(space, p, q);
          const double qp = scalar_product(space, q, p);
          if (report.symmetry_checked) {
            check(Identity::kSymmetry, {p0, p1, q0, q1}, pq, qp);
          }
          check(Identity::kAntisymmetrySecond, {p0, p1, q0, q1}, pq,
                -scalar_product(space, p, q_rev));
          check(Identity::kAntisymmetryFirst, {p0, p1, q0, q1}, qp,
                -scalar_product(space, q, p_rev));

          for (std::size_t p2 = 0; p2 < n; ++p2) {
            const IndexVector p12{p1, p2};
            const IndexVector p02{p0, p2};
            check(Identity::kChainFirst, {p0, p1, p2, q0, q1},
                  pq + scalar_product(space, p12, q), scalar_product(space, p02, q));
            check(Identity::kChainSecond, {p0, p1, p2, q0, q1},
                  qp + scalar_product(space, q, p12), scalar_product(space, q, p02));
          }
        }
      }
    }
  }

  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const IdentityViolation& a, const IdentityViolation& b) {
                     if (a.identity != b.identity) return a.identity < b.identity;
                     return a.points < b.points;
                   });
  return report;
}

}  // namespace tgeom

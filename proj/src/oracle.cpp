#include "tgeom/oracle.hpp"

#include <cmath>

#include "tgeom/error.hpp"

namespace tgeom::oracle {

namespace {

double dot(const SigmaSpace& s, std::size_t p0, std::size_t p1, std::size_t q0,
           std::size_t q1) {
  return s.sigma(p0, q1) + s.sigma(p1, q0) - s.sigma(p0, q0) - s.sigma(p1, q1);
}

}  // namespace

double euclid_dot_oracle(std::span<const double> p0, std::span<const double> p1,
                         std::span<const double> q0, std::span<const double> q1) {
  if (p0.size() != p1.size() || p0.size() != q0.size() || p0.size() != q1.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "euclid_dot_oracle: dimensions differ");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p0.size(); ++i) {
    sum += (p1[i] - p0[i]) * (q1[i] - q0[i]);
  }
  return sum;
}

bool brute_force_equivalent(const SigmaSpace& space, const Vector& v, const Vector& w) {
  const std::size_t p0 = space.index_of(v.origin);
  const std::size_t p1 = space.index_of(v.end);
  const std::size_t r0 = space.index_of(w.origin);
  const std::size_t r1 = space.index_of(w.end);
  const double eps = space.tolerance();
  for (std::size_t q0 = 0; q0 < space.size(); ++q0) {
    for (std::size_t q1 = 0; q1 < space.size(); ++q1) {
      if (std::abs(dot(space, p0, p1, q0, q1) - dot(space, r0, r1, q0, q1)) > eps) {
        return false;
      }
      if (std::abs(dot(space, q0, q1, p0, p1) - dot(space, q0, q1, r0, r1)) > eps) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Vector> brute_force_solve(const SigmaSpace& space, Coefficients c,
                                      const Vector& v, const Vector& w) {
  const std::size_t p0 = space.index_of(v.origin);
  const std::size_t p1 = space.index_of(v.end);
  const std::size_t r0 = space.index_of(w.origin);
  const std::size_t r1 = space.index_of(w.end);
  const std::size_t n = space.size();
  if (n > kOracleLimit) {
    throw Error(ErrorCode::kOracleLimitExceeded,
                "brute_force_solve is limited to " + std::to_string(kOracleLimit) +
                    " points");
  }
  const double eps = space.tolerance();

  std::vector<Vector> out;
  for (std::size_t s0 = 0; s0 < n; ++s0) {
    for (std::size_t s1 = 0; s1 < n; ++s1) {
      bool ok = true;
      for (std::size_t q0 = 0; q0 < n && ok; ++q0) {
        for (std::size_t q1 = 0; q1 < n && ok; ++q1) {
          const double first =
              c.alpha * dot(space, p0, p1, q0, q1) + c.beta * dot(space, r0, r1, q0, q1);
          const double second =
              c.alpha * dot(space, q0, q1, p0, p1) + c.beta * dot(space, q0, q1, r0, r1);
          ok = std::abs(dot(space, s0, s1, q0, q1) - first) <= eps &&
               std::abs(dot(space, q0, q1, s0, s1) - second) <= eps;
        }
      }
      if (ok) out.push_back({space.point(s0), space.point(s1)});
    }
  }
  return out;
}

}  // namespace tgeom::oracle

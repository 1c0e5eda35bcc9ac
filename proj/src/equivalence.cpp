#include "tgeom/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace tgeom {

namespace {

// Walks the probes in fingerprint order and returns the first disagreement.
std::optional<Counterexample> first_disagreement(const SigmaSpace& space,
                                                 IndexVector v, IndexVector w) {
  const std::size_t n = space.size();
  const double eps = space.tolerance();
  for (ProbeSlot slot : {ProbeSlot::kFirst, ProbeSlot::kSecond}) {
    for (std::size_t q0 = 0; q0 < n; ++q0) {
      for (std::size_t q1 = 0; q1 < n; ++q1) {
        const IndexVector q{q0, q1};
        const double lhs = slot == ProbeSlot::kFirst ? scalar_product(space, v, q)
                                                     : scalar_product(space, q, v);
        const double rhs = slot == ProbeSlot::kFirst ? scalar_product(space, w, q)
                                                     : scalar_product(space, q, w);
        if (std::abs(lhs - rhs) > eps) {
          return Counterexample{space.point(q0), space.point(q1), slot, lhs, rhs};
        }
      }
    }
  }
  return std::nullopt;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Smaller root wins so roots are deterministic.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Fingerprint fingerprint(const SigmaSpace& space, IndexVector v) {
  const std::size_t n = space.size();
  Fingerprint values(2 * n * n);
  for (std::size_t q0 = 0; q0 < n; ++q0) {
    for (std::size_t q1 = 0; q1 < n; ++q1) {
      const IndexVector q{q0, q1};
      values[q0 * n + q1] = scalar_product(space, v, q);
      values[n * n + q0 * n + q1] = scalar_product(space, q, v);
    }
  }
  return values;
}

Fingerprint fingerprint(const SigmaSpace& space, const Vector& v) {
  return fingerprint(space, resolve(space, v));
}

bool fingerprints_agree(std::span<const double> a, std::span<const double> b,
                        double tolerance) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > tolerance) return false;
  }
  return true;
}

EquivalenceWitness equivalent(const SigmaSpace& space, const Vector& v, const Vector& w) {
  auto counterexample = first_disagreement(space, resolve(space, v), resolve(space, w));
  return {!counterexample.has_value(), std::move(counterexample)};
}

bool are_equivalent(const SigmaSpace& space, IndexVector v, IndexVector w) {
  return !first_disagreement(space, v, w).has_value();
}

Partition equivalence_classes(const SigmaSpace& space) {
  const std::size_t n = space.size();
  const std::size_t count = n * n;
  const std::size_t width = 2 * n * n;
  const double eps = space.tolerance();

  std::vector<double> prints(count * width);
  for (std::size_t i = 0; i < count; ++i) {
    const Fingerprint f = fingerprint(space, IndexVector{i / n, i % n});
    std::copy(f.begin(), f.end(), prints.begin() + static_cast<std::ptrdiff_t>(i * width));
  }
  auto row = [&](std::size_t i) {
    return std::span<const double>(prints.data() + i * width, width);
  };

  // Candidate pairs come from a sweep over a positive-weighted projection of
  // the fingerprints: agreeing fingerprints have projections within
  // eps·Σw plus rounding, so no agreeing pair falls outside the window.
  std::mt19937_64 rng(0x7465'6f6d'5f70'726fULL);
  std::uniform_real_distribution<double> weight_dist(0.5, 1.5);
  std::vector<double> weights(width);
  for (double& w : weights) w = weight_dist(rng);
  const double weight_sum = std::accumulate(weights.begin(), weights.end(), 0.0);

  std::vector<double> projection(count, 0.0);
  double magnitude = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    double proj = 0.0;
    double mag = 0.0;
    const auto f = row(i);
    for (std::size_t k = 0; k < width; ++k) {
      proj += weights[k] * f[k];
      mag += weights[k] * std::abs(f[k]);
    }
    projection[i] = proj;
    magnitude = std::max(magnitude, mag);
  }
  const double rounding =
      4.0 * static_cast<double>(width) * std::numeric_limits<double>::epsilon() * magnitude;
  const double window = eps * weight_sum * (1.0 + 1e-12) + rounding;

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return projection[a] < projection[b];
  });

  DisjointSets sets(count);
  for (std::size_t a = 0; a < count; ++a) {
    const std::size_t i = order[a];
    for (std::size_t b = a + 1; b < count; ++b) {
      const std::size_t j = order[b];
      if (projection[j] - projection[i] > window) break;
      if (sets.find(i) == sets.find(j)) continue;
      if (fingerprints_agree(row(i), row(j), eps)) sets.unite(i, j);
    }
  }

  std::vector<std::vector<std::size_t>> members(count);
  for (std::size_t i = 0; i < count; ++i) members[sets.find(i)].push_back(i);

  Partition partition;
  for (const auto& group : members) {
    if (group.empty()) continue;
    // Indices i = origin·n + end already sort like IndexVector.
    std::vector<Vector> cls;
    cls.reserve(group.size());
    for (std::size_t a = 0; a < group.size(); ++a) {
      cls.push_back(to_vector(space, {group[a] / n, group[a] % n}));
      for (std::size_t b = a + 1; b < group.size() && !partition.closure_applied; ++b) {
        if (!fingerprints_agree(row(group[a]), row(group[b]), eps)) {
          partition.closure_applied = true;
        }
      }
    }
    partition.classes.push_back(std::move(cls));
  }
  return partition;
}

}  // namespace tgeom

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tgeom/sigma_space.hpp"
#include "tgeom/vector_algebra.hpp"

namespace tgeom {

enum class ProbeSlot {
  kFirst,   // (v.Q₀Q₁) against (w.Q₀Q₁)
  kSecond,  // (Q₀Q₁.v) against (Q₀Q₁.w)
};

struct Counterexample {
  PointId q0;
  PointId q1;
  ProbeSlot slot = ProbeSlot::kFirst;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct EquivalenceWitness {
  bool equivalent = false;
  // Present iff !equivalent.
  std::optional<Counterexample> counterexample;
};

// Scalar products of a vector against every ordered probe pair (Q₀,Q₁), in
// both argument slots. Layout, with n = |Ω| and k = index(Q₀)·n + index(Q₁):
//   [k]       = (v . Q₀Q₁)
//   [n² + k]  = (Q₀Q₁ . v)
// This is also the probe order used for counterexamples: every first-slot
// probe precedes every second-slot probe.
using Fingerprint = std::vector<double>;

Fingerprint fingerprint(const SigmaSpace& space, IndexVector v);
Fingerprint fingerprint(const SigmaSpace& space, const Vector& v);

bool fingerprints_agree(std::span<const double> a, std::span<const double> b,
                        double tolerance);

EquivalenceWitness equivalent(const SigmaSpace& space, const Vector& v, const Vector& w);
bool are_equivalent(const SigmaSpace& space, IndexVector v, IndexVector w);

struct Partition {
  // Each class is sorted; classes are ordered by their first member.
  std::vector<std::vector<Vector>> classes;
  // True when ε-agreement turned out not to be transitive on this space and
  // the classes are the connected components of the agreement graph instead
  // of cliques of mutually equivalent vectors.
  bool closure_applied = false;
};

Partition equivalence_classes(const SigmaSpace& space);

}  // namespace tgeom

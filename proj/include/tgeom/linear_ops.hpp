#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tgeom/sigma_space.hpp"
#include "tgeom/vector_algebra.hpp"

namespace tgeom {

// Coefficients (α, β) of the combination αP₀P₁ + βR₀R₁. Both must be finite.
struct Coefficients {
  double alpha = 0.0;
  double beta = 0.0;

  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

// The combinations that exist in every σ-space, whatever its world function.
enum class CaseId {
  kZero,                      // α = β = 0
  kSingleVector,              // one coefficient 0, the other ±1
  kChainSum,                  // α = β = ±1, P₁ = R₀ or R₁ = P₀
  kCommonEndpointDifference,  // α = −β = ±1, P₁ = R₁ or P₀ = R₀
};

std::string_view to_string(CaseId id);

enum class SolveMethod { kConstructed, kSearched };

std::string_view to_string(SolveMethod method);

struct CombinationResult {
  // Every (S₀,S₁) whose scalar products match α·(P₀P₁) + β·(R₀R₁) against all
  // probe pairs in both slots, sorted by point-list order.
  std::vector<Vector> solutions;
  std::optional<CaseId> guaranteed;
  SolveMethod method = SolveMethod::kSearched;
};

inline constexpr std::size_t kDefaultSearchLimit = 40;

struct SearchOptions {
  std::size_t limit = kDefaultSearchLimit;
  bool force = false;
};

// (A,B) -> (B,A).
Vector negate(const Vector& v);

// (A,B) + (B,C) -> (A,C). Throws Error(kChainMismatch) unless v.end == w.origin.
Vector chain_sum(const Vector& v, const Vector& w);

// Classification uses exact comparison of the coefficients with 0 and ±1.
// Cases are tried in declaration order, and within a case the endpoint
// coincidences in the order written above.
std::optional<CaseId> guaranteed_case(const SigmaSpace& space, Coefficients c,
                                      const Vector& v, const Vector& w);

// Throws Error(kNotGuaranteed) when guaranteed_case finds nothing.
Vector construct_guaranteed(const SigmaSpace& space, Coefficients c, const Vector& v,
                            const Vector& w);

// Exhaustive search over all (S₀,S₁) ∈ Ω². Throws Error(kSearchLimitExceeded)
// when |Ω| > options.limit and !options.force.
CombinationResult solve_combination(const SigmaSpace& space, Coefficients c,
                                    const Vector& v, const Vector& w,
                                    const SearchOptions& options = {});

enum class PairScope {
  kAll,      // every ordered pair of vectors (v, w)
  kChained,  // only pairs with v.end == w.origin
};

struct SurveyOptions {
  SearchOptions search;
  PairScope scope = PairScope::kAll;
  // When set, v and w are drawn only from vectors whose endpoints are in this
  // list; solutions are still searched over the whole space. This lets a
  // space be compared against a deletion of itself on identical inputs.
  std::optional<std::vector<PointId>> restrict_to;
};

struct SurveyRow {
  Coefficients coefficients;
  std::size_t total = 0;
  std::size_t solvable = 0;
  std::size_t guaranteed = 0;
  std::size_t unsolvable = 0;
};

struct SurveyReport {
  // One row per requested coefficient pair, in request order.
  std::vector<SurveyRow> rows;
};

SurveyReport survey_linearity(const SigmaSpace& space,
                              const std::vector<Coefficients>& coefficients,
                              const SurveyOptions& options = {});

}  // namespace tgeom

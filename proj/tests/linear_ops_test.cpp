#include "tgeom/linear_ops.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_util.hpp"
#include "tgeom/equivalence.hpp"
#include "tgeom/error.hpp"
#include "tgeom/random_space.hpp"

namespace tgeom {
namespace {

using testing::grid;
using testing::vec;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected tgeom::Error";
  return ErrorCode::kInvalidArgument;
}

SigmaSpace four_points() {
  return build_finite_table({"A", "B", "C", "D"}, {{"A", "B", 1},
                                                   {"A", "C", 4},
                                                   {"A", "D", 2},
                                                   {"B", "C", 1},
                                                   {"B", "D", 3},
                                                   {"C", "D", 5}});
}

// Displacement of a grid vector.
std::vector<double> displacement(const SigmaSpace& g, const Vector& v) {
  const auto iv = resolve(g, v);
  std::vector<double> d(g.dimension());
  for (std::size_t k = 0; k < d.size(); ++k) {
    d[k] = g.coordinates(iv.end)[k] - g.coordinates(iv.origin)[k];
  }
  return d;
}

TEST(Negate, Examples) {
  EXPECT_EQ(negate(vec("A", "B")), vec("B", "A"));
  EXPECT_EQ(negate(vec("P", "P")), vec("P", "P"));
  EXPECT_EQ(negate(negate(vec("A", "B"))), vec("A", "B"));
}

TEST(Negate, NegatesEveryProbeExactly) {
  const SigmaSpace s = four_points();
  for (const auto& v : testing::all_vectors(s)) {
    const auto f = fingerprint(s, v);
    const auto g = fingerprint(s, negate(v));
    for (std::size_t k = 0; k < f.size(); ++k) EXPECT_EQ(g[k], -f[k]);
  }
}

TEST(ChainSum, Examples) {
  EXPECT_EQ(chain_sum(vec("A", "B"), vec("B", "C")), vec("A", "C"));
  EXPECT_EQ(chain_sum(vec("A", "B"), vec("B", "A")), vec("A", "A"));
  EXPECT_EQ(code_of([] { chain_sum(vec("A", "B"), vec("C", "D")); }),
            ErrorCode::kChainMismatch);
}

TEST(GuaranteedCase, Examples) {
  const SigmaSpace s = four_points();
  EXPECT_EQ(guaranteed_case(s, {1, 1}, vec("A", "B"), vec("B", "C")), CaseId::kChainSum);
  EXPECT_EQ(guaranteed_case(s, {1, -1}, vec("A", "B"), vec("C", "B")),
            CaseId::kCommonEndpointDifference);
  EXPECT_EQ(guaranteed_case(s, {0.5, 0.5}, vec("A", "B"), vec("B", "C")), std::nullopt);
  EXPECT_EQ(guaranteed_case(s, {0, 0}, vec("A", "B"), vec("C", "D")), CaseId::kZero);
  EXPECT_EQ(guaranteed_case(s, {0, -1}, vec("A", "B"), vec("C", "D")), CaseId::kSingleVector);
  EXPECT_EQ(guaranteed_case(s, {1, 0}, vec("A", "B"), vec("C", "D")), CaseId::kSingleVector);
  // A surviving coefficient other than ±1 is left to the search.
  EXPECT_EQ(guaranteed_case(s, {2, 0}, vec("A", "B"), vec("C", "D")), std::nullopt);
  EXPECT_EQ(guaranteed_case(s, {-1, -1}, vec("C", "D"), vec("A", "C")), CaseId::kChainSum);
  EXPECT_EQ(guaranteed_case(s, {1, 1}, vec("A", "B"), vec("C", "D")), std::nullopt);
  EXPECT_EQ(guaranteed_case(s, {-1, 1}, vec("A", "B"), vec("A", "D")),
            CaseId::kCommonEndpointDifference);
  EXPECT_EQ(guaranteed_case(s, {1, -1}, vec("A", "B"), vec("B", "C")), std::nullopt);
  // Near-unit coefficients do not count.
  EXPECT_EQ(guaranteed_case(s, {1 + 1e-15, 1}, vec("A", "B"), vec("B", "C")), std::nullopt);
  EXPECT_EQ(code_of([&] { guaranteed_case(s, {1, 1}, vec("A", "Z"), vec("B", "C")); }),
            ErrorCode::kUnknownPoint);
  EXPECT_EQ(code_of([&] {
              guaranteed_case(s, {std::nan(""), 1}, vec("A", "B"), vec("B", "C"));
            }),
            ErrorCode::kInvalidArgument);
}

TEST(ConstructGuaranteed, Examples) {
  const SigmaSpace s = four_points();
  EXPECT_EQ(construct_guaranteed(s, {1, 1}, vec("A", "B"), vec("B", "C")), vec("A", "C"));
  EXPECT_EQ(construct_guaranteed(s, {1, -1}, vec("A", "B"), vec("C", "B")), vec("A", "C"));
  EXPECT_EQ(construct_guaranteed(s, {0, 0}, vec("A", "B"), vec("C", "D")), vec("A", "A"));
}

TEST(ConstructGuaranteed, EveryBranch) {
  const SigmaSpace s = four_points();
  EXPECT_EQ(construct_guaranteed(s, {1, 0}, vec("A", "B"), vec("C", "D")), vec("A", "B"));
  EXPECT_EQ(construct_guaranteed(s, {-1, 0}, vec("A", "B"), vec("C", "D")), vec("B", "A"));
  EXPECT_EQ(construct_guaranteed(s, {0, 1}, vec("A", "B"), vec("C", "D")), vec("C", "D"));
  EXPECT_EQ(construct_guaranteed(s, {0, -1}, vec("A", "B"), vec("C", "D")), vec("D", "C"));
  // R₁ = P₀: R₀R₁ + P₀P₁ = R₀P₁.
  EXPECT_EQ(construct_guaranteed(s, {1, 1}, vec("B", "C"), vec("D", "B")), vec("D", "C"));
  EXPECT_EQ(construct_guaranteed(s, {-1, -1}, vec("A", "B"), vec("B", "C")), vec("C", "A"));
  // P₀ = R₀: P₀P₁ − P₀R₁ = R₁P₁.
  EXPECT_EQ(construct_guaranteed(s, {1, -1}, vec("A", "B"), vec("A", "D")), vec("D", "B"));
  EXPECT_EQ(construct_guaranteed(s, {-1, 1}, vec("A", "B"), vec("C", "B")), vec("C", "A"));
  EXPECT_EQ(code_of([&] {
              construct_guaranteed(s, {0.5, 0.5}, vec("A", "B"), vec("B", "C"));
            }),
            ErrorCode::kNotGuaranteed);
}

TEST(SolveCombination, FullGridAxisSum) {
  const SigmaSpace g = grid(2, 2);
  const auto result = solve_combination(g, {1, 1}, vec("p0_0", "p1_0"), vec("p0_0", "p0_1"));
  EXPECT_EQ(result.solutions, std::vector<Vector>{vec("p0_0", "p1_1")});
  EXPECT_FALSE(result.guaranteed.has_value());
  EXPECT_EQ(result.method, SolveMethod::kSearched);
}

TEST(SolveCombination, DeletedGridAxisSumHasNoSolution) {
  const SigmaSpace g = grid(2, 2, {{1, 1}});
  const auto result = solve_combination(g, {1, 1}, vec("p0_0", "p1_0"), vec("p0_0", "p0_1"));
  EXPECT_TRUE(result.solutions.empty());
}

TEST(SolveCombination, ChainedPairContainsConstructedRepresentative) {
  const SigmaSpace s = four_points();
  const auto result = solve_combination(s, {1, 1}, vec("A", "B"), vec("B", "C"));
  EXPECT_EQ(result.guaranteed, CaseId::kChainSum);
  EXPECT_EQ(result.method, SolveMethod::kConstructed);
  EXPECT_NE(std::find(result.solutions.begin(), result.solutions.end(), vec("A", "C")),
            result.solutions.end());
}

TEST(SolveCombination, SearchLimit) {
  const SigmaSpace big = grid(1, 41);
  EXPECT_EQ(code_of([&] { solve_combination(big, {1, 1}, vec("p0", "p1"), vec("p1", "p2")); }),
            ErrorCode::kSearchLimitExceeded);
  EXPECT_NO_THROW(solve_combination(big, {1, 1}, vec("p0", "p1"), vec("p1", "p2"),
                                    {.limit = 40, .force = true}));
  EXPECT_EQ(code_of([&] {
              solve_combination(grid(1, 5), {1, 1}, vec("p0", "p1"), vec("p1", "p2"),
                                {.limit = 4});
            }),
            ErrorCode::kSearchLimitExceeded);
}

TEST(SolveCombination, SolutionsAreSorted) {
  const SigmaSpace g = grid(2, 3);
  const auto result = solve_combination(g, {1, 0}, vec("p0_0", "p1_0"), vec("p0_0", "p0_0"));
  ASSERT_EQ(result.solutions.size(), 6u);
  EXPECT_TRUE(std::is_sorted(result.solutions.begin(), result.solutions.end(),
                             [&](const Vector& a, const Vector& b) {
                               return resolve(g, a) < resolve(g, b);
                             }));
}

TEST(LinearOpsProperties, ConstructedRepresentativeIsASolution) {
  std::mt19937_64 rng(51);
  const std::vector<Coefficients> unit{{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1},
                                       {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
  for (int trial = 0; trial < 6; ++trial) {
    const SigmaSpace s = random_table(
        rng, {.points = 3 + static_cast<std::size_t>(trial % 4), .symmetric = trial % 2 == 0});
    for (const auto& c : unit) {
      for (const auto& v : testing::all_vectors(s)) {
        for (const auto& w : testing::all_vectors(s)) {
          if (!guaranteed_case(s, c, v, w)) continue;
          const Vector rep = construct_guaranteed(s, c, v, w);
          const auto result = solve_combination(s, c, v, w);
          ASSERT_NE(std::find(result.solutions.begin(), result.solutions.end(), rep),
                    result.solutions.end());
        }
      }
    }
  }
}

TEST(LinearOpsProperties, SolutionSetClosedUnderEquivalence) {
  // Small integer tables produce plenty of non-trivial equivalence classes.
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const SigmaSpace s = random_table(rng, {.points = 4, .high = 1, .integer = true});
    const Partition p = equivalence_classes(s);
    const auto vectors = testing::all_vectors(s);
    const Coefficients c{trial % 2 == 0 ? 2.0 : 1.0, -1.0};
    for (std::size_t k = 0; k < 8; ++k) {
      const auto& v = vectors[(k * 5) % vectors.size()];
      const auto& w = vectors[(k * 7 + 3) % vectors.size()];
      const auto solutions = solve_combination(s, c, v, w).solutions;
      for (const auto& cls : p.classes) {
        const bool first_in =
            std::find(solutions.begin(), solutions.end(), cls.front()) != solutions.end();
        for (const auto& member : cls) {
          EXPECT_EQ(std::find(solutions.begin(), solutions.end(), member) != solutions.end(),
                    first_in);
        }
      }
    }
  }
}

TEST(LinearOpsProperties, EuclideanCriterionOnGrids) {
  const std::vector<Coefficients> coefficients{{1, 1}, {2, -1}, {0.5, 0.5}, {1, -1}, {3, 0}};
  for (const auto& g : {grid(2, 3), grid(2, 3, {{1, 1}, {2, 0}})}) {
    const auto vectors = testing::all_vectors(g);
    for (const auto& c : coefficients) {
      for (std::size_t k = 0; k < vectors.size(); k += 5) {
        for (std::size_t m = 0; m < vectors.size(); m += 7) {
          const auto dv = displacement(g, vectors[k]);
          const auto dw = displacement(g, vectors[m]);
          std::vector<Vector> expected;
          for (const auto& s : vectors) {
            const auto ds = displacement(g, s);
            if (ds[0] == c.alpha * dv[0] + c.beta * dw[0] &&
                ds[1] == c.alpha * dv[1] + c.beta * dw[1]) {
              expected.push_back(s);
            }
          }
          EXPECT_EQ(solve_combination(g, c, vectors[k], vectors[m]).solutions, expected);
        }
      }
    }
  }
}

// Counts, with the displacement criterion, how many (v, w) pairs drawn from
// `from` have a solution in `g`. Independent of the solver.
std::size_t euclidean_solvable(const SigmaSpace& g, const SigmaSpace& from, Coefficients c) {
  const auto space_vectors = testing::all_vectors(g);
  const auto vectors = testing::all_vectors(from);
  std::size_t count = 0;
  for (const auto& v : vectors) {
    for (const auto& w : vectors) {
      const auto dv = displacement(g, v);
      const auto dw = displacement(g, w);
      const bool ok = std::any_of(space_vectors.begin(), space_vectors.end(), [&](const Vector& s) {
        const auto ds = displacement(g, s);
        return ds[0] == c.alpha * dv[0] + c.beta * dw[0] &&
               ds[1] == c.alpha * dv[1] + c.beta * dw[1];
      });
      if (ok) ++count;
    }
  }
  return count;
}

TEST(SurveyLinearity, SinglePointSpace) {
  const SigmaSpace s = build_finite_table({"A"}, {});
  const auto report = survey_linearity(s, {{0.5, 0.5}, {3, -7}});
  ASSERT_EQ(report.rows.size(), 2u);
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.total, 1u);
    EXPECT_EQ(row.solvable, 1u);
    EXPECT_EQ(row.unsolvable, 0u);
  }
}

TEST(SurveyLinearity, DeletionReducesButDoesNotDestroy) {
  const SigmaSpace full = grid(2, 2);
  const SigmaSpace holed = grid(2, 2, {{1, 1}});
  SurveyOptions restricted;
  restricted.restrict_to = holed.points();

  const auto before = survey_linearity(full, {{1, 1}}, restricted).rows.at(0);
  const auto after = survey_linearity(holed, {{1, 1}}).rows.at(0);
  EXPECT_EQ(before.total, 81u);
  EXPECT_EQ(after.total, 81u);
  EXPECT_LT(after.solvable, before.solvable);
  EXPECT_EQ(after.guaranteed, before.guaranteed);
  EXPECT_GT(after.guaranteed, 0u);

  EXPECT_EQ(before.solvable, euclidean_solvable(full, holed, {1, 1}));
  EXPECT_EQ(after.solvable, euclidean_solvable(holed, holed, {1, 1}));
  // Chained pairs P₁ = R₀ plus R₁ = P₀, minus both: 27 + 27 − 9.
  EXPECT_EQ(after.guaranteed, 45u);
}

TEST(SurveyLinearity, MatchesDisplacementCriterion) {
  const SigmaSpace g = grid(2, 3, {{0, 2}});
  const std::vector<Coefficients> coefficients{{1, 1}, {2, -1}, {0.5, 0.5}};
  const auto report = survey_linearity(g, coefficients);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    EXPECT_EQ(report.rows[i].total, 64u * 64u);
    EXPECT_EQ(report.rows[i].solvable, euclidean_solvable(g, g, coefficients[i]));
    EXPECT_EQ(report.rows[i].unsolvable, report.rows[i].total - report.rows[i].solvable);
  }
}

TEST(SurveyLinearity, ChainedSumsAlwaysSolvable) {
  std::mt19937_64 rng(71);
  SurveyOptions chained;
  chained.scope = PairScope::kChained;
  for (int trial = 0; trial < 5; ++trial) {
    const SigmaSpace s = random_table(rng, {.points = 5, .symmetric = trial % 2 == 0});
    const auto row = survey_linearity(s, {{1, 1}}, chained).rows.at(0);
    EXPECT_EQ(row.total, 125u);
    EXPECT_EQ(row.solvable, row.total);
    EXPECT_EQ(row.guaranteed, row.total);
  }
}

TEST(SurveyLinearity, TrivialCoefficientsAlwaysSolvable) {
  const SigmaSpace g = grid(2, 3, {{1, 1}});
  const auto report = survey_linearity(g, {{1, 0}, {0, 0}});
  for (const auto& row : report.rows) EXPECT_EQ(row.solvable, row.total);
}

TEST(SurveyLinearity, Errors) {
  EXPECT_EQ(code_of([] { survey_linearity(grid(1, 41), {{1, 1}}); }),
            ErrorCode::kSearchLimitExceeded);
  SurveyOptions bad;
  bad.restrict_to = std::vector<PointId>{PointId("nope")};
  EXPECT_EQ(code_of([&] { survey_linearity(grid(1, 3), {{1, 1}}, bad); }),
            ErrorCode::kUnknownPoint);
}

}  // namespace
}  // namespace tgeom

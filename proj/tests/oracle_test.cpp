#include "tgeom/oracle.hpp"

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
using V = std::vector<double>;

TEST(EuclidDotOracle, Examples) {
  EXPECT_EQ(oracle::euclid_dot_oracle(V{1, 2}, V{1, 2}, V{0, 0}, V{5, 7}), 0.0);
  EXPECT_EQ(oracle::euclid_dot_oracle(V{0, 0}, V{1, 0}, V{0, 0}, V{1, 0}), 1.0);
  EXPECT_EQ(oracle::euclid_dot_oracle(V{0, 0}, V{1, 0}, V{0, 1}, V{2, 2}), 2.0);
  EXPECT_THROW(oracle::euclid_dot_oracle(V{0}, V{1, 0}, V{0, 1}, V{2, 2}), Error);
}

TEST(BruteForceEquivalent, Examples) {
  const SigmaSpace s = build_finite_table({"A", "B"}, {{"A", "B", 1.0}});
  EXPECT_TRUE(oracle::brute_force_equivalent(s, vec("A", "B"), vec("A", "B")));
  EXPECT_FALSE(oracle::brute_force_equivalent(s, vec("A", "B"), vec("B", "A")));
  EXPECT_THROW(oracle::brute_force_equivalent(s, vec("A", "X"), vec("B", "A")), Error);
}

TEST(BruteForceEquivalent, AgreesWithEquivalent) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 5);
    RandomTableOptions options{.points = size(rng), .high = 3, .symmetric = trial % 2 == 0,
                               .integer = trial % 4 < 2};
    const SigmaSpace s = random_table(rng, options);
    for (const auto& v : testing::all_vectors(s)) {
      for (const auto& w : testing::all_vectors(s)) {
        ASSERT_EQ(oracle::brute_force_equivalent(s, v, w), equivalent(s, v, w).equivalent);
      }
    }
  }
}

TEST(BruteForceSolve, SingleCoefficientContainsEquivalenceClass) {
  const SigmaSpace g = grid(2, 3);
  const auto solutions = oracle::brute_force_solve(g, {1, 0}, vec("p0_0", "p1_1"),
                                                   vec("p2_2", "p0_1"));
  for (const auto& cls : equivalence_classes(g).classes) {
    if (std::find(cls.begin(), cls.end(), vec("p0_0", "p1_1")) == cls.end()) continue;
    for (const auto& member : cls) {
      EXPECT_NE(std::find(solutions.begin(), solutions.end(), member), solutions.end());
    }
  }
}

TEST(BruteForceSolve, FullGridAxisSum) {
  EXPECT_EQ(oracle::brute_force_solve(grid(2, 2), {1, 1}, vec("p0_0", "p1_0"),
                                      vec("p0_0", "p0_1")),
            std::vector<Vector>{vec("p0_0", "p1_1")});
}

TEST(BruteForceSolve, Limit) {
  try {
    oracle::brute_force_solve(grid(1, 13), {1, 1}, vec("p0", "p1"), vec("p1", "p2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleLimitExceeded);
  }
}

TEST(BruteForceSolve, AgreesWithSolveCombination) {
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    RandomTableOptions options{.points = size(rng), .high = 3, .symmetric = trial % 3 != 0,
                               .integer = trial % 2 == 0};
    const SigmaSpace s = random_table(rng, options);
    const auto vectors = testing::all_vectors(s);
    std::uniform_int_distribution<std::size_t> pick(0, vectors.size() - 1);
    for (int q = 0; q < 5; ++q) {
      const Coefficients c{static_cast<double>(coef(rng)), static_cast<double>(coef(rng))};
      const auto& v = vectors[pick(rng)];
      const auto& w = vectors[pick(rng)];
      ASSERT_EQ(oracle::brute_force_solve(s, c, v, w), solve_combination(s, c, v, w).solutions);
    }
  }
}

TEST(EuclideanReduction, ScalarProductMatchesDotProduct) {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> real(-10, 10);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PointId> points;
    std::vector<std::vector<double>> coords;
    for (int i = 0; i < 5; ++i) {
      points.emplace_back("q" + std::to_string(i));
      coords.push_back({real(rng), real(rng), real(rng)});
    }
    const SigmaSpace s = SigmaSpace::from_coordinates(points, coords);
    for (const auto& v : testing::all_vectors(s)) {
      for (const auto& w : testing::all_vectors(s)) {
        const auto iv = resolve(s, v);
        const auto iw = resolve(s, w);
        EXPECT_NEAR(scalar_product(s, iv, iw),
                    oracle::euclid_dot_oracle(s.coordinates(iv.origin), s.coordinates(iv.end),
                                              s.coordinates(iw.origin), s.coordinates(iw.end)),
                    1e-9);
      }
    }
  }
}

TEST(EuclideanReduction, ExactOnIntegerGrid) {
  const SigmaSpace g = grid(2, 4);
  for (const auto& v : testing::all_vectors(g)) {
    for (const auto& w : testing::all_vectors(g)) {
      const auto iv = resolve(g, v);
      const auto iw = resolve(g, w);
      ASSERT_EQ(scalar_product(g, iv, iw),
                oracle::euclid_dot_oracle(g.coordinates(iv.origin), g.coordinates(iv.end),
                                          g.coordinates(iw.origin), g.coordinates(iw.end)));
    }
  }
}

}  // namespace
}  // namespace tgeom

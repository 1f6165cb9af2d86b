// Copyright 2026 The Coopetition Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "test_util.hpp"

namespace coop {
namespace {

using testing::R;

using Matrix = std::vector<std::vector<Rational>>;

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long range) {
  Matrix m(rows, std::vector<Rational>(cols));
  for (auto& row : m) {
    for (auto& v : row) v = static_cast<long>(rng() % (2 * range + 1)) - range;
  }
  return m;
}

// Checks primal feasibility, dual sign conditions, complementary slackness
// and strong duality for an optimal solution of an LP whose variables all
// have the default [0, inf) bounds.
void expect_certified(const LinearProgram& lp, const LpSolution& sol) {
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  const std::size_t n = lp.num_variables();
  const Rational s = lp.sense == Sense::kMaximize ? 1 : -1;
  Rational dual_objective = 0;
  std::vector<Rational> aty(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) EXPECT_GE(sol.primal[j], 0);
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const Constraint& c = lp.constraints[i];
    const Rational lhs = dot(c.coeffs, sol.primal);
    const Rational y = sol.dual[i];
    switch (c.relation) {
      case Relation::kLessEqual:
        EXPECT_LE(lhs, c.rhs);
        EXPECT_GE(s * y, 0);
        break;
      case Relation::kGreaterEqual:
        EXPECT_GE(lhs, c.rhs);
        EXPECT_LE(s * y, 0);
        break;
      case Relation::kEqual:
        EXPECT_EQ(lhs, c.rhs);
        break;
    }
    EXPECT_EQ(y * (c.rhs - lhs), 0) << "row " << i;
    dual_objective += y * c.rhs;
    for (std::size_t j = 0; j < n; ++j) aty[j] += c.coeffs[j] * y;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Rational reduced = aty[j] - lp.objective[j];
    EXPECT_GE(s * reduced, 0) << "column " << j;
    EXPECT_EQ(reduced * sol.primal[j], 0) << "column " << j;
  }
  EXPECT_EQ(dual_objective, sol.objective_value);
  EXPECT_EQ(dot(lp.objective, sol.primal), sol.objective_value);
}

TEST(SolveLp, SingleBoundedVariable) {
  LinearProgram lp(1, Sense::kMaximize);
  lp.objective = {1};
  lp.add({1}, Relation::kLessEqual, 3);
  const LpSolution sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.primal[0], 3);
  EXPECT_EQ(sol.objective_value, 3);
  expect_certified(lp, sol);
}

TEST(SolveLp, UnboundedObjective) {
  LinearProgram lp(1, Sense::kMaximize);
  lp.objective = {1};
  lp.add({1}, Relation::kGreaterEqual, 0);
  EXPECT_EQ(solve_lp(lp).status, LpStatus::kUnbounded);
}

TEST(SolveLp, InfeasibleSystem) {
  LinearProgram lp(2, Sense::kMinimize);
  lp.objective = {1, 1};
  lp.add({1, 1}, Relation::kLessEqual, 1);
  lp.add({1, 1}, Relation::kGreaterEqual, 2);
  EXPECT_EQ(solve_lp(lp).status, LpStatus::kInfeasible);
}

TEST(SolveLp, MinimizationWithEquality) {
  // min 2x + 3y s.t. x + y = 4, x <= 1  ->  x = 1, y = 3, value 11.
  LinearProgram lp(2, Sense::kMinimize);
  lp.objective = {2, 3};
  lp.add({1, 1}, Relation::kEqual, 4);
  lp.add({1, 0}, Relation::kLessEqual, 1);
  const LpSolution sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.objective_value, 11);
  EXPECT_EQ(sol.primal, testing::Rs({1, 3}));
  expect_certified(lp, sol);
}

TEST(SolveLp, FreeAndBoundedVariables) {
  // max -x s.t. x >= -5 with x free; y in [1, 2], max y.
  LinearProgram lp(2, Sense::kMaximize);
  lp.objective = {-1, 1};
  lp.bounds = {VariableBounds::free(), VariableBounds{R(1), R(2)}};
  lp.add({1, 0}, Relation::kGreaterEqual, -5);
  const LpSolution sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.primal, testing::Rs({-5, 2}));
  EXPECT_EQ(sol.objective_value, 7);
}

TEST(SolveLp, NegativeRightHandSides) {
  // max x + y s.t. -x - y >= -3, -x <= -1.
  LinearProgram lp(2, Sense::kMaximize);
  lp.objective = {1, 1};
  lp.add({-1, -1}, Relation::kGreaterEqual, -3);
  lp.add({-1, 0}, Relation::kLessEqual, -1);
  const LpSolution sol = solve_lp(lp);
  EXPECT_EQ(sol.objective_value, 3);
  expect_certified(lp, sol);
}

TEST(SolveLp, MalformedInputIsRejected) {
  LinearProgram lp(2, Sense::kMaximize);
  lp.add({1}, Relation::kLessEqual, 1);
  EXPECT_THROW(solve_lp(lp), InputError);
  EXPECT_THROW(solve_lp(LinearProgram(0)), InputError);
  LinearProgram wrong_bounds(2);
  wrong_bounds.bounds.resize(1);
  EXPECT_THROW(solve_lp(wrong_bounds), InputError);
}

TEST(SolveLp, ScaleCeiling) {
  LinearProgram lp(kMaxLpDimension + 1);
  EXPECT_THROW(solve_lp(lp), ScaleError);
}

// The chicken correlated-equilibrium polytope with the team total as the
// objective; optimum 21/2 at (1/2 (C,C), 1/4 (D,C), 1/4 (C,D)).
TEST(SolveLp, ChickenCorrelatedEquilibriumMatchesVertexEnumeration) {
  const Game g = chicken_bimatrix();
  const std::size_t n = g.num_joint_actions();
  LinearProgram lp(n, Sense::kMaximize);
  oracle::VertexLp v;
  for (std::size_t idx = 0; idx < n; ++idx) lp.objective[idx] = g.payoff(idx, 0) + g.payoff(idx, 1);
  v.objective = lp.objective;
  for (std::size_t p = 0; p < 2; ++p) {
    for (std::size_t rec = 0; rec < 2; ++rec) {
      for (std::size_t dev = 0; dev < 2; ++dev) {
        if (rec == dev) continue;
        std::vector<Rational> row(n, Rational(0));
        for (std::size_t idx = 0; idx < n; ++idx) {
          JointAction a = g.joint_action(idx);
          if (a[p] != rec) continue;
          JointAction b = a;
          b[p] = dev;
          row[idx] = g.payoff(a, p) - g.payoff(b, p);
        }
        lp.add(row, Relation::kGreaterEqual, 0);
        std::vector<Rational> neg(row);
        for (auto& x : neg) x = -x;
        v.rows.push_back(neg);
        v.rhs.push_back(0);
        v.equality.push_back(false);
      }
    }
  }
  lp.add(std::vector<Rational>(n, Rational(1)), Relation::kEqual, 1);
  v.rows.push_back(std::vector<Rational>(n, Rational(1)));
  v.rhs.push_back(1);
  v.equality.push_back(true);

  const LpSolution sol = solve_lp(lp);
  const auto brute = oracle::vertex_enumeration(v);
  ASSERT_TRUE(brute.has_value());
  EXPECT_EQ(sol.objective_value, R(21, 2));
  EXPECT_EQ(brute->value, R(21, 2));
  // Order (D,D), (D,C), (C,D), (C,C).
  EXPECT_EQ(sol.primal, testing::Rs({0, R(1, 4), R(1, 4), R(1, 2)}));
  expect_certified(lp, sol);
}

TEST(SolveLpProperties, RandomBoundedProgramsMatchVertexEnumeration) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t m = 1 + rng() % 4;
    LinearProgram lp(n, trial % 2 == 0 ? Sense::kMaximize : Sense::kMinimize);
    oracle::VertexLp v;
    const Rational s = lp.sense == Sense::kMaximize ? 1 : -1;
    for (std::size_t j = 0; j < n; ++j) lp.objective[j] = static_cast<long>(rng() % 11) - 5;
    for (const auto& c : lp.objective) v.objective.push_back(s * c);
    auto matrix = random_matrix(rng, m, n, 4);
    for (std::size_t i = 0; i < m; ++i) {
      const Rational rhs = static_cast<long>(rng() % 9) - 2;
      const int kind = static_cast<int>(rng() % 3);
      const Relation rel = kind == 0 ? Relation::kLessEqual
                           : kind == 1 ? Relation::kGreaterEqual
                                       : Relation::kEqual;
      lp.add(matrix[i], rel, rhs);
      std::vector<Rational> row = matrix[i];
      Rational b = rhs;
      if (rel == Relation::kGreaterEqual) {
        for (auto& x : row) x = -x;
        b = -b;
      }
      v.rows.push_back(row);
      v.rhs.push_back(b);
      v.equality.push_back(rel == Relation::kEqual);
    }
    // Keep the region bounded.
    lp.add(std::vector<Rational>(n, Rational(1)), Relation::kLessEqual, 10);
    v.rows.push_back(std::vector<Rational>(n, Rational(1)));
    v.rhs.push_back(10);
    v.equality.push_back(false);

    const LpSolution sol = solve_lp(lp);
    const auto brute = oracle::vertex_enumeration(v);
    if (!brute) {
      EXPECT_EQ(sol.status, LpStatus::kInfeasible) << "trial " << trial;
      continue;
    }
    ASSERT_EQ(sol.status, LpStatus::kOptimal) << "trial " << trial;
    EXPECT_EQ(s * sol.objective_value, brute->value) << "trial " << trial;
    expect_certified(lp, sol);
  }
}

TEST(SolveLpProperties, Deterministic) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    LinearProgram lp(4, Sense::kMaximize);
    for (auto& c : lp.objective) c = static_cast<long>(rng() % 7);
    for (auto& row : random_matrix(rng, 3, 4, 3)) lp.add(row, Relation::kLessEqual, 5);
    lp.add(std::vector<Rational>(4, Rational(1)), Relation::kLessEqual, 3);
    const LpSolution a = solve_lp(lp);
    const LpSolution b = solve_lp(lp);
    EXPECT_EQ(a.primal, b.primal);
    EXPECT_EQ(a.dual, b.dual);
    EXPECT_EQ(a.pivots, b.pivots);
  }
}

TEST(SolveMaxmin, MatchingPennies) {
  const MaxminSolution mm = solve_maxmin({{1, -1}, {-1, 1}});
  EXPECT_EQ(mm.value, 0);
  EXPECT_EQ(mm.row_strategy, testing::Rs({R(1, 2), R(1, 2)}));
  EXPECT_EQ(mm.col_strategy, testing::Rs({R(1, 2), R(1, 2)}));
}

TEST(SolveMaxmin, OneByOne) {
  const MaxminSolution mm = solve_maxmin({{R(-7, 3)}});
  EXPECT_EQ(mm.value, R(-7, 3));
  EXPECT_EQ(mm.row_strategy, testing::Rs({1}));
  EXPECT_EQ(mm.col_strategy, testing::Rs({1}));
}

TEST(SolveMaxmin, EmptyOrRaggedMatrix) {
  EXPECT_THROW(solve_maxmin({}), InputError);
  EXPECT_THROW(solve_maxmin({{}}), InputError);
  EXPECT_THROW(solve_maxmin({{1, 2}, {3}}), InputError);
}

void expect_saddle(const Matrix& m, const MaxminSolution& mm) {
  ASSERT_EQ(mm.row_strategy.size(), m.size());
  ASSERT_EQ(mm.col_strategy.size(), m[0].size());
  EXPECT_EQ(sum(mm.row_strategy), 1);
  EXPECT_EQ(sum(mm.col_strategy), 1);
  std::optional<Rational> row_guarantee;
  for (std::size_t c = 0; c < m[0].size(); ++c) {
    Rational v = 0;
    for (std::size_t r = 0; r < m.size(); ++r) v += mm.row_strategy[r] * m[r][c];
    if (!row_guarantee || v < *row_guarantee) row_guarantee = v;
  }
  std::optional<Rational> col_guarantee;
  for (std::size_t r = 0; r < m.size(); ++r) {
    Rational v = 0;
    for (std::size_t c = 0; c < m[0].size(); ++c) v += mm.col_strategy[c] * m[r][c];
    if (!col_guarantee || v > *col_guarantee) col_guarantee = v;
  }
  EXPECT_EQ(*row_guarantee, mm.value);
  EXPECT_EQ(*col_guarantee, mm.value);
}

TEST(SolveMaxminProperties, TwoRowAndTwoColumnClosedForms) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t other = 2 + trial % 3;
    const Matrix two_rows = random_matrix(rng, 2, other, 9);
    const MaxminSolution a = solve_maxmin(two_rows);
    EXPECT_EQ(a.value, oracle::maxmin_two_rows(two_rows));
    expect_saddle(two_rows, a);
    const Matrix two_cols = random_matrix(rng, other, 2, 9);
    const MaxminSolution b = solve_maxmin(two_cols);
    EXPECT_EQ(b.value, oracle::minmax_two_cols(two_cols));
    expect_saddle(two_cols, b);
  }
}

TEST(SolveMaxminProperties, SaddlePointOnLargerMatrices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Matrix m = random_matrix(rng, 2 + trial % 4, 2 + (trial / 4) % 4, 20);
    expect_saddle(m, solve_maxmin(m));
  }
}

TEST(SolveMaxminProperties, TeamMatrixOfConsistentGamesMatchesClosedForm) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    // 2 team players with 2 and 1 actions: two team rows.
    const auto pg = random_game(testing::spec({2, 1, 2 + seed % 2}, seed, RandomFlavor::kConsistentZeroSum,
                                              {2, 2}));
    const Matrix m = TeamView(pg.game, pg.partition).team_matrix();
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(solve_maxmin(m).value, oracle::maxmin_two_rows(m));
  }
}

}  // namespace
}  // namespace coop

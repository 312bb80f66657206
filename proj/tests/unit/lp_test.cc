// Copyright 2026 The twoprover Authors
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

#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "twoprover/errors.h"
#include "twoprover/lp.h"

namespace twoprover {
namespace {

Rational Fraction(int num, int den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

LinearProgram Inequalities(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                           const std::vector<Rational>& c) {
  LinearProgram lp(static_cast<int>(c.size()));
  lp.objective = c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<std::pair<int, Rational>> terms;
    for (std::size_t j = 0; j < c.size(); ++j) terms.emplace_back(static_cast<int>(j), a[i][j]);
    lp.AddConstraint(terms, Relation::kLessEqual, b[i]);
  }
  return lp;
}

TEST(SolveLp, UnitBox) {
  LinearProgram lp = Inequalities({{1, 0}, {0, 1}}, {1, 1}, {1, 1});
  LpSolution s = SolveLp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, 2);
  EXPECT_EQ(s.primal, (std::vector<Rational>{1, 1}));
  EXPECT_TRUE(VerifyOptimality(lp, s).ok);
}

TEST(SolveLp, Infeasible) {
  LinearProgram lp(1);
  lp.objective = {1};
  lp.AddConstraint({{0, 1}}, Relation::kLessEqual, -1);
  EXPECT_EQ(SolveLp(lp).status, LpStatus::kInfeasible);
}

TEST(SolveLp, Unbounded) {
  LinearProgram lp(2);
  lp.objective = {1, 0};
  lp.AddConstraint({{0, 1}, {1, -1}}, Relation::kLessEqual, 1);
  EXPECT_EQ(SolveLp(lp).status, LpStatus::kUnbounded);
}

TEST(SolveLp, TwoConstraintsMatchVertexOracle) {
  const std::vector<std::vector<Rational>> a{{1, 1}, {1, 3}};
  const std::vector<Rational> b{4, 6};
  const std::vector<Rational> c{3, 2};
  const auto expected = oracle::LpByVertices(a, b, c);
  ASSERT_TRUE(expected.has_value());
  EXPECT_EQ(*expected, 12);
  LpSolution s = SolveLp(Inequalities(a, b, c));
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, *expected);
}

TEST(SolveLp, EqualityAndGreaterRows) {
  // max x + 2y  s.t.  x + y = 3, x >= 1, y <= 5.
  LinearProgram lp(2);
  lp.objective = {1, 2};
  lp.AddConstraint({{0, 1}, {1, 1}}, Relation::kEqual, 3);
  lp.AddConstraint({{0, 1}}, Relation::kGreaterEqual, 1);
  lp.AddConstraint({{1, 1}}, Relation::kLessEqual, 5);
  LpSolution s = SolveLp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, 5);
  EXPECT_TRUE(VerifyOptimality(lp, s).ok) << VerifyOptimality(lp, s).failure;
}

TEST(SolveLp, DegenerateCyclingExampleTerminates) {
  // Beale's example, which cycles under the largest-coefficient rule.
  const std::vector<std::vector<Rational>> a{{Rational(1, 4), -8, -1, 9},
                                             {Rational(1, 2), -12, Rational(-1, 2), 3},
                                             {0, 0, 1, 0}};
  const std::vector<Rational> b{0, 0, 1};
  const std::vector<Rational> c{Rational(3, 4), -20, Rational(1, 2), -6};
  LinearProgram lp = Inequalities(a, b, c);
  LpSolution s = SolveLp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, *oracle::LpByVertices(a, b, c));
  EXPECT_TRUE(VerifyOptimality(lp, s).ok);
}

TEST(SolveLp, RandomProgramsMatchVertexOracle) {
  for (int seed = 0; seed < 60; ++seed) {
    std::mt19937_64 rng(1000 + seed);
    std::uniform_int_distribution<int> coeff(-3, 5), rhs(0, 8), size(1, 3);
    const int n = size(rng);
    const int m = size(rng) + 1;
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n));
    std::vector<Rational> b(m), c(n);
    for (auto& row : a) {
      for (auto& x : row) x = coeff(rng);
    }
    for (auto& x : b) x = rhs(rng);
    for (auto& x : c) x = coeff(rng);
    // A row bounding the sum keeps the program bounded.
    a.push_back(std::vector<Rational>(n, 1));
    b.push_back(10);
    LinearProgram lp = Inequalities(a, b, c);
    LpSolution s = SolveLp(lp);
    ASSERT_EQ(s.status, LpStatus::kOptimal) << "seed " << seed;
    EXPECT_EQ(s.value, *oracle::LpByVertices(a, b, c)) << "seed " << seed;
    const OptimalityCheck check = VerifyOptimality(lp, s);
    EXPECT_TRUE(check.ok) << "seed " << seed << ": " << check.failure;
  }
}

TEST(SolveLp, PrimalIsExactlyFeasibleAndGapIsZero) {
  for (int seed = 0; seed < 40; ++seed) {
    std::mt19937_64 rng(2000 + seed);
    std::uniform_int_distribution<int> coeff(0, 6), pick(0, 2);
    const int n = 4;
    LinearProgram lp(n);
    for (auto& x : lp.objective) x = Fraction(coeff(rng), 1 + coeff(rng));
    for (int i = 0; i < 5; ++i) {
      std::vector<std::pair<int, Rational>> terms;
      for (int j = 0; j < n; ++j) terms.emplace_back(j, Fraction(1 + coeff(rng), 1 + coeff(rng)));
      const Relation rel = pick(rng) == 0 ? Relation::kGreaterEqual : Relation::kLessEqual;
      lp.AddConstraint(terms, rel, rel == Relation::kGreaterEqual ? Rational(1) : Rational(7));
    }
    LpSolution s = SolveLp(lp);
    if (s.status != LpStatus::kOptimal) continue;
    Rational dual_value = 0;
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) dual_value += s.dual[i] * lp.constraints[i].rhs;
    EXPECT_EQ(dual_value, s.value) << "seed " << seed;
    for (const auto& row : lp.constraints) {
      Rational lhs = 0;
      for (int j = 0; j < n; ++j) lhs += row.coefficients[j] * s.primal[j];
      if (row.relation == Relation::kLessEqual) EXPECT_LE(lhs, row.rhs);
      if (row.relation == Relation::kGreaterEqual) EXPECT_GE(lhs, row.rhs);
    }
  }
}

TEST(SolveLp, RejectsMalformedRows) {
  LinearProgram lp(2);
  lp.constraints.push_back({{1}, Relation::kLessEqual, 1});
  EXPECT_THROW(SolveLp(lp), DimensionError);
}

TEST(SolveLp, SizeGuard) {
  SizeLimits limits;
  limits.lp_max_variables = 3;
  LinearProgram lp = Inequalities({{1, 1, 1, 1}}, {1}, {1, 1, 1, 1});
  EXPECT_THROW(SolveLp(lp, limits), SizeGuardError);
}

TEST(SizeLimits, EnvironmentOverride) {
  setenv("TWOPROVER_LP_MAX_VARIABLES", "17", 1);
  setenv("TWOPROVER_LP_MAX_CONSTRAINTS", "23", 1);
  const SizeLimits limits = SizeLimits::FromEnvironment();
  EXPECT_EQ(limits.lp_max_variables, 17u);
  EXPECT_EQ(limits.lp_max_constraints, 23u);
  unsetenv("TWOPROVER_LP_MAX_VARIABLES");
  unsetenv("TWOPROVER_LP_MAX_CONSTRAINTS");
  EXPECT_EQ(SizeLimits::FromEnvironment().lp_max_variables, 5000u);
}

TEST(SizeLimits, SaturatingArithmetic) {
  EXPECT_EQ(SaturatingPower(2, 10), 1024u);
  EXPECT_EQ(SaturatingPower(10, 40), UINT64_MAX);
  EXPECT_EQ(SaturatingProduct({1u << 31, 1u << 31, 1u << 31}), UINT64_MAX);
  EXPECT_THROW(CheckTableSize(11, "t", SizeLimits{10, 1, 1}), SizeGuardError);
}

}  // namespace
}  // namespace twoprover

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

#include <gtest/gtest.h>

#include "oracles.h"
#include "twoprover/catalog.h"
#include "twoprover/random_games.h"
#include "twoprover/transforms.h"
#include "twoprover/values.h"

namespace twoprover {
namespace {

MultiRoundGame<Rational> FullSupportGame(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RandomGameOptions options;
  options.support_density = 1;
  return RandomMultiRoundGame(2, 2, 2, rng, options);
}

OneInThreeFormula Formula(int n, std::vector<std::array<int, 3>> clauses) {
  OneInThreeFormula f;
  f.num_variables = n;
  for (const auto& c : clauses) {
    std::array<Literal, 3> lits;
    for (int i = 0; i < 3; ++i) lits[i] = Literal{std::abs(c[i]) - 1, c[i] > 0};
    f.clauses.push_back(lits);
  }
  return f;
}

std::vector<int> BestProof(const PcpGame<Rational>& g) { return PcpValue(g).witness; }

TEST(OracularizeMultiRound, Cardinalities) {
  auto o = OracularizeMultiRound(FullSupportGame(1));
  EXPECT_EQ(o.game.q1_count, 4);
  EXPECT_EQ(o.game.q2_count, 2 + 4);
  EXPECT_EQ(o.game.a1_count, 4);
  EXPECT_EQ(o.game.a2_count, 2 + 4);
  EXPECT_TRUE(Validate(o.game).ok());
}

TEST(OracularizeMultiRound, HonestEchoProversWin) {
  auto g = EchoGame(2, 2);
  auto o = OracularizeMultiRound(g);
  auto best = MultiRoundValue(g);
  ASSERT_EQ(best.value, 1);
  auto honest = HonestMultiRoundStrategy(o, g, best.witness.answers);
  EXPECT_EQ(EvalTwoProver(o.game, Embed<Rational>(honest, o.game.a1_count, o.game.a2_count)), 1);
}

TEST(OracularizeMultiRound, ClassicalValueSandwich) {
  for (int seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng = SampleRng(21, seed);
    auto g = RandomMultiRoundGame(2, 2, 2, rng);
    const Rational w = oracle::MultiRoundByTables(g);
    auto o = OracularizeMultiRound(g);
    const Rational v = ClassicalValue(o.game).value;
    EXPECT_LE(w, v) << "seed " << seed;
    EXPECT_LE(v, 1 - (1 - w) / 3) << "seed " << seed;
  }
}

TEST(OracularizeMultiRound, HonestProversPassConsistency) {
  for (int seed = 0; seed < 10; ++seed) {
    std::mt19937_64 rng = SampleRng(22, seed);
    auto g = RandomMultiRoundGame(2, 3, 2, rng);
    auto o = OracularizeMultiRound(g);
    auto honest = HonestMultiRoundStrategy(o, g, MultiRoundValue(g).witness.answers);
    auto table = Embed<Rational>(honest, o.game.a1_count, o.game.a2_count);
    EXPECT_EQ(EvalTwoProver(o.consistency_only, table), 1);
    EXPECT_EQ(EvalTwoProver(o.game, table), MultiRoundValue(g).value);
  }
}

TEST(OracularizePcp, SingleTriple) {
  auto g = PcpGame<Rational>::Zero(3, 2);
  g.pi[0] = 1;
  g.predicate.assign(8, 1);
  auto o = OracularizePcp(g);
  EXPECT_EQ(o.game.q1_count, 1);
  EXPECT_EQ(o.game.q2_count, 3);
  EXPECT_TRUE(Validate(o.game).ok());
}

TEST(OracularizePcp, SatisfiableFormulaHonestProversWin) {
  auto made = PcpFrom1In3(Formula(4, {{1, 2, 3}, {-1, 2, 4}, {3, -2, -4}}));
  const std::vector<int> proof = BestProof(made.game);
  ASSERT_EQ(EvalPcpProof(made.game, proof), 1);
  auto o = OracularizePcp(made.game);
  auto honest = HonestPcpStrategy(o, made.game, proof);
  EXPECT_EQ(EvalTwoProver(o.game, Embed<Rational>(honest, o.game.a1_count, o.game.a2_count)), 1);
  auto d = OracularizePcpDummy(made.game);
  auto honest_d = HonestDummyStrategy(d, made.game, proof);
  EXPECT_EQ(EvalTwoProver(d.game, Embed<Rational>(honest_d, d.game.a1_count, d.game.a2_count)), 1);
}

TEST(OracularizePcp, ContradictoryFormulaSandwich) {
  auto made = PcpFrom1In3(Formula(3, {{1, 2, 3}, {-1, -2, -3}}));
  const Rational w = oracle::PcpByProofs(made.game);
  ASSERT_LT(w, 1);
  const Rational v = oracle::ClassicalByPairs(OracularizePcp(made.game).game);
  EXPECT_LE(w, v);
  EXPECT_LE(v, 1 - (1 - w) / 3);
}

TEST(OracularizePcp, RandomGameSandwich) {
  for (int seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng = SampleRng(23, seed);
    auto g = RandomPcpGame(3 + seed % 3, 2, rng);
    const Rational w = oracle::PcpByProofs(g);
    const Rational v = ClassicalValue(OracularizePcp(g).game).value;
    EXPECT_LE(w, v) << "seed " << seed;
    EXPECT_LE(v, 1 - (1 - w) / 3) << "seed " << seed;
  }
}

TEST(OracularizePcp, HonestProofAchievesItsValue) {
  for (int seed = 0; seed < 15; ++seed) {
    std::mt19937_64 rng = SampleRng(24, seed);
    auto g = RandomPcpGame(4, 2, rng);
    const std::vector<int> proof = BestProof(g);
    auto o = OracularizePcp(g);
    auto table = Embed<Rational>(HonestPcpStrategy(o, g, proof), o.game.a1_count, o.game.a2_count);
    EXPECT_GE(EvalTwoProver(o.game, table), EvalPcpProof(g, proof));
    EXPECT_EQ(EvalTwoProver(o.consistency_only, table), 1);
  }
}

TEST(OracularizePcpDummy, RealQuestionMarginal) {
  for (int seed = 0; seed < 15; ++seed) {
    std::mt19937_64 rng = SampleRng(25, seed);
    auto g = RandomPcpGame(4, 2, rng);
    auto d = OracularizePcpDummy(g);
    // Direct summation of pi(q) = (1/3) sum_i sum_{t : t_i = q} pi(t).
    std::vector<Rational> expected(g.positions);
    for (std::size_t t = 0; t < g.triples.size(); ++t) {
      for (int q : g.triples[t]) expected[q] += g.pi[t] / 3;
    }
    EXPECT_EQ(PositionMarginal(g), expected);
    EXPECT_EQ(d.position_marginal, expected);
    // The real coordinate of the pair question is uniform over the two
    // coordinates, and the pair's other member is an independent draw.
    std::vector<Rational> real(g.positions);
    for (int j = 0; j < d.game.q2_count; ++j) {
      Rational mass = 0;
      for (int i = 0; i < d.game.q1_count; ++i) mass += d.game.Pi(i, j);
      auto [x, y] = d.q2_pairs[j];
      // P(pair) = pi(x) pi(y) (x = y) or 2 pi(x) pi(y) (x < y); half of
      // each unequal pair belongs to each coordinate.
      if (x == y) {
        real[x] += mass;
      } else {
        real[x] += mass / 2;
        real[y] += mass / 2;
      }
    }
    EXPECT_EQ(real, expected) << "seed " << seed;
    EXPECT_TRUE(Validate(d.game).ok());
  }
}

TEST(OracularizePcpDummy, SingleTripleContradictionStaysBelowOne) {
  // Both clauses live on the same triple, so the game has one triple with a
  // fractional predicate.
  auto made = PcpFrom1In3(Formula(3, {{1, 2, 3}, {-1, -2, -3}}));
  ASSERT_EQ(made.game.positions, 3);
  const Rational w = oracle::PcpByProofs(made.game);
  ASSERT_LT(w, 1);
  EXPECT_LT(oracle::ClassicalByPairs(OracularizePcpDummy(made.game).game), 1);
}

TEST(ParallelRepeat, OneCopyIsIdentity) {
  EXPECT_EQ(ParallelRepeat(Chsh(), 1).pi, Chsh().pi);
  EXPECT_EQ(ParallelRepeat(Chsh(), 1).predicate, Chsh().predicate);
}

TEST(ParallelRepeat, AlwaysAcceptStaysAlwaysAccept) {
  auto g = TwoProverGame<Rational>::Zero(2, 2, 2, 2);
  for (auto& p : g.pi) p = Rational(1, 4);
  for (auto& r : g.predicate) r = 1;
  auto g3 = ParallelRepeat(g, 3);
  for (const Rational& r : g3.predicate) EXPECT_EQ(r, 1);
  EXPECT_TRUE(Validate(g3).ok());
}

TEST(ParallelRepeat, ChshSquaredClassicalValue) {
  const Rational v = oracle::ClassicalByPairs(ParallelRepeat(Chsh(), 2));
  EXPECT_EQ(v, Rational(5, 8));  // 10/16
  EXPECT_EQ(ClassicalValue(ParallelRepeat(Chsh(), 2)).value, v);
}

TEST(ParallelRepeat, ValueMonotonicity) {
  for (int seed = 0; seed < 8; ++seed) {
    std::mt19937_64 rng = SampleRng(26, seed);
    auto g = RandomTwoProverGame(2, 2, 2, 2, rng);
    auto g2 = ParallelRepeat(g, 2);
    const Rational c = ClassicalValue(g).value;
    EXPECT_GE(ClassicalValue(g2).value, c * c) << "seed " << seed;
    EXPECT_LE(NoSignalingValue(g2).value, NoSignalingValue(g).value) << "seed " << seed;
  }
}

TEST(PcpFrom1In3, SinglePositiveClause) {
  auto made = PcpFrom1In3(Formula(3, {{1, 2, 3}}));
  EXPECT_EQ(EvalPcpProof(made.game, std::vector<int>{1, 0, 0}), 1);
  EXPECT_EQ(PcpValue(made.game).value, 1);
}

TEST(PcpFrom1In3, ValueMatchesAssignmentOracle) {
  const std::vector<OneInThreeFormula> formulas = {
      Formula(3, {{1, 2, 3}, {-1, -2, -3}}),
      Formula(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}),
      Formula(5, {{1, -2, 3}, {2, 4, -5}, {-1, -3, 5}, {1, 4, 5}, {-2, -4, 3}}),
      Formula(6, {{1, 2, 3}, {1, 2, 3}, {-1, -2, -3}, {4, 5, 6}, {-4, 5, 1}}),
      TinyOneInThreeFormula()};
  for (const auto& f : formulas) {
    auto made = PcpFrom1In3(f);
    EXPECT_TRUE(Validate(made.game).ok());
    const Rational expected = oracle::OneInThreeByAssignments(f);
    EXPECT_EQ(PcpValue(made.game).value, expected);
    EXPECT_EQ(OneInThreeValueByEnumeration(f), expected);
  }
}

TEST(PcpFrom1In3, TinyCatalogFormula) {
  EXPECT_EQ(oracle::OneInThreeByAssignments(TinyOneInThreeFormula()), Rational(3, 4));
}

TEST(Transforms, OutputsValidateOnRandomInputs) {
  for (int seed = 0; seed < 10; ++seed) {
    std::mt19937_64 rng = SampleRng(27, seed);
    EXPECT_TRUE(Validate(OracularizeMultiRound(RandomMultiRoundGame(2, 2, 2, rng)).game).ok());
    auto pcp = RandomPcpGame(4, 2, rng);
    EXPECT_TRUE(Validate(OracularizePcp(pcp).game).ok());
    EXPECT_TRUE(Validate(OracularizePcpDummy(pcp).game).ok());
    EXPECT_TRUE(Validate(ParallelRepeat(RandomTwoProverGame(2, 3, 2, 2, rng), 2)).ok());
  }
}

}  // namespace
}  // namespace twoprover

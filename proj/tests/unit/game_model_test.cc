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

#include <random>

#include <gtest/gtest.h>

#include "twoprover/catalog.h"
#include "twoprover/game.h"
#include "twoprover/random_games.h"

namespace twoprover {
namespace {

TwoProverGame<Rational> AlwaysAccept(int q, int a) {
  auto g = TwoProverGame<Rational>::Zero(q, q, a, a);
  for (auto& p : g.pi) p = Rational(1, q * q);
  for (auto& r : g.predicate) r = 1;
  return g;
}

TEST(Validate, CatalogGamesAreValid) {
  EXPECT_TRUE(Validate(Chsh()).ok());
  EXPECT_TRUE(Validate(MagicSquare()).ok());
  EXPECT_TRUE(Validate(TinyOneInThree()).ok());
}

TEST(Validate, NamesNormalizationViolation) {
  auto g = Chsh();
  g.pi[0] -= Rational(1, 10);
  const ValidationReport r = Validate(g);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.Summary().find("normalization"), std::string::npos);
  EXPECT_NE(r.Summary().find("9/10"), std::string::npos);
}

TEST(Validate, NamesPredicateRangeViolation) {
  auto g = Chsh();
  g.predicate[3] = 2;
  const ValidationReport r = Validate(g);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.Summary().find("predicate range"), std::string::npos);
}

TEST(Validate, FloatGamesUseTolerance) {
  auto g = ToFloat(Chsh());
  g.pi[0] += 1e-13;
  EXPECT_TRUE(Validate(g).ok());
  g.pi[0] += 1e-3;
  EXPECT_FALSE(Validate(g).ok());
}

TEST(Validate, RejectsShapeMismatch) {
  auto g = Chsh();
  g.predicate.pop_back();
  EXPECT_FALSE(Validate(g).ok());
}

TEST(EvalTwoProver, AlwaysAcceptingPredicateWinsWithCertainty) {
  std::mt19937_64 rng(3);
  auto g = AlwaysAccept(3, 2);
  auto s = RandomProductStrategy(3, 3, 2, 2, rng);
  EXPECT_EQ(EvalTwoProver(g, s), 1);
}

TEST(EvalTwoProver, ChshConstantAnswers) {
  auto s = Embed<Rational>(DeterministicBipartiteStrategy{{0, 0}, {0, 0}}, 2, 2);
  EXPECT_EQ(EvalTwoProver(Chsh(), s), Rational(3, 4));
}

TEST(EvalTwoProver, PrBoxWinsChsh) { EXPECT_EQ(EvalTwoProver(Chsh(), PrBox()), 1); }

TEST(EvalTwoProver, EmbeddingMatchesDirectSum) {
  for (int seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng = SampleRng(11, seed);
    auto g = RandomTwoProverGame(3, 2, 2, 3, rng);
    std::uniform_int_distribution<int> a1(0, 1), a2(0, 2);
    DeterministicBipartiteStrategy det{{a1(rng), a1(rng), a1(rng)}, {a2(rng), a2(rng)}};
    Rational direct = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 2; ++j) direct += g.Pi(i, j) * g.Accept(i, j, det.answers1[i], det.answers2[j]);
    }
    EXPECT_EQ(EvalTwoProver(g, Embed<Rational>(det, 2, 3)), direct) << "seed " << seed;
  }
}

TEST(EvalTwoProver, ValuesStayInUnitInterval) {
  for (int seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng = SampleRng(12, seed);
    auto g = RandomTwoProverGame(2, 3, 3, 2, rng);
    const Rational v = EvalTwoProver(g, RandomProductStrategy(2, 3, 3, 2, rng));
    EXPECT_GE(v, 0);
    EXPECT_LE(v, 1);
  }
}

TEST(EvalMultiRound, SingleRoundPointMass) {
  auto g = MultiRoundGame<Rational>::Zero(2, 2, 1);
  g.pi = {Rational(1, 4), Rational(3, 4)};
  for (auto& r : g.predicate) r = 1;
  auto s = DeterministicMultiRound(2, 2, 1, {{1, 0}});
  EXPECT_EQ(EvalMultiRound(g, s), 1);
}

TEST(EvalMultiRound, EchoStrategyWins) {
  auto g = EchoGame(3, 2);
  // Round k answers q_k; tables are indexed by question prefix and answer prefix.
  std::vector<std::vector<int>> answers(2);
  for (int q = 0; q < 3; ++q) answers[0].push_back(q);
  for (int q = 0; q < 9; ++q) {
    for (int a = 0; a < 3; ++a) answers[1].push_back(q % 3);
  }
  EXPECT_EQ(EvalMultiRound(g, DeterministicMultiRound(3, 3, 2, answers)), 1);
}

TEST(EvalMultiRound, UniformStrategyAveragesAnswers) {
  for (int seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng = SampleRng(13, seed);
    auto g = RandomMultiRoundGame(2, 2, 2, rng);
    auto s = MultiRoundStrategy<Rational>::Zero(2, 2, 2);
    for (auto& table : s.tables) {
      for (auto& p : table) p = Rational(1, 2);
    }
    Rational expected = 0;
    for (int q = 0; q < 4; ++q) {
      for (int a = 0; a < 4; ++a) expected += g.pi[q] * g.Accept(q, a) / 4;
    }
    EXPECT_EQ(EvalMultiRound(g, s), expected) << "seed " << seed;
  }
}

TEST(EvalMultiRound, InducedDistributionsAreDistributions) {
  std::mt19937_64 rng(5);
  auto s = MultiRoundStrategy<Rational>::Zero(2, 3, 2);
  for (int k = 1; k <= 2; ++k) {
    const int blocks = static_cast<int>(s.tables[k - 1].size()) / 3;
    for (int b = 0; b < blocks; ++b) {
      auto d = RandomRationalDistribution(3, rng);
      for (int a = 0; a < 3; ++a) s.tables[k - 1][b * 3 + a] = d[a];
    }
  }
  ASSERT_TRUE(Validate(s).ok());
  for (int q = 0; q < 4; ++q) {
    Rational total = 0;
    for (const Rational& p : InducedAnswerDistribution(s, q)) {
      EXPECT_GE(p, 0);
      total += p;
    }
    EXPECT_EQ(total, 1);
  }
}

PcpGame<Rational> ExactlyOneTrue() {
  auto g = PcpGame<Rational>::Zero(3, 2);
  g.pi[0] = 1;
  for (int c = 0; c < 8; ++c) g.Accept(0, c) = (c == 1 || c == 2 || c == 4) ? 1 : 0;
  return g;
}

TEST(EvalPcp, AlwaysAccepting) {
  auto g = PcpGame<Rational>::Zero(4, 2);
  for (auto& p : g.pi) p = Rational(1, 4);
  for (auto& r : g.predicate) r = 1;
  std::vector<Rational> uniform(16, Rational(1, 16));
  PcpProofDistribution<Rational> d{4, 2, uniform};
  EXPECT_EQ(EvalPcp(g, d), 1);
}

TEST(EvalPcp, ExactlyOneTrueClause) {
  auto g = ExactlyOneTrue();
  EXPECT_EQ(EvalPcp(g, PcpProofDistribution<Rational>::PointMass({0, 0, 0}, 2)), 0);
  EXPECT_EQ(EvalPcp(g, PcpProofDistribution<Rational>::PointMass({1, 0, 0}, 2)), 1);
  EXPECT_EQ(EvalPcpProof(g, std::vector<int>{1, 1, 0}), 0);
}

TEST(NoSignaling, DeterministicStrategiesDoNotSignal) {
  auto s = Embed<Rational>(DeterministicBipartiteStrategy{{1, 0, 1}, {0, 2}}, 2, 3);
  auto check = CheckNoSignaling(s, Rational(0));
  EXPECT_TRUE(check.no_signaling);
  EXPECT_EQ(check.max_violation, 0);
}

TEST(NoSignaling, PrBoxHasUniformMarginals) {
  const auto box = PrBox();
  EXPECT_TRUE(CheckNoSignaling(box, Rational(0)).no_signaling);
  for (int q1 = 0; q1 < 2; ++q1) {
    for (int q2 = 0; q2 < 2; ++q2) {
      for (int a = 0; a < 2; ++a) {
        EXPECT_EQ(box(q1, q2, a, 0) + box(q1, q2, a, 1), Rational(1, 2));
        EXPECT_EQ(box(q1, q2, 0, a) + box(q1, q2, 1, a), Rational(1, 2));
      }
    }
  }
}

TEST(NoSignaling, CopyingTheOtherQuestionSignals) {
  auto s = BipartiteStrategy<Rational>::Zero(2, 2, 2, 2);
  for (int q1 = 0; q1 < 2; ++q1) {
    for (int q2 = 0; q2 < 2; ++q2) s(q1, q2, q2, 0) = 1;
  }
  auto check = CheckNoSignaling(s, Rational(0));
  EXPECT_FALSE(check.no_signaling);
  EXPECT_EQ(check.max_violation, 1);
}

TEST(NoSignaling, ProductStrategiesDoNotSignal) {
  for (int seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng = SampleRng(14, seed);
    auto s = RandomProductStrategy(3, 2, 2, 3, rng);
    auto check = CheckNoSignaling(s, Rational(0));
    EXPECT_TRUE(check.no_signaling);
    EXPECT_EQ(check.max_violation, 0);
  }
}

TEST(PcpTripleDistribution, PointMassProof) {
  auto d = PcpProofDistribution<Rational>::PointMass({1, 0, 1, 1}, 2);
  auto t = PcpTripleDistribution(d, Triple{0, 2, 3});
  for (int c = 0; c < 8; ++c) EXPECT_EQ(t[c], c == 7 ? 1 : 0);
  auto u = PcpTripleDistribution(d, Triple{3, 1, 0});
  for (int c = 0; c < 8; ++c) EXPECT_EQ(u[c], c == 5 ? 1 : 0);
}

TEST(PcpTripleDistribution, UniformProof) {
  PcpProofDistribution<Rational> d{4, 3, std::vector<Rational>(81, Rational(1, 81))};
  for (const Rational& p : PcpTripleDistribution(d, Triple{0, 1, 3})) EXPECT_EQ(p, Rational(1, 27));
}

TEST(PcpTripleDistribution, MixtureOfTwoProofs) {
  PcpProofMixture<Rational> m{3, 2, {{Rational(1, 2), {0, 1, 1}}, {Rational(1, 2), {1, 1, 0}}}};
  auto t = PcpTripleDistribution(m, Triple{0, 1, 2});
  for (int c = 0; c < 8; ++c) EXPECT_EQ(t[c], (c == 3 || c == 6) ? Rational(1, 2) : 0);
}

TEST(PcpTripleDistribution, MarginalsAreDistributions) {
  for (int seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng = SampleRng(15, seed);
    PcpProofDistribution<Rational> d{4, 2, RandomRationalDistribution(16, rng)};
    ASSERT_TRUE(Validate(d).ok());
    for (const Triple& t : PcpGame<Rational>::Zero(4, 2).triples) {
      Rational total = 0;
      for (const Rational& p : PcpTripleDistribution(d, t)) {
        EXPECT_GE(p, 0);
        total += p;
      }
      EXPECT_EQ(total, 1);
    }
  }
}

TEST(StatisticalDifference, HalfTheL1Distance) {
  std::vector<Rational> p{Rational(1, 2), Rational(1, 2), 0};
  std::vector<Rational> q{0, Rational(1, 4), Rational(3, 4)};
  EXPECT_EQ(StatisticalDifference(p, q), Rational(3, 4));
}

}  // namespace
}  // namespace twoprover

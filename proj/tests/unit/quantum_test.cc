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

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.h"
#include "twoprover/catalog.h"
#include "twoprover/errors.h"
#include "twoprover/quantum.h"
#include "twoprover/random_games.h"
#include "twoprover/transforms.h"
#include "twoprover/values.h"

namespace twoprover {
namespace {

Povm Computational(int dim) {
  Povm p;
  p.projective = true;
  for (int a = 0; a < dim; ++a) {
    Matrix e = Matrix::Zero(dim, dim);
    e(a, a) = 1;
    p.elements.push_back(e);
  }
  return p;
}

QuantumStrategy Qubits(const Vector& state) {
  QuantumStrategy s;
  s.dim1 = s.dim2 = 2;
  s.state = state;
  s.prover1 = {Computational(2)};
  s.prover2 = {Computational(2)};
  return s;
}

TEST(JointDistribution, ProductState) {
  Vector psi = Vector::Zero(4);
  psi(0) = 1;
  auto p = JointDistribution(Qubits(psi), 0, 0);
  EXPECT_NEAR(p[0], 1, 1e-12);
  EXPECT_NEAR(p[1] + p[2] + p[3], 0, 1e-12);
}

TEST(JointDistribution, EprPair) {
  Vector psi = Vector::Zero(4);
  psi(0) = psi(3) = 1 / std::sqrt(2.0);
  auto p = JointDistribution(Qubits(psi), 0, 0);
  EXPECT_NEAR(p[0], 0.5, 1e-12);
  EXPECT_NEAR(p[3], 0.5, 1e-12);
  EXPECT_NEAR(p[1], 0, 1e-12);
  EXPECT_NEAR(p[2], 0, 1e-12);
}

TEST(JointDistribution, MagicSquareMatchesDenseOracle) {
  const QuantumStrategy s = MagicSquareStrategy();
  for (int q1 = 0; q1 < 3; ++q1) {
    for (int q2 = 0; q2 < 3; ++q2) {
      auto p = JointDistribution(s, q1, q2);
      for (int a1 = 0; a1 < 4; ++a1) {
        for (int a2 = 0; a2 < 4; ++a2) {
          const double expected = oracle::DenseExpectation(s.state, s.prover1[q1].elements[a1],
                                                           s.prover2[q2].elements[a2]);
          EXPECT_NEAR(p[a1 * 4 + a2], expected, 1e-12);
        }
      }
    }
  }
}

TEST(JointDistribution, RandomStrategiesGiveDistributions) {
  for (int seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng = SampleRng(41, seed);
    QuantumStrategy s = RandomProjectiveStrategy(2, 3, 2, 3, 2, 2, rng);
    s.prover1[1] = RandomPovm(2, 3, rng);
    ASSERT_TRUE(Validate(s).ok());
    for (int q1 = 0; q1 < 2; ++q1) {
      for (int q2 = 0; q2 < 2; ++q2) {
        double total = 0;
        for (double p : JointDistribution(s, q1, q2)) {
          EXPECT_GE(p, -1e-10);
          total += p;
        }
        EXPECT_NEAR(total, 1, 1e-9);
      }
    }
  }
}

TEST(ToBipartiteStrategy, ProductStateGivesProductTable) {
  std::mt19937_64 rng(4);
  Vector a = RandomState(2, rng);
  Vector b = RandomState(2, rng);
  QuantumStrategy s = RandomProjectiveStrategy(2, 2, 2, 2, 2, 2, rng);
  s.state = Vector(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) s.state(i * 2 + j) = a(i) * b(j);
  }
  auto t = ToBipartiteStrategy(s, Chsh());
  for (int q1 = 0; q1 < 2; ++q1) {
    for (int q2 = 0; q2 < 2; ++q2) {
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          const double m1 = t(q1, q2, x, 0) + t(q1, q2, x, 1);
          const double m2 = t(q1, q2, 0, y) + t(q1, q2, 1, y);
          EXPECT_NEAR(t(q1, q2, x, y), m1 * m2, 1e-12);
        }
      }
    }
  }
}

TEST(ToBipartiteStrategy, MagicSquareStrategyWins) {
  auto t = ToBipartiteStrategy(MagicSquareStrategy(), MagicSquare());
  EXPECT_NEAR(EvalTwoProver(ToFloat(MagicSquare()), t), 1, 1e-9);
  EXPECT_NEAR(EvalQuantum(MagicSquare(), MagicSquareStrategy()), 1, 1e-9);
  EXPECT_LE(CheckNoSignaling(t, 1e-9).max_violation, 1e-9);
}

TEST(ToBipartiteStrategy, RandomStrategiesDoNotSignal) {
  for (int seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng = SampleRng(42, seed);
    auto g = RandomTwoProverGame(3, 2, 2, 3, rng);
    QuantumStrategy s = RandomProjectiveStrategy(2, 2, 3, 2, 2, 3, rng);
    auto check = CheckNoSignaling(ToBipartiteStrategy(s, g), 1e-8);
    EXPECT_TRUE(check.no_signaling) << "seed " << seed << " violation " << check.max_violation;
  }
}

TEST(ChshQuantumStrategy, ReachesCosineSquared) {
  EXPECT_NEAR(EvalQuantum(Chsh(), ChshQuantumStrategy()), std::pow(std::cos(M_PI / 8), 2), 1e-12);
}

TEST(SymmetrizeSecondProver, EqualPairBecomesCoinFlip) {
  QuantumStrategy s;
  s.state = Vector::Ones(1);
  Povm one;
  one.projective = true;
  one.elements = {Matrix::Identity(1, 1)};
  s.prover1 = {one};
  Povm fixed;
  fixed.projective = true;
  fixed.elements.assign(4, Matrix::Zero(1, 1));
  fixed.elements[0 * 2 + 1] = Matrix::Identity(1, 1);
  s.prover2 = {fixed};
  QuantumStrategy sym = SymmetrizeSecondProver(s, {{0, 0}}, 2);
  ASSERT_TRUE(Validate(sym).ok());
  auto p = JointDistribution(sym, 0, 0);
  EXPECT_NEAR(p[0], 0.5, 1e-12);
  EXPECT_NEAR(p[3], 0.5, 1e-12);
  EXPECT_NEAR(p[1] + p[2], 0, 1e-12);
}

TEST(SymmetrizeSecondProver, EqualPairMarginalIsCoordinateAverage) {
  for (int seed = 0; seed < 10; ++seed) {
    std::mt19937_64 rng = SampleRng(43, seed);
    const std::vector<std::pair<int, int>> pairs{{0, 0}, {0, 1}, {1, 1}};
    QuantumStrategy s = RandomProjectiveStrategy(2, 2, 1, 2, 3, 4, rng);
    QuantumStrategy sym = SymmetrizeSecondProver(s, pairs, 2);
    for (int j : {0, 2}) {
      auto before = JointDistribution(s, 0, j);
      auto after = JointDistribution(sym, 0, j);
      for (int b = 0; b < 2; ++b) {
        double old_first = 0, old_second = 0, new_first = 0;
        for (int a = 0; a < 2; ++a) {
          for (int c = 0; c < 2; ++c) {
            old_first += before[a * 4 + b * 2 + c];
            old_second += before[a * 4 + c * 2 + b];
            new_first += after[a * 4 + b * 2 + c];
          }
        }
        EXPECT_NEAR(new_first, (old_first + old_second) / 2, 1e-12);
      }
    }
    // Unequal pairs are untouched.
    auto before = JointDistribution(s, 0, 1);
    auto after = JointDistribution(sym, 0, 1);
    for (std::size_t k = 0; k < before.size(); ++k) EXPECT_NEAR(before[k], after[k], 1e-12);
  }
}

TEST(SymmetrizeSecondProver, PreservesDummyGameValue) {
  for (int seed = 0; seed < 10; ++seed) {
    std::mt19937_64 rng = SampleRng(44, seed);
    auto g = RandomPcpGame(3 + seed % 2, 2, rng);
    auto d = OracularizePcpDummy(g);
    QuantumStrategy s = RandomProjectiveStrategy(2, 2, d.game.q1_count, d.game.a1_count,
                                                 d.game.q2_count, d.game.a2_count, rng);
    QuantumStrategy sym = SymmetrizeSecondProver(s, d.q2_pairs, d.alphabet);
    EXPECT_NEAR(EvalQuantum(d.game, sym), EvalQuantum(d.game, s), 1e-9) << "seed " << seed;
  }
}

TEST(SymmetrizeSecondProver, SymmetricStrategyKeepsValue) {
  std::mt19937_64 rng(9);
  auto g = RandomPcpGame(3, 2, rng);
  auto d = OracularizePcpDummy(g);
  const std::vector<int> proof = PcpValue(g).witness;
  QuantumStrategy s = FromDeterministic(HonestDummyStrategy(d, g, proof), d.game.a1_count,
                                        d.game.a2_count);
  QuantumStrategy sym = SymmetrizeSecondProver(s, d.q2_pairs, d.alphabet);
  EXPECT_NEAR(EvalQuantum(d.game, sym), EvalQuantum(d.game, s), 1e-12);
}

TEST(PsdSqrt, Identity) {
  EXPECT_TRUE(PsdSqrt(Matrix::Identity(3, 3)).isApprox(Matrix::Identity(3, 3), 1e-12));
}

TEST(PsdSqrt, Diagonal) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 4;
  m(1, 1) = 9;
  Matrix r = PsdSqrt(m);
  EXPECT_NEAR(r(0, 0).real(), 2, 1e-12);
  EXPECT_NEAR(r(1, 1).real(), 3, 1e-12);
  EXPECT_NEAR(std::abs(r(0, 1)), 0, 1e-12);
}

TEST(PsdSqrt, RandomRoundTrip) {
  for (int seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng(500 + seed);
    Matrix u = RandomUnitary(4, rng);
    Matrix g = u.leftCols(2 + seed % 3);
    Matrix a = g * g.adjoint() * (1 + seed);
    Matrix r = PsdSqrt(a);
    EXPECT_LT((r * r - a).norm(), 1e-8) << "seed " << seed;
  }
}

TEST(PsdSqrt, RejectsNegativeOperators) {
  Matrix m = -Matrix::Identity(2, 2);
  EXPECT_THROW(PsdSqrt(m), PreconditionError);
}

TEST(PureStateTraceDistance, Cases) {
  Vector e0 = Vector::Zero(2), e1 = Vector::Zero(2), plus(2);
  e0(0) = 1;
  e1(1) = 1;
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  EXPECT_NEAR(PureStateTraceDistance(e0, e0), 0, 1e-12);
  EXPECT_NEAR(PureStateTraceDistance(e0, e1), 1, 1e-12);
  EXPECT_NEAR(PureStateTraceDistance(e0, plus), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_THROW(PureStateTraceDistance(e0, Vector::Zero(3)), DimensionError);
  EXPECT_THROW(PureStateTraceDistance(e0, 2.0 * e1), PreconditionError);
}

TEST(Validate, RejectsBrokenPovms) {
  Povm p = Computational(2);
  p.elements[1](1, 1) = 0.5;
  EXPECT_FALSE(Validate(p).ok());
  Povm q = Computational(2);
  q.elements[0](0, 1) = 0.3;
  EXPECT_FALSE(Validate(q).ok());
}

}  // namespace
}  // namespace twoprover

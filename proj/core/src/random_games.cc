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

#include "twoprover/random_games.h"

#include "twoprover/values.h"

namespace twoprover {
namespace {

// Uniform pi over a random nonempty subset of `count` entries.
std::vector<Rational> RandomSupportDistribution(std::size_t count, std::mt19937_64& rng,
                                                double density) {
  std::bernoulli_distribution keep(density);
  std::vector<bool> in(count);
  std::size_t size = 0;
  while (size == 0) {
    for (std::size_t i = 0; i < count; ++i) {
      in[i] = keep(rng);
      size += in[i];
    }
  }
  std::vector<Rational> pi(count);
  const Rational p(1, static_cast<unsigned long>(size));
  for (std::size_t i = 0; i < count; ++i) {
    if (in[i]) pi[i] = p;
  }
  return pi;
}

void FillPredicate(std::vector<Rational>& predicate, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution accept(density);
  for (Rational& r : predicate) r = accept(rng) ? 1 : 0;
}

}  // namespace

std::mt19937_64 SampleRng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

TwoProverGame<Rational> RandomTwoProverGame(int q1, int q2, int a1, int a2, std::mt19937_64& rng,
                                            const RandomGameOptions& options) {
  auto g = TwoProverGame<Rational>::Zero(q1, q2, a1, a2);
  g.pi = RandomSupportDistribution(g.pi.size(), rng, options.support_density);
  FillPredicate(g.predicate, rng, options.accept_density);
  return g;
}

MultiRoundGame<Rational> RandomMultiRoundGame(int q, int a, int rounds, std::mt19937_64& rng,
                                              const RandomGameOptions& options) {
  auto g = MultiRoundGame<Rational>::Zero(q, a, rounds);
  g.pi = RandomSupportDistribution(g.pi.size(), rng, options.support_density);
  FillPredicate(g.predicate, rng, options.accept_density);
  return g;
}

PcpGame<Rational> RandomPcpGame(int positions, int alphabet, std::mt19937_64& rng,
                                const RandomGameOptions& options) {
  auto g = PcpGame<Rational>::Zero(positions, alphabet);
  g.pi = RandomSupportDistribution(g.pi.size(), rng, options.support_density);
  FillPredicate(g.predicate, rng, options.accept_density);
  return g;
}

std::vector<Rational> RandomRationalDistribution(int n, std::mt19937_64& rng, int granularity) {
  std::uniform_int_distribution<int> weight(0, granularity);
  std::vector<int> w(n);
  long total = 0;
  while (total == 0) {
    total = 0;
    for (int& x : w) {
      x = weight(rng);
      total += x;
    }
  }
  std::vector<Rational> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = Rational(w[i], total);
    out[i].canonicalize();
  }
  return out;
}

BipartiteStrategy<Rational> RandomProductStrategy(int q1, int q2, int a1, int a2,
                                                  std::mt19937_64& rng) {
  std::vector<std::vector<Rational>> p1, p2;
  for (int i = 0; i < q1; ++i) p1.push_back(RandomRationalDistribution(a1, rng));
  for (int j = 0; j < q2; ++j) p2.push_back(RandomRationalDistribution(a2, rng));
  auto s = BipartiteStrategy<Rational>::Zero(q1, q2, a1, a2);
  for (int i = 0; i < q1; ++i) {
    for (int j = 0; j < q2; ++j) {
      for (int x = 0; x < a1; ++x) {
        for (int y = 0; y < a2; ++y) s(i, j, x, y) = p1[i][x] * p2[j][y];
      }
    }
  }
  return s;
}

BipartiteStrategy<Rational> RandomNoSignalingStrategy(const TwoProverGame<Rational>& game,
                                                      std::mt19937_64& rng, int vertices) {
  std::uniform_int_distribution<int> coefficient(-3, 3);
  std::vector<Rational> mix = RandomRationalDistribution(vertices, rng);
  auto out = BipartiteStrategy<Rational>::Zero(game.q1_count, game.q2_count, game.a1_count,
                                               game.a2_count);
  for (int v = 0; v < vertices; ++v) {
    std::vector<Rational> weights(game.predicate.size());
    for (Rational& w : weights) w = coefficient(rng);
    if (mix[v] == 0) continue;
    BipartiteStrategy<Rational> vertex = NoSignalingVertex(game, weights);
    for (std::size_t k = 0; k < out.table.size(); ++k) {
      if (vertex.table[k] != 0) out.table[k] += mix[v] * vertex.table[k];
    }
  }
  return out;
}

}  // namespace twoprover

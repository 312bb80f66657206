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

#ifndef TWOPROVER_RANDOM_GAMES_H_
#define TWOPROVER_RANDOM_GAMES_H_

// Seeded instance generators. pi is uniform over a random nonempty support
// and every predicate entry accepts independently with the given density.

#include <cstdint>
#include <random>
#include <vector>

#include "twoprover/game.h"

namespace twoprover {

// Independent generator for sample `index` of a run seeded with `seed`.
std::mt19937_64 SampleRng(std::uint64_t seed, std::uint64_t index);

struct RandomGameOptions {
  double support_density = 0.75;  // chance that a question tuple has pi > 0
  double accept_density = 0.5;
};

TwoProverGame<Rational> RandomTwoProverGame(int q1, int q2, int a1, int a2, std::mt19937_64& rng,
                                            const RandomGameOptions& options = {});
MultiRoundGame<Rational> RandomMultiRoundGame(int q, int a, int rounds, std::mt19937_64& rng,
                                              const RandomGameOptions& options = {});
PcpGame<Rational> RandomPcpGame(int positions, int alphabet, std::mt19937_64& rng,
                                const RandomGameOptions& options = {});

// Distribution over n outcomes with weights drawn from {0, ..., granularity},
// resampled until the total is positive.
std::vector<Rational> RandomRationalDistribution(int n, std::mt19937_64& rng, int granularity = 4);

// theta = p1(a1|q1) p2(a2|q2) with independent random local tables.
BipartiteStrategy<Rational> RandomProductStrategy(int q1, int q2, int a1, int a2,
                                                  std::mt19937_64& rng);

// Convex combination (random rational weights) of `vertices` no-signaling
// vertices, each maximizing an integer objective drawn from [-3, 3].
BipartiteStrategy<Rational> RandomNoSignalingStrategy(const TwoProverGame<Rational>& game,
                                                      std::mt19937_64& rng, int vertices = 2);

}  // namespace twoprover

#endif  // TWOPROVER_RANDOM_GAMES_H_

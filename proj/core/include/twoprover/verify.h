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

#ifndef TWOPROVER_VERIFY_H_
#define TWOPROVER_VERIFY_H_

// Randomized verification suites. Each sample draws its instance from
// SampleRng(seed, index), so results do not depend on the worker count.
//
//   lemma-wns        no-signaling value of oracularized multi-round games
//   lemma-game       entangled lower bound of dummy-oracularized games
//   ns-claims        every inequality of the no-signaling rounding
//   com-claims       every inequality of the entangled rounding
//   lemma-distance   the distance chain for random commuting POVMs
//   claim-selection  moving one operator next to the state

#include <cstdint>
#include <string>
#include <vector>

#include "twoprover/report.h"

namespace twoprover {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int samples = 20;
  // Multi-round instances.
  int questions = 2;
  int answers = 2;
  int rounds = 2;
  // Probability that a predicate entry accepts in random games.
  double accept_density = 0.25;
  // Three-query instances; 0 alternates between 3 and 4 positions.
  int positions = 0;
  int alphabet = 2;
  // Local dimension per side of random quantum strategies.
  int dim = 2;
  // Strategies per game in ns-claims besides the LP optimum.
  int strategies = 10;
  // Longest operator sequence in claim-selection.
  int max_sequence = 3;
  // see-saw effort in lemma-game.
  int restarts = 4;
  // Added to every left-hand side before evaluation (harness use).
  double perturb = 0;
  int threads = 0;
};

std::vector<std::string> SuiteNames();

// Throws PreconditionError for an unknown suite.
InequalityReport RunSuite(const std::string& suite, const VerifyOptions& options);

}  // namespace twoprover

#endif  // TWOPROVER_VERIFY_H_

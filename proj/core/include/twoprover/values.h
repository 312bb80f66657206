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

#ifndef TWOPROVER_VALUES_H_
#define TWOPROVER_VALUES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "twoprover/game.h"
#include "twoprover/lp.h"
#include "twoprover/quantum.h"

namespace twoprover {

template <typename Value, typename Witness>
struct ValueResult {
  Value value{};
  Witness witness{};
  std::string method;
  bool exact = false;
};

// Exhaustive search over deterministic strategies: the side with fewer
// strategies is enumerated and the other side best-responds. The number of
// enumerated strategies is bounded by the table-size guard. Ties resolve to
// the first strategy in odometer order (question 0 varies slowest).
template <Scalar S>
ValueResult<S, DeterministicBipartiteStrategy> ClassicalValue(const TwoProverGame<S>& game);

// Backward induction over conversation prefixes; the witness answers the
// smallest optimal letter at every history.
struct MultiRoundWitness {
  MultiRoundStrategy<Rational> strategy;
  std::vector<std::vector<int>> answers;  // as in DeterministicMultiRound
};
ValueResult<Rational, MultiRoundWitness> MultiRoundValue(const MultiRoundGame<Rational>& game);

// Best deterministic proof; ties resolve to the smallest proof code.
ValueResult<Rational, std::vector<int>> PcpValue(const PcpGame<Rational>& game);

struct NoSignalingWitness {
  BipartiteStrategy<Rational> strategy;
  LpSolution lp;
  int lp_variables = 0;
  int lp_constraints = 0;
};

// Exact no-signaling value by linear programming.
ValueResult<Rational, NoSignalingWitness> NoSignalingValue(const TwoProverGame<Rational>& game);

// Vertex of the no-signaling polytope (restricted to the support of pi)
// maximizing sum_{q,a} weights[q,a] * theta(a|q); weights are indexed like
// the predicate. Used to produce adversarial strategies.
BipartiteStrategy<Rational> NoSignalingVertex(const TwoProverGame<Rational>& game,
                                              const std::vector<Rational>& weights);

struct SeeSawOptions {
  int dim1 = 2;
  int dim2 = 2;
  int restarts = 10;
  int max_iterations = 500;
  std::uint64_t seed = 0;
  // Stop a restart once a full sweep improves by less than this.
  double tolerance = 1e-12;
  // Start restart 0 from an optimal deterministic strategy when the
  // classical value is within the enumeration guard.
  bool classical_warm_start = true;
  int threads = 0;
};

struct SeeSawWitness {
  QuantumStrategy strategy;
  int best_restart = -1;
  // Objective after every half-step of the best restart (state, prover 1,
  // prover 2, state, ...).
  std::vector<double> trace;
  std::vector<double> restart_values;
};

// Lower bound on the entangled value by alternating optimization.
ValueResult<double, SeeSawWitness> EntangledLowerBound(const TwoProverGame<double>& game,
                                                       const SeeSawOptions& options);
ValueResult<double, SeeSawWitness> EntangledLowerBound(const TwoProverGame<Rational>& game,
                                                       const SeeSawOptions& options);

}  // namespace twoprover

#endif  // TWOPROVER_VALUES_H_

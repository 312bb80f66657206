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

#ifndef TWOPROVER_TRANSFORMS_H_
#define TWOPROVER_TRANSFORMS_H_

// Game transformations.
//
// Every oracularization keeps only questions of positive probability and
// returns the index maps from the compact question sets back to the base
// game. Each result also carries the consistency-only and simulation-only
// variants of the transformed game (same questions and distribution), so
// failure probabilities of the two tests can be measured by evaluation.

#include <cstdint>
#include <utility>
#include <vector>

#include "twoprover/game.h"

namespace twoprover {

// Dense bijection between the union of Q^1, ..., Q^r and 0..N-1. Tuples of
// length k come after all shorter tuples; within a length they follow the
// mixed-radix code.
class PrefixIndex {
 public:
  PrefixIndex(int base, int max_length);

  std::int64_t size() const { return offsets_.back(); }
  std::int64_t Encode(int length, std::int64_t code) const;
  std::int64_t Encode(const std::vector<int>& tuple) const;
  // (length, code) of a dense index.
  std::pair<int, std::int64_t> Decode(std::int64_t index) const;
  std::vector<int> DecodeTuple(std::int64_t index) const;
  int LengthOf(std::int64_t index) const { return Decode(index).first; }

 private:
  int base_;
  int max_length_;
  std::vector<std::int64_t> offsets_;  // offsets_[k-1] = first index of length k
};

struct MultiRoundOracularization {
  TwoProverGame<Rational> game;
  TwoProverGame<Rational> consistency_only;
  TwoProverGame<Rational> simulation_only;
  int rounds = 0;
  PrefixIndex question_prefixes{1, 1};  // over Q, used for q1 and q2 of the base
  PrefixIndex answer_prefixes{1, 1};    // over A, indexes the second prover's answers
  std::vector<std::int64_t> q1_codes;   // prover-1 question -> code in Q^r
  std::vector<std::int64_t> q2_prefixes;  // prover-2 question -> index in question_prefixes
  // Reverse maps; -1 when the tuple is not in the support.
  std::vector<int> q1_of_code;
  std::vector<int> q2_of_prefix;
};

MultiRoundOracularization OracularizeMultiRound(const MultiRoundGame<Rational>& g);

struct PcpOracularization {
  TwoProverGame<Rational> game;
  TwoProverGame<Rational> consistency_only;
  TwoProverGame<Rational> simulation_only;
  std::vector<std::size_t> q1_triples;  // prover-1 question -> triple index in g
  std::vector<int> q2_positions;        // prover-2 question -> position
  std::vector<int> q1_of_triple;        // -1 when off support
  std::vector<int> q2_of_position;      // -1 when never queried
};

// First-prover answers are codes of (a1,a2,a3) in A^3; the second prover
// answers one letter.
PcpOracularization OracularizePcp(const PcpGame<Rational>& g);

// The second prover's question is an unordered pair {q, q~} written as
// (x, y) with x <= y; his answer (b1, b2) is coded b1 * A + b2 and b1, b2
// answer x, y respectively. The verifier's choice of which coordinate is
// real is private and is integrated out, so R' can be fractional.
struct DummyOracularization {
  TwoProverGame<Rational> game;
  TwoProverGame<Rational> consistency_only;
  TwoProverGame<Rational> simulation_only;
  std::vector<std::size_t> q1_triples;
  std::vector<std::pair<int, int>> q2_pairs;  // sorted, x <= y
  std::vector<int> q1_of_triple;
  // Dense [x * Q + y] -> prover-2 question for x <= y, -1 off support.
  std::vector<int> q2_of_pair;
  std::vector<Rational> position_marginal;  // pi(q) over positions
  int positions = 0;
  int alphabet = 0;

  int PairQuestion(int x, int y) const {
    if (x > y) std::swap(x, y);
    return q2_of_pair[static_cast<std::size_t>(x) * positions + y];
  }
};

DummyOracularization OracularizePcpDummy(const PcpGame<Rational>& g);

// pi(q) = (1/3) sum_i sum_{triples with q_i = q} pi(triple).
template <Scalar S>
std::vector<S> PositionMarginal(const PcpGame<S>& g);

// Product distribution and conjunction of predicates. Question and answer
// tuples are coded in mixed radix, copy 1 most significant.
TwoProverGame<Rational> ParallelRepeat(const TwoProverGame<Rational>& g, int n);

struct Literal {
  int variable = 0;  // 0-based
  bool positive = true;
};

struct OneInThreeFormula {
  int num_variables = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

struct PcpFromFormula {
  PcpGame<Rational> game;
  std::vector<int> position_variable;  // position -> original variable
  std::vector<int> variable_position;  // original variable -> position, -1 if dropped
};

// Positions are the queried variables in increasing order. pi is uniform
// over clauses; clauses on the same variable set share one triple and their
// acceptance bits are averaged, which keeps the value equal to the expected
// fraction of satisfied clauses.
PcpFromFormula PcpFrom1In3(const OneInThreeFormula& f);

// Best fraction of exactly-one-satisfied clauses over all assignments.
Rational OneInThreeValueByEnumeration(const OneInThreeFormula& f);

// Honest deterministic provers reading every answer from the proof.
DeterministicBipartiteStrategy HonestPcpStrategy(const PcpOracularization& o,
                                                 const PcpGame<Rational>& g,
                                                 const std::vector<int>& proof);
DeterministicBipartiteStrategy HonestDummyStrategy(const DummyOracularization& o,
                                                   const PcpGame<Rational>& g,
                                                   const std::vector<int>& proof);

// Honest provers for a multi-round game: both run the same deterministic
// single-prover strategy (tables as in DeterministicMultiRound).
DeterministicBipartiteStrategy HonestMultiRoundStrategy(
    const MultiRoundOracularization& o, const MultiRoundGame<Rational>& g,
    const std::vector<std::vector<int>>& answers);

// Maps every second-prover answer of the wrong length to a fixed answer of
// the asked length (truncate, or pad with zeros). The change is local to
// prover 2, so no-signaling is preserved; it never lowers the value.
BipartiteStrategy<Rational> CanonicalizeSecondProverLengths(
    const MultiRoundOracularization& o, const BipartiteStrategy<Rational>& strategy);

}  // namespace twoprover

#endif  // TWOPROVER_TRANSFORMS_H_

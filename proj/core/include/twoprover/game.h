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

#ifndef TWOPROVER_GAME_H_
#define TWOPROVER_GAME_H_

// Game models and strategy tables.
//
// Three kinds of games are represented:
//   * TwoProverGame   -- one round, two isolated provers.
//   * MultiRoundGame  -- one prover, r rounds, questions fixed in advance.
//   * PcpGame         -- one prover writes a proof, three positions are read.
//
// Questions and answers are dense 0-based indices. Tuples over a base set
// (Q^r, A^r, A^3, ...) are encoded in mixed radix with the first coordinate
// most significant, so code(x_1, ..., x_k) = ((x_1 * B + x_2) * B + ...) .
//
// Predicates hold acceptance probabilities in [0, 1]. Ordinary games use
// only 0 and 1; fractional entries arise when a verifier coin that the
// provers never see is integrated out (see transforms.h).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "twoprover/errors.h"
#include "twoprover/limits.h"
#include "twoprover/scalar.h"

namespace twoprover {

// base^exponent as int64; throws SizeGuardError on int64 overflow.
std::int64_t IntPow(int base, int exponent);

// Mixed-radix helpers, first digit most significant.
std::int64_t EncodeTuple(const std::vector<int>& digits, int base);
std::vector<int> DecodeTuple(std::int64_t code, int base, int length);

// Human-readable names; any vector may be empty (indices are used instead).
struct GameLabels {
  std::vector<std::string> questions1;
  std::vector<std::string> questions2;
  std::vector<std::string> answers1;
  std::vector<std::string> answers2;

  bool operator==(const GameLabels&) const = default;
};

template <Scalar S>
struct TwoProverGame {
  int q1_count = 0;
  int q2_count = 0;
  int a1_count = 0;
  int a2_count = 0;
  std::vector<S> pi;         // [q1][q2]
  std::vector<S> predicate;  // [q1][q2][a1][a2]
  GameLabels labels;

  // All-zero distribution and predicate; checks the size guard.
  static TwoProverGame Zero(int q1, int q2, int a1, int a2);

  std::size_t PairIndex(int q1, int q2) const {
    return static_cast<std::size_t>(q1) * q2_count + q2;
  }
  std::size_t PredicateIndex(int q1, int q2, int a1, int a2) const {
    return ((PairIndex(q1, q2) * a1_count) + a1) * a2_count + a2;
  }
  const S& Pi(int q1, int q2) const { return pi[PairIndex(q1, q2)]; }
  S& Pi(int q1, int q2) { return pi[PairIndex(q1, q2)]; }
  const S& Accept(int q1, int q2, int a1, int a2) const {
    return predicate[PredicateIndex(q1, q2, a1, a2)];
  }
  S& Accept(int q1, int q2, int a1, int a2) {
    return predicate[PredicateIndex(q1, q2, a1, a2)];
  }

  bool operator==(const TwoProverGame&) const = default;
};

template <Scalar S>
struct MultiRoundGame {
  int q_count = 0;
  int a_count = 0;
  int rounds = 0;
  std::vector<S> pi;         // [code of q in Q^r]
  std::vector<S> predicate;  // [code of q][code of a in A^r]

  static MultiRoundGame Zero(int q_count, int a_count, int rounds);

  std::int64_t QuestionTuples() const { return IntPow(q_count, rounds); }
  std::int64_t AnswerTuples() const { return IntPow(a_count, rounds); }
  const S& Accept(std::int64_t q_code, std::int64_t a_code) const {
    return predicate[q_code * AnswerTuples() + a_code];
  }
  S& Accept(std::int64_t q_code, std::int64_t a_code) {
    return predicate[q_code * AnswerTuples() + a_code];
  }

  bool operator==(const MultiRoundGame&) const = default;
};

using Triple = std::array<int, 3>;

// Nonadaptive three-query proof-checking game. The distribution lives on
// strictly increasing triples, listed in lexicographic order by triples().
template <Scalar S>
struct PcpGame {
  int positions = 0;
  int alphabet = 0;
  std::vector<Triple> triples;  // all q1 < q2 < q3, lexicographic
  std::vector<S> pi;            // [triple index]
  std::vector<S> predicate;     // [triple index][code of (a1,a2,a3) in A^3]

  static PcpGame Zero(int positions, int alphabet);

  // Index of an increasing triple; throws DimensionError otherwise.
  std::size_t TripleIndex(const Triple& t) const;
  int AnswerTriples() const { return alphabet * alphabet * alphabet; }
  const S& Accept(std::size_t t, int a_code) const {
    return predicate[t * AnswerTriples() + a_code];
  }
  S& Accept(std::size_t t, int a_code) {
    return predicate[t * AnswerTriples() + a_code];
  }

  bool operator==(const PcpGame&) const = default;
};

// theta(a1, a2 | q1, q2).
template <Scalar S>
struct BipartiteStrategy {
  int q1_count = 0;
  int q2_count = 0;
  int a1_count = 0;
  int a2_count = 0;
  std::vector<S> table;  // [q1][q2][a1][a2]

  static BipartiteStrategy Zero(int q1, int q2, int a1, int a2);

  std::size_t Index(int q1, int q2, int a1, int a2) const {
    return ((static_cast<std::size_t>(q1) * q2_count + q2) * a1_count + a1) *
               a2_count + a2;
  }
  const S& operator()(int q1, int q2, int a1, int a2) const {
    return table[Index(q1, q2, a1, a2)];
  }
  S& operator()(int q1, int q2, int a1, int a2) {
    return table[Index(q1, q2, a1, a2)];
  }
};

struct DeterministicBipartiteStrategy {
  std::vector<int> answers1;  // indexed by q1
  std::vector<int> answers2;  // indexed by q2

  bool operator==(const DeterministicBipartiteStrategy&) const = default;
};

// Round k (1-based) conditional theta^(k)(a_k | q_[1,k], a_[1,k-1]) is
// stored in tables[k-1] at index ((code(q_[1,k]) * A^(k-1)) + code(a_[1,k-1]))
// * A + a_k.
template <Scalar S>
struct MultiRoundStrategy {
  int q_count = 0;
  int a_count = 0;
  int rounds = 0;
  std::vector<std::vector<S>> tables;

  static MultiRoundStrategy Zero(int q_count, int a_count, int rounds);

  std::size_t Index(int round, std::int64_t q_prefix, std::int64_t a_prefix,
                    int answer) const {
    return static_cast<std::size_t>(
        (q_prefix * IntPow(a_count, round - 1) + a_prefix) * a_count + answer);
  }
  const S& At(int round, std::int64_t q_prefix, std::int64_t a_prefix,
              int answer) const {
    return tables[round - 1][Index(round, q_prefix, a_prefix, answer)];
  }
  S& At(int round, std::int64_t q_prefix, std::int64_t a_prefix, int answer) {
    return tables[round - 1][Index(round, q_prefix, a_prefix, answer)];
  }
};

// Dense distribution over proofs A^Q; proof codes are mixed radix with
// position 0 most significant.
template <Scalar S>
struct PcpProofDistribution {
  int positions = 0;
  int alphabet = 0;
  std::vector<S> probabilities;

  static PcpProofDistribution Zero(int positions, int alphabet);
  static PcpProofDistribution PointMass(const std::vector<int>& proof,
                                        int alphabet);
};

// Sparse mixture of proofs, used where only induced triple distributions are
// needed and A^Q should not be materialized.
template <Scalar S>
struct PcpProofMixture {
  int positions = 0;
  int alphabet = 0;
  std::vector<std::pair<S, std::vector<int>>> components;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string Summary() const;
};

template <Scalar S>
ValidationReport Validate(const TwoProverGame<S>& game);
template <Scalar S>
ValidationReport Validate(const MultiRoundGame<S>& game);
template <Scalar S>
ValidationReport Validate(const PcpGame<S>& game);
template <Scalar S>
ValidationReport Validate(const BipartiteStrategy<S>& strategy);
template <Scalar S>
ValidationReport Validate(const MultiRoundStrategy<S>& strategy);
template <Scalar S>
ValidationReport Validate(const PcpProofDistribution<S>& proof);

// Throws ValidationError carrying the report summary when invalid.
template <typename T>
void RequireValid(const T& object, const char* what) {
  ValidationReport report = Validate(object);
  if (!report.ok()) {
    throw ValidationError(std::string(what) + ": " + report.Summary());
  }
}

// Winning probability sum_{q} pi(q) sum_{a} theta(a|q) R(a|q).
template <Scalar S>
S EvalTwoProver(const TwoProverGame<S>& game, const BipartiteStrategy<S>& strategy);

template <Scalar S>
S EvalMultiRound(const MultiRoundGame<S>& game, const MultiRoundStrategy<S>& strategy);

template <Scalar S>
S EvalPcp(const PcpGame<S>& game, const PcpProofDistribution<S>& proof);

// Winning probability of one deterministic proof.
template <Scalar S>
S EvalPcpProof(const PcpGame<S>& game, const std::vector<int>& proof);

template <Scalar S>
struct NoSignalingCheck {
  bool no_signaling = true;
  S max_violation = S(0);
};

// Largest discrepancy between per-prover marginals across the other
// prover's questions; no_signaling iff that discrepancy <= tolerance.
template <Scalar S>
NoSignalingCheck<S> CheckNoSignaling(const BipartiteStrategy<S>& strategy,
                                     const S& tolerance);

// Distribution over A^3 (mixed-radix code) of the letters at `triple`.
// The triple need not be increasing but its positions must be distinct.
template <Scalar S>
std::vector<S> PcpTripleDistribution(const PcpProofDistribution<S>& proof,
                                     const Triple& triple);
template <Scalar S>
std::vector<S> PcpTripleDistribution(const PcpProofMixture<S>& proof,
                                     const Triple& triple);

// Point-mass table of a deterministic strategy.
template <Scalar S>
BipartiteStrategy<S> Embed(const DeterministicBipartiteStrategy& strategy,
                           int a1_count, int a2_count);

// Distribution over A^r induced by a multi-round strategy on questions q.
template <Scalar S>
std::vector<S> InducedAnswerDistribution(const MultiRoundStrategy<S>& strategy,
                                         std::int64_t q_code);

// Deterministic multi-round strategy answering answers[k-1][...] (indexed as
// in MultiRoundStrategy without the trailing answer coordinate).
MultiRoundStrategy<Rational> DeterministicMultiRound(
    int q_count, int a_count, int rounds,
    const std::vector<std::vector<int>>& answers);

TwoProverGame<double> ToFloat(const TwoProverGame<Rational>& game);
MultiRoundGame<double> ToFloat(const MultiRoundGame<Rational>& game);
PcpGame<double> ToFloat(const PcpGame<Rational>& game);
BipartiteStrategy<double> ToFloat(const BipartiteStrategy<Rational>& strategy);

// Statistical difference (half the l1 distance) of two distributions.
template <Scalar S>
S StatisticalDifference(const std::vector<S>& p, const std::vector<S>& q);

}  // namespace twoprover

#endif  // TWOPROVER_GAME_H_

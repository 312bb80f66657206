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

#ifndef TWOPROVER_NO_SIGNALING_ROUNDING_H_
#define TWOPROVER_NO_SIGNALING_ROUNDING_H_

// Rounding a no-signaling strategy of an oracularized multi-round game back
// to a single-prover strategy, with every intermediate quantity exposed.
// All arithmetic is exact.

#include <cstdint>
#include <vector>

#include "twoprover/game.h"
#include "twoprover/report.h"
#include "twoprover/transforms.h"

namespace twoprover {

struct NsMarginalTables {
  int q_count = 0;
  int a_count = 0;
  int rounds = 0;
  // Supported base questions, in the order of the first prover's questions.
  std::vector<std::int64_t> questions;
  std::vector<Rational> question_weight;  // pi(q)
  // alpha[s] over A^r and alpha_prefix[s][k-1] over A^k for question s.
  std::vector<std::vector<Rational>> alpha;
  std::vector<std::vector<std::vector<Rational>>> alpha_prefix;
  // beta[p] over A^k for the question prefix with dense index p (see
  // MultiRoundOracularization::question_prefixes); empty when unsupported.
  std::vector<std::vector<Rational>> beta;
  // Mass on second-prover answers that disagree with the first prover's
  // prefix, per question and round.
  std::vector<std::vector<Rational>> eps_cons_qk;
  std::vector<Rational> eps_cons_q;
  std::vector<Rational> eps_round;  // failure probability when round k is checked
  Rational eps_cons;
  Rational eps_sim;
  Rational eps;

  std::int64_t QuestionPrefix(std::int64_t q_code, int k) const;
  std::int64_t AnswerPrefix(std::int64_t a_code, int k) const;
};

// Throws PreconditionError when theta signals (exactly), when it puts mass
// on second-prover answers of the wrong length, or when beta depends on the
// question suffix; DimensionError on shape mismatch.
NsMarginalTables NsDecompose(const MultiRoundGame<Rational>& game,
                             const MultiRoundOracularization& oracularized,
                             const BipartiteStrategy<Rational>& theta);

// theta^(k)(a_k | q_[1,k], a_[1,k-1]) = beta(a_[1,k]) / sum_a beta(a_[1,k-1] a);
// uniform on a zero denominator or an unsupported prefix.
MultiRoundStrategy<Rational> RoundNoSignaling(const NsMarginalTables& tables);

struct HybridFamily {
  // h[k-1][s] over A^r for supported question s. Only h[0] is induced by a
  // strategy; the others are kept as raw distributions.
  std::vector<std::vector<std::vector<Rational>>> h;
  std::vector<Rational> p;  // p[k-1] = sum_q pi(q) sum_a h R
};

HybridFamily BuildHybrids(const NsMarginalTables& tables,
                          const MultiRoundStrategy<Rational>& rounded,
                          const MultiRoundGame<Rational>& game);

struct NsRoundingRun {
  NsMarginalTables tables;
  MultiRoundStrategy<Rational> rounded;
  HybridFamily hybrids;
  InequalityReport report;
};

// Decomposes, rounds, builds the hybrids and checks every inequality of the
// argument exactly against base value `w`. `label` prefixes instance names.
NsRoundingRun RunNsRounding(const MultiRoundGame<Rational>& game,
                            const MultiRoundOracularization& oracularized,
                            const BipartiteStrategy<Rational>& theta, const Rational& w,
                            const std::string& label = "");

}  // namespace twoprover

#endif  // TWOPROVER_NO_SIGNALING_ROUNDING_H_

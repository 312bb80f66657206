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

#ifndef TWOPROVER_COMMUTING_ROUNDING_H_
#define TWOPROVER_COMMUTING_ROUNDING_H_

// Rounding an entangled strategy of a dummy-oracularized three-query game
// into a proof distribution, and the distance bookkeeping around it. All
// operators act on the joint space C^{d1} (x) C^{d2}.

#include <array>
#include <string>
#include <vector>

#include "twoprover/game.h"
#include "twoprover/quantum.h"
#include "twoprover/report.h"
#include "twoprover/transforms.h"

namespace twoprover {

inline constexpr double kRoundingTolerance = 1e-7;

struct ComRoundingTables {
  int positions = 0;
  int alphabet = 0;
  int dim = 0;  // d1 * d2
  Vector state;

  // Queried positions by descending pi(q), ties by index; rank_of[q] is the
  // inverse (-1 for positions never queried).
  std::vector<int> order;
  std::vector<int> rank_of;
  std::vector<double> position_weight;

  // Indexed [position][letter]; empty for unqueried positions.
  std::vector<std::vector<Matrix>> m_bar;
  std::vector<std::vector<Matrix>> n_bar;
  std::vector<std::vector<Matrix>> x;  // sqrt(m_bar)
  std::vector<std::vector<Matrix>> y;  // sqrt(n_bar)

  // Base-game triples asked to the first prover, their weights and
  // <Psi|M_t^c|Psi> over answer codes c.
  std::vector<Triple> triples;
  std::vector<double> triple_weight;
  std::vector<std::vector<double>> triple_answer;

  std::vector<double> d1;                // [q]
  std::vector<std::vector<double>> d2;   // [q][q~]
  std::vector<std::array<double, 3>> d3;  // [triple][slot]
  std::vector<std::vector<double>> d4;   // [q1][q2]

  double eps = 0;
  double eps_cons = 0;
  double eps_sim = 0;

  int queried() const { return static_cast<int>(order.size()); }
};

// Requires projective measurements and a second prover that answers equal
// letters on equal pair questions (see SymmetrizeSecondProver); throws
// PreconditionError otherwise.
ComRoundingTables ComDecompose(const PcpGame<Rational>& game,
                               const DummyOracularization& oracularized,
                               const QuantumStrategy& strategy);

struct RoundedProof {
  PcpProofDistribution<double> theta;  // renormalized
  std::vector<double> raw;             // before renormalization
  double deficit = 0;                  // 1 - sum(raw)
};

// theta(Pi) = |X_{last}^{Pi} ... X_{first}^{Pi} Psi|^2 in rank order;
// unqueried positions carry letter 0.
RoundedProof RoundCommuting(const ComRoundingTables& tables);

// d(t) for tables.triples[triple_index]: bound on the statistical difference
// between the rounded and the original answer distributions on t.
double TripleDistanceBound(const ComRoundingTables& tables, std::size_t triple_index);

struct LemmaDistanceValues {
  double d_squared = 0;
  double middle = 0;  // 2 (1 - <psi|xi>)
  double two_p = 0;
};

// psi = sum_a |a> sqrt(M_a) phi and xi = sum_a |a> sqrt(N_a) phi for
// commuting POVMs on the space of phi. Throws PreconditionError when the
// families do not commute (1e-9) and for a non-unit phi.
LemmaDistanceValues LemmaDistance(const Povm& m, const Povm& n, const Vector& phi);
// M acting on the first factor and N on the second.
LemmaDistanceValues LemmaDistanceBipartite(const Povm& m, const Povm& n, const Vector& phi);

struct SelectionValues {
  double lhs = 0;
  double rhs = 0;
};

// Moving X_{t_i} next to Psi in X_{t_m} ... X_{t_1} Psi (i is 1-based).
SelectionValues ClaimSelection(const ComRoundingTables& tables, const std::vector<int>& t, int i);

// Every inequality of the argument at tolerance kRoundingTolerance, plus
// cross-checks against direct evaluation. `w` is the base game's value.
InequalityReport VerifyComClaims(const PcpGame<Rational>& game,
                                 const DummyOracularization& oracularized,
                                 const QuantumStrategy& strategy, const ComRoundingTables& tables,
                                 const RoundedProof& rounded, const Rational& w,
                                 const std::string& label = "");

}  // namespace twoprover

#endif  // TWOPROVER_COMMUTING_ROUNDING_H_

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

#ifndef TWOPROVER_TESTS_SUPPORT_ORACLES_H_
#define TWOPROVER_TESTS_SUPPORT_ORACLES_H_

// Reference computations used to derive expected values. They share no code
// paths with the library beyond the game containers and tuple coding.

#include <optional>
#include <vector>

#include "twoprover/game.h"
#include "twoprover/lp.h"
#include "twoprover/quantum.h"
#include "twoprover/transforms.h"

namespace twoprover::oracle {

// max over every pair of deterministic strategies of the directly summed
// winning probability.
Rational ClassicalByPairs(const TwoProverGame<Rational>& game);

// max over every deterministic single-prover strategy, written as a
// function from question prefixes to letters.
Rational MultiRoundByTables(const MultiRoundGame<Rational>& game);

// max over every proof of sum_t pi(t) R(t, proof|t).
Rational PcpByProofs(const PcpGame<Rational>& game);

// Fraction of exactly-one-true clauses, maximized over assignments.
Rational OneInThreeByAssignments(const OneInThreeFormula& formula);

// max c.x subject to A x <= b, x >= 0, by enumerating every choice of n
// tight constraints. Empty when infeasible; unboundedness is not detected.
std::optional<Rational> LpByVertices(const std::vector<std::vector<Rational>>& a,
                                     const std::vector<Rational>& b,
                                     const std::vector<Rational>& c);

// <Psi| M (x) N |Psi> with explicitly formed tensor products.
double DenseExpectation(const Vector& state, const Matrix& m, const Matrix& n);

}  // namespace twoprover::oracle

#endif  // TWOPROVER_TESTS_SUPPORT_ORACLES_H_

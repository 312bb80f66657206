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

#ifndef TWOPROVER_CATALOG_H_
#define TWOPROVER_CATALOG_H_

#include <string>
#include <vector>

#include "twoprover/game_io.h"
#include "twoprover/quantum.h"
#include "twoprover/transforms.h"

namespace twoprover {

// Uniform questions in {0,1}^2; accept iff a1 xor a2 = q1 and q2.
TwoProverGame<Rational> Chsh();

// Uniform marginals, a1 xor a2 = q1 and q2 always.
BipartiteStrategy<Rational> PrBox();

// Qubit strategy attaining cos^2(pi/8) on CHSH.
QuantumStrategy ChshQuantumStrategy();

// 3x3 Magic Square: prover 1 gets a row and answers an even-parity triple,
// prover 2 gets a column and answers an odd-parity triple; they must agree on
// the shared cell. Answer k encodes bits (k >> 1, k & 1) and the third bit is
// fixed by parity.
TwoProverGame<Rational> MagicSquare();
int MagicSquareBit(bool row_side, int answer, int cell);

// Two EPR pairs measured with the Pauli square; wins with certainty.
QuantumStrategy MagicSquareStrategy();

// All four clauses on four variables, positive literals.
OneInThreeFormula TinyOneInThreeFormula();
PcpGame<Rational> TinyOneInThree();

// q uniform on Q^r, A = Q, accept iff the answers repeat the questions.
MultiRoundGame<Rational> EchoGame(int q_count, int rounds);

std::vector<std::string> CatalogNames();
// Throws PreconditionError for unknown names.
AnyGame CatalogGame(const std::string& name);

}  // namespace twoprover

#endif  // TWOPROVER_CATALOG_H_

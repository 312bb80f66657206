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

#ifndef TWOPROVER_GAME_IO_H_
#define TWOPROVER_GAME_IO_H_

// Line-oriented text format for games and 1-in-3 formulas.
//
//   format_version 1
//   kind two_prover_one_round        # or multi_round, pcp3
//   counts 2 2 2 2                   # q1 q2 a1 a2 | q a rounds | positions alphabet
//   pi 0 0 1/4                       # question tuple, value
//   accept 0 0 0 0                   # question tuple, answer tuple
//   accept_weighted 0 1 1 0 1/2      # question tuple, answer tuple, value
//   accept_dense 1 1 0 1 1 0         # question tuple, one value per answer code
//   label a1 0 zero                  # two-prover games only
//
// Values are integers, p/q rationals or decimals (read exactly). Omitted pi
// entries are 0 and omitted answer tuples reject. '#' starts a comment.

#include <string>
#include <string_view>
#include <variant>

#include "twoprover/game.h"
#include "twoprover/transforms.h"

namespace twoprover {

enum class GameKind { kTwoProver, kMultiRound, kPcp };

const char* GameKindName(GameKind kind);

using AnyGame = std::variant<TwoProverGame<Rational>, MultiRoundGame<Rational>, PcpGame<Rational>>;

GameKind KindOf(const AnyGame& game);

// Throws ParseError (with line number) on malformed text and ValidationError
// when the parsed game violates an invariant.
AnyGame ParseGame(std::string_view text);

std::string SerializeGame(const TwoProverGame<Rational>& game);
std::string SerializeGame(const MultiRoundGame<Rational>& game);
std::string SerializeGame(const PcpGame<Rational>& game);
std::string SerializeGame(const AnyGame& game);

// "1in3 <n> <m>" followed by m clauses of three signed 1-based variables.
OneInThreeFormula ParseFormula(std::string_view text);
std::string SerializeFormula(const OneInThreeFormula& formula);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace twoprover

#endif  // TWOPROVER_GAME_IO_H_

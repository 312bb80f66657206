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

#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "twoprover/catalog.h"
#include "twoprover/errors.h"
#include "twoprover/game_io.h"
#include "twoprover/random_games.h"

namespace twoprover {
namespace {

template <typename G>
void ExpectRoundTrip(const G& g) {
  const std::string text = SerializeGame(g);
  const AnyGame back = ParseGame(text);
  ASSERT_TRUE(std::holds_alternative<G>(back));
  EXPECT_EQ(std::get<G>(back), g);
  EXPECT_EQ(SerializeGame(back), text);
}

TEST(GameIo, CatalogRoundTrips) {
  for (const std::string& name : CatalogNames()) {
    const AnyGame g = CatalogGame(name);
    const AnyGame back = ParseGame(SerializeGame(g));
    EXPECT_EQ(back, g) << name;
  }
  ExpectRoundTrip(Chsh());
  ExpectRoundTrip(MagicSquare());
  ExpectRoundTrip(TinyOneInThree());
  ExpectRoundTrip(EchoGame(2, 3));
}

TEST(GameIo, RandomGamesRoundTrip) {
  for (int seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng = SampleRng(81, seed);
    auto g = RandomTwoProverGame(3, 2, 2, 3, rng);
    g.predicate[seed] = Rational(seed + 1, 37);
    ExpectRoundTrip(g);
    ExpectRoundTrip(RandomMultiRoundGame(2, 3, 2, rng));
    ExpectRoundTrip(RandomPcpGame(5, 2, rng));
  }
}

TEST(GameIo, ExactRationalEntries) {
  const AnyGame g = ParseGame(
      "format_version 1\n"
      "kind two_prover_one_round\n"
      "counts 1 3 1 1\n"
      "pi 0 0 1/3\n"
      "pi 0 1 5/12\n"
      "pi 0 2 0.25  # decimal\n"
      "accept_weighted 0 0 0 0 1/3\n");
  const auto& t = std::get<TwoProverGame<Rational>>(g);
  EXPECT_EQ(t.Pi(0, 0), Rational(1, 3));
  EXPECT_EQ(t.Pi(0, 2), Rational(1, 4));
  EXPECT_EQ(t.Accept(0, 0, 0, 0), Rational(1, 3));
  EXPECT_EQ(t.Accept(0, 1, 0, 0), 0);
}

TEST(GameIo, NormalizationErrorNamesSum) {
  try {
    ParseGame("format_version 1\nkind two_prover_one_round\ncounts 1 2 1 1\npi 0 0 1\npi 0 1 1\n");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("normalization"), std::string::npos) << msg;
    EXPECT_NE(msg.find("sums to 2"), std::string::npos) << msg;
  }
}

TEST(GameIo, SyntaxErrorsCarryLineNumbers) {
  const std::string head = "format_version 1\nkind pcp3\ncounts 3 2\n";
  auto line_of = [](const std::string& text) {
    try {
      ParseGame(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of(head + "pi 0 1 2 1\naccept 0 1 2 0 0\n"), 5);
  EXPECT_EQ(line_of(head + "pi 0 1 2 1\npi 0 1 2 1\n"), 5);
  EXPECT_EQ(line_of(head + "\n# comment\npi 2 1 0 1\n"), 6);
  EXPECT_EQ(line_of(head + "pi 0 1 2 x/y\n"), 4);
  EXPECT_EQ(line_of(head + "frobnicate\n"), 4);
  EXPECT_EQ(line_of("format_version 2\n"), 1);
  EXPECT_EQ(line_of("format_version 1\nkind nonsense\n"), 2);
  EXPECT_EQ(line_of(head + "pi 0 1 2 1\naccept_weighted 0 1 2 0 0 0 3/2\n"), 5);
}

TEST(GameIo, OmittedEntriesAreZero) {
  const AnyGame g =
      ParseGame("format_version 1\nkind multi_round\ncounts 2 2 1\npi 1 1\naccept 1 0\n");
  const auto& m = std::get<MultiRoundGame<Rational>>(g);
  EXPECT_EQ(m.pi[0], 0);
  EXPECT_EQ(m.Accept(1, 0), 1);
  EXPECT_EQ(m.Accept(1, 1), 0);
  EXPECT_EQ(m.Accept(0, 0), 0);
}

TEST(GameIo, DenseAcceptRows) {
  const AnyGame g = ParseGame(
      "format_version 1\nkind two_prover_one_round\ncounts 1 1 2 2\npi 0 0 1\n"
      "accept_dense 0 0 1 0 1/2 1\n");
  const auto& t = std::get<TwoProverGame<Rational>>(g);
  EXPECT_EQ(t.predicate, (std::vector<Rational>{1, 0, Rational(1, 2), 1}));
}

TEST(FormulaIo, RoundTripAndValidation) {
  const OneInThreeFormula f = ParseFormula("1in3 4 2\n1 -2 3\n-4 2 1\n");
  EXPECT_EQ(f.num_variables, 4);
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_EQ(f.clauses[0][1].variable, 1);
  EXPECT_FALSE(f.clauses[0][1].positive);
  EXPECT_EQ(SerializeFormula(f), "1in3 4 2\n1 -2 3\n-4 2 1\n");
  EXPECT_THROW(ParseFormula("1in3 3 1\n1 2 4\n"), ParseError);
  EXPECT_THROW(ParseFormula("1in3 3 1\n1 -1 2\n"), ParseError);
  EXPECT_THROW(ParseFormula("1in3 3 2\n1 2 3\n"), ParseError);
  EXPECT_THROW(ParseFormula("1in3 3 1\n0 1 2\n"), ParseError);
}

TEST(FileIo, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "twoprover_io_test.game";
  WriteFile(path.string(), SerializeGame(Chsh()));
  EXPECT_EQ(ParseGame(ReadFile(path.string())), AnyGame(Chsh()));
  std::filesystem::remove(path);
  EXPECT_THROW(ReadFile(path.string()), Error);
}

}  // namespace
}  // namespace twoprover

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

#include "cli.h"
#include "json.hpp"
#include "twoprover/catalog.h"
#include "twoprover/game_io.h"
#include "twoprover/transforms.h"

namespace twoprover::cli {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("twoprover_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

std::string FirstLine(const std::string& text) { return text.substr(0, text.find('\n')); }

TEST_F(CliTest, CatalogThenClassicalValue) {
  ASSERT_EQ(Invoke({"catalog", "chsh", "-o", Path("chsh.game")}).code, kExitOk);
  CliRun r = Invoke({"value", "classical", Path("chsh.game")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(FirstLine(r.out), "3/4");
}

TEST_F(CliTest, MagicSquareClassicalValue) {
  ASSERT_EQ(Invoke({"catalog", "magic-square", "-o", Path("ms.game")}).code, kExitOk);
  CliRun r = Invoke({"value", "classical", Path("ms.game")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(FirstLine(r.out), "8/9");
}

TEST_F(CliTest, CatalogToStdoutParses) {
  CliRun r = Invoke({"catalog", "tiny-1in3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(ParseGame(r.out), CatalogGame("tiny-1in3"));
}

TEST_F(CliTest, JsonValueCarriesRationalStrings) {
  Invoke({"catalog", "chsh", "-o", Path("chsh.game")});
  CliRun r = Invoke({"--json", "value", "no-signaling", Path("chsh.game"), "--witness", Path("w.json")});
  ASSERT_EQ(r.code, kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"], "1");
  EXPECT_EQ(j["method"], "exact-simplex");
  auto w = nlohmann::json::parse(ReadFile(Path("w.json")));
  EXPECT_EQ(w["entries"][0][4], "1/2");
}

TEST_F(CliTest, JsonFlagAfterSubcommand) {
  Invoke({"catalog", "chsh", "-o", Path("chsh.game")});
  CliRun r = Invoke({"value", "classical", Path("chsh.game"), "--json"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["value"], "3/4");
}

TEST_F(CliTest, EntangledLowerBoundWithWitness) {
  Invoke({"catalog", "chsh", "-o", Path("chsh.game")});
  CliRun r = Invoke({"--json", "value", "entangled-lb", Path("chsh.game"), "--dims", "2,2",
                  "--restarts", "10", "--seed", "7", "--witness", Path("q.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_GE(nlohmann::json::parse(r.out)["value"].get<double>(), 0.853);
  auto w = nlohmann::json::parse(ReadFile(Path("q.json")));
  EXPECT_EQ(w["dim1"], 2);
  EXPECT_EQ(w["prover1"].size(), 2u);
}

TEST_F(CliTest, TransformsWriteGames) {
  Invoke({"catalog", "chsh", "-o", Path("chsh.game")});
  ASSERT_EQ(Invoke({"transform", "repeat", "-n", "2", Path("chsh.game"), "-o", Path("c2.game")}).code,
            kExitOk);
  EXPECT_EQ(ParseGame(ReadFile(Path("c2.game"))), AnyGame(ParallelRepeat(Chsh(), 2)));
  EXPECT_EQ(FirstLine(Invoke({"value", "classical", Path("c2.game")}).out), "5/8");

  Invoke({"catalog", "tiny-1in3", "-o", Path("t.game")});
  ASSERT_EQ(Invoke({"transform", "oracularize", Path("t.game"), "-o", Path("o.game")}).code, kExitOk);
  EXPECT_EQ(ParseGame(ReadFile(Path("o.game"))), AnyGame(OracularizePcp(TinyOneInThree()).game));
  ASSERT_EQ(Invoke({"transform", "oracularize-dummy", Path("t.game"), "-o", Path("d.game")}).code,
            kExitOk);
  EXPECT_EQ(ParseGame(ReadFile(Path("d.game"))),
            AnyGame(OracularizePcpDummy(TinyOneInThree()).game));
}

TEST_F(CliTest, MultiRoundAndPcpValues) {
  WriteFile(Path("echo.game"), SerializeGame(EchoGame(2, 2)));
  CliRun r = Invoke({"value", "multi-round", Path("echo.game")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(FirstLine(r.out), "1");
  ASSERT_EQ(Invoke({"transform", "oracularize", Path("echo.game"), "-o", Path("eo.game")}).code,
            kExitOk);
  EXPECT_EQ(FirstLine(Invoke({"value", "no-signaling", Path("eo.game")}).out), "1");
  Invoke({"catalog", "tiny-1in3", "-o", Path("t.game")});
  EXPECT_EQ(FirstLine(Invoke({"value", "pcp", Path("t.game")}).out), "3/4");
}

TEST_F(CliTest, GenFromFormula) {
  WriteFile(Path("f.cnf"), SerializeFormula(TinyOneInThreeFormula()));
  ASSERT_EQ(Invoke({"gen", "pcp-1in3", Path("f.cnf"), "-o", Path("g.game")}).code, kExitOk);
  EXPECT_EQ(ParseGame(ReadFile(Path("g.game"))), AnyGame(TinyOneInThree()));
}

TEST_F(CliTest, VerifyCleanRunExitsZero) {
  CliRun r = Invoke({"verify", "lemma-wns", "--seed", "7", "--samples", "20"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("20/20 inequalities hold"), std::string::npos) << r.out;
}

TEST_F(CliTest, VerifyPerturbedRunExitsOne) {
  for (const std::string& suite : {"lemma-wns", "ns-claims", "com-claims", "lemma-distance",
                                   "claim-selection", "lemma-game"}) {
    CliRun r = Invoke({"verify", suite, "--samples", "2", "--perturb", "2", "--summary"});
    EXPECT_EQ(r.code, kExitViolation) << suite;
  }
}

TEST_F(CliTest, VerifyJsonHasEveryRecord) {
  CliRun r = Invoke({"--json", "verify", "lemma-distance", "--samples", "3"});
  ASSERT_EQ(r.code, kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["inequalities"], 6);
  EXPECT_EQ(j["records"].size(), 6u);
  EXPECT_EQ(j["holds"], true);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"value", "bogus", "x"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"verify", "no-such-suite"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"value", "classical", Path("missing.game")}).code, kExitUsage);
  Invoke({"catalog", "chsh", "-o", Path("chsh.game")});
  EXPECT_EQ(Invoke({"value", "pcp", Path("chsh.game")}).code, kExitUsage);
  EXPECT_EQ(Invoke({"value", "entangled-lb", Path("chsh.game"), "--dims", "2,x"}).code, kExitUsage);
  WriteFile(Path("bad.game"), "format_version 1\nkind pcp3\ncounts 3 2\npi 0 1\n");
  CliRun r = Invoke({"value", "pcp", Path("bad.game")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(Invoke({"--help"}).code, kExitOk); }

}  // namespace
}  // namespace twoprover::cli

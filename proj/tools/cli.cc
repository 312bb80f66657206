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

#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "twoprover/catalog.h"
#include "twoprover/errors.h"
#include "twoprover/game_io.h"
#include "twoprover/transforms.h"
#include "twoprover/values.h"
#include "twoprover/verify.h"

namespace twoprover::cli {
namespace {

using Json = nlohmann::ordered_json;

// Bad arguments that CLI11 cannot see (wrong game kind, malformed --dims).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::ostream& out;
  bool json = false;
};

std::string Str(const Rational& r) { return ToString(r); }

template <typename T>
const T& Expect(const AnyGame& game, GameKind kind) {
  if (KindOf(game) != kind) {
    throw UsageError(std::string("expected a ") + GameKindName(kind) + " game, got " +
                     GameKindName(KindOf(game)));
  }
  return std::get<T>(game);
}

Json Counts(const AnyGame& game) {
  return std::visit(
      [](const auto& g) -> Json {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, TwoProverGame<Rational>>) {
          return {{"q1", g.q1_count}, {"q2", g.q2_count}, {"a1", g.a1_count}, {"a2", g.a2_count}};
        } else if constexpr (std::is_same_v<G, MultiRoundGame<Rational>>) {
          return {{"questions", g.q_count}, {"answers", g.a_count}, {"rounds", g.rounds}};
        } else {
          return {{"positions", g.positions}, {"alphabet", g.alphabet}};
        }
      },
      game);
}

std::string CountsText(const Json& counts) {
  std::string text;
  for (const auto& [key, value] : counts.items()) {
    if (!text.empty()) text += ' ';
    text += key + "=" + value.dump();
  }
  return text;
}

Json MatrixJson(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

Json QuantumJson(const QuantumStrategy& s) {
  Json state = Json::array();
  for (Eigen::Index i = 0; i < s.state.size(); ++i) state.push_back({s.state(i).real(), s.state(i).imag()});
  auto side = [](const std::vector<Povm>& povms) {
    Json out = Json::array();
    for (const Povm& p : povms) {
      Json elements = Json::array();
      for (const Matrix& e : p.elements) elements.push_back(MatrixJson(e));
      out.push_back(elements);
    }
    return out;
  };
  return {{"dim1", s.dim1},
          {"dim2", s.dim2},
          {"state", state},
          {"prover1", side(s.prover1)},
          {"prover2", side(s.prover2)}};
}

Json BipartiteJson(const BipartiteStrategy<Rational>& s) {
  Json entries = Json::array();
  for (int q1 = 0; q1 < s.q1_count; ++q1) {
    for (int q2 = 0; q2 < s.q2_count; ++q2) {
      for (int a1 = 0; a1 < s.a1_count; ++a1) {
        for (int a2 = 0; a2 < s.a2_count; ++a2) {
          const Rational& p = s(q1, q2, a1, a2);
          if (p != 0) entries.push_back({q1, q2, a1, a2, Str(p)});
        }
      }
    }
  }
  return {{"q1", s.q1_count},
          {"q2", s.q2_count},
          {"a1", s.a1_count},
          {"a2", s.a2_count},
          {"entries", entries}};
}

void WriteWitness(const std::string& path, const Json& witness) {
  if (!path.empty()) WriteFile(path, witness.dump(2) + "\n");
}

// Prints the key/value report either as "key: value" lines (after a first
// line holding the value) or as one JSON object.
void Emit(const Output& o, const Json& report, const std::string& headline) {
  if (o.json) {
    o.out << report.dump(2) << '\n';
    return;
  }
  o.out << headline << '\n';
  for (const auto& [key, value] : report.items()) {
    if (key == "command" || key == "value") continue;
    o.out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

struct ValueArgs {
  std::string mode;
  std::string file;
  std::string dims = "2,2";
  int restarts = 10;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string witness;
};

std::pair<int, int> ParseDims(const std::string& text) {
  auto positive = [&text](const std::string& part) {
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size() || d < 1) {
      throw UsageError("--dims expects d or d1,d2 with positive integers, got '" + text + "'");
    }
    return d;
  };
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    const int d = positive(text);
    return {d, d};
  }
  return {positive(text.substr(0, comma)), positive(text.substr(comma + 1))};
}

int RunValue(const ValueArgs& a, const Output& o) {
  const AnyGame game = ParseGame(ReadFile(a.file));
  Json report = {{"command", "value"}, {"mode", a.mode}, {"file", a.file}};
  Json witness;
  std::string headline;
  if (a.mode == "classical") {
    const auto& g = Expect<TwoProverGame<Rational>>(game, GameKind::kTwoProver);
    auto r = ClassicalValue(g);
    headline = Str(r.value);
    report["value"] = headline;
    report["float"] = r.value.get_d();
    report["method"] = r.method;
    witness = {{"answers1", r.witness.answers1}, {"answers2", r.witness.answers2}};
  } else if (a.mode == "no-signaling") {
    const auto& g = Expect<TwoProverGame<Rational>>(game, GameKind::kTwoProver);
    auto r = NoSignalingValue(g);
    headline = Str(r.value);
    report["value"] = headline;
    report["float"] = r.value.get_d();
    report["method"] = r.method;
    report["lp_variables"] = r.witness.lp_variables;
    report["lp_constraints"] = r.witness.lp_constraints;
    witness = BipartiteJson(r.witness.strategy);
  } else if (a.mode == "entangled-lb") {
    const auto& g = Expect<TwoProverGame<Rational>>(game, GameKind::kTwoProver);
    SeeSawOptions options;
    std::tie(options.dim1, options.dim2) = ParseDims(a.dims);
    options.restarts = a.restarts;
    options.seed = a.seed;
    options.threads = a.threads;
    auto r = EntangledLowerBound(g, options);
    headline = ToString(r.value);
    report["value"] = r.value;
    report["method"] = r.method;
    report["dims"] = {options.dim1, options.dim2};
    report["restarts"] = options.restarts;
    report["seed"] = options.seed;
    report["best_restart"] = r.witness.best_restart;
    witness = QuantumJson(r.witness.strategy);
    witness["value"] = r.value;
  } else if (a.mode == "multi-round") {
    const auto& g = Expect<MultiRoundGame<Rational>>(game, GameKind::kMultiRound);
    auto r = MultiRoundValue(g);
    headline = Str(r.value);
    report["value"] = headline;
    report["float"] = r.value.get_d();
    report["method"] = r.method;
    witness = {{"answers", r.witness.answers}};
  } else {
    const auto& g = Expect<PcpGame<Rational>>(game, GameKind::kPcp);
    auto r = PcpValue(g);
    headline = Str(r.value);
    report["value"] = headline;
    report["float"] = r.value.get_d();
    report["method"] = r.method;
    witness = {{"proof", r.witness}};
  }
  if (!a.witness.empty()) {
    WriteWitness(a.witness, witness);
    report["witness"] = a.witness;
  }
  Emit(o, report, headline);
  return kExitOk;
}

struct TransformArgs {
  std::string kind;
  std::string file;
  std::string output;
  int copies = 2;
};

// Writes `text` to `path`, or to the report when no path is given.
void Deliver(const Output& o, Json report, const std::string& text, const std::string& path,
             const std::string& headline) {
  if (path.empty()) {
    if (o.json) {
      report["game"] = text;
      o.out << report.dump(2) << '\n';
    } else {
      o.out << text;
    }
    return;
  }
  WriteFile(path, text);
  report["output"] = path;
  Emit(o, report, headline);
}

int RunTransform(const TransformArgs& a, const Output& o) {
  const AnyGame game = ParseGame(ReadFile(a.file));
  AnyGame result;
  if (a.kind == "oracularize") {
    if (KindOf(game) == GameKind::kMultiRound) {
      result = OracularizeMultiRound(std::get<MultiRoundGame<Rational>>(game)).game;
    } else if (KindOf(game) == GameKind::kPcp) {
      result = OracularizePcp(std::get<PcpGame<Rational>>(game)).game;
    } else {
      throw UsageError("oracularize expects a multi_round or pcp3 game, got two_prover_one_round");
    }
  } else if (a.kind == "oracularize-dummy") {
    result = OracularizePcpDummy(Expect<PcpGame<Rational>>(game, GameKind::kPcp)).game;
  } else {
    if (a.copies < 1) throw UsageError("-n must be at least 1");
    result = ParallelRepeat(Expect<TwoProverGame<Rational>>(game, GameKind::kTwoProver), a.copies);
  }
  Json report = {{"command", "transform"},
                 {"transform", a.kind},
                 {"input", a.file},
                 {"kind", GameKindName(KindOf(result))},
                 {"counts", CountsText(Counts(result))}};
  Deliver(o, report, SerializeGame(result), a.output,
          std::string("wrote ") + GameKindName(KindOf(result)) + " game");
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  VerifyOptions options;
  bool summary = false;
};

Json RecordJson(const InequalityRecord& r) {
  Json j = {{"check", r.check}, {"instance", r.instance}};
  if (r.exact()) {
    j["lhs"] = r.LhsText();
    j["rhs"] = r.RhsText();
  } else {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["tolerance"] = r.tolerance;
  }
  j["holds"] = r.holds;
  return j;
}

int RunVerify(const VerifyArgs& a, const Output& o) {
  const InequalityReport report = RunSuite(a.suite, a.options);
  if (o.json) {
    Json checks = Json::array();
    for (const auto& s : report.Summaries()) {
      checks.push_back({{"check", s.check},
                        {"count", s.count},
                        {"violations", s.violations},
                        {"tightest", RecordJson(*s.tightest)}});
    }
    Json records = Json::array();
    for (const InequalityRecord& r : report.records()) records.push_back(RecordJson(r));
    Json j = {{"command", "verify"},
              {"suite", a.suite},
              {"seed", a.options.seed},
              {"samples", a.options.samples},
              {"inequalities", report.records().size()},
              {"violations", report.Violations()},
              {"holds", report.AllHold()},
              {"checks", checks},
              {"records", records}};
    if (a.options.perturb != 0) j["perturb"] = a.options.perturb;
    o.out << j.dump(2) << '\n';
  } else {
    o.out << "suite " << a.suite << " seed " << a.options.seed << " samples "
          << a.options.samples << '\n';
    o.out << report.Table(!a.summary);
  }
  return report.AllHold() ? kExitOk : kExitViolation;
}

int RunGen(const std::string& file, const std::string& output, const Output& o) {
  const PcpFromFormula made = PcpFrom1In3(ParseFormula(ReadFile(file)));
  Json report = {{"command", "gen"},
                 {"generator", "pcp-1in3"},
                 {"input", file},
                 {"kind", GameKindName(GameKind::kPcp)},
                 {"counts", CountsText(Counts(made.game))},
                 {"position_variable", made.position_variable}};
  Deliver(o, report, SerializeGame(made.game), output, "wrote pcp3 game");
  return kExitOk;
}

int RunCatalog(const std::string& name, const std::string& output, const Output& o) {
  const AnyGame game = CatalogGame(name);
  Json report = {{"command", "catalog"},
                 {"name", name},
                 {"kind", GameKindName(KindOf(game))},
                 {"counts", CountsText(Counts(game))}};
  Deliver(o, report, SerializeGame(game), output, "wrote " + name);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numerical values of two-prover games and their transforms", "twoprover"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit a machine-readable JSON report");

  ValueArgs value;
  auto* value_cmd = app.add_subcommand("value", "Compute a game value");
  value_cmd->add_option("mode", value.mode, "Value to compute")
      ->required()
      ->check(CLI::IsMember({"classical", "no-signaling", "entangled-lb", "multi-round", "pcp"}));
  value_cmd->add_option("file", value.file, "Game file")->required();
  value_cmd->add_option("--dims", value.dims, "Local dimensions d or d1,d2 (entangled-lb)");
  value_cmd->add_option("--restarts", value.restarts, "see-saw restarts")
      ->check(CLI::PositiveNumber);
  value_cmd->add_option("--seed", value.seed, "Random seed");
  value_cmd->add_option("--threads", value.threads, "Worker threads (0 = hardware)")
      ->check(CLI::NonNegativeNumber);
  value_cmd->add_option("--witness", value.witness, "Write the optimal strategy as JSON");

  TransformArgs transform;
  auto* transform_cmd = app.add_subcommand("transform", "Transform a game");
  transform_cmd->add_option("kind", transform.kind, "Transformation")
      ->required()
      ->check(CLI::IsMember({"oracularize", "oracularize-dummy", "repeat"}));
  transform_cmd->add_option("file", transform.file, "Input game file")->required();
  transform_cmd->add_option("-n", transform.copies, "Number of copies (repeat)");
  transform_cmd->add_option("-o,--output", transform.output, "Output game file");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a randomized inequality suite");
  verify_cmd->add_option("suite", verify.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(SuiteNames()));
  VerifyOptions& vo = verify.options;
  verify_cmd->add_option("--seed", vo.seed, "Random seed");
  verify_cmd->add_option("--samples", vo.samples, "Number of samples")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--questions", vo.questions, "Questions per round (multi-round)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--answers", vo.answers, "Answers per round (multi-round)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--rounds", vo.rounds, "Rounds (multi-round)")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--accept-density", vo.accept_density, "Accept probability of predicate entries")
      ->check(CLI::Range(0.0, 1.0));
  verify_cmd->add_option("--positions", vo.positions, "Proof positions, 0 alternates 3 and 4")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--alphabet", vo.alphabet, "Proof alphabet size")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--dim", vo.dim, "Local dimension of quantum strategies")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--strategies", vo.strategies, "Extra strategies per game (ns-claims)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-sequence", vo.max_sequence, "Longest operator sequence")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--restarts", vo.restarts, "see-saw restarts (lemma-game)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--perturb", vo.perturb, "Add this to every left-hand side");
  verify_cmd->add_option("--threads", vo.threads, "Worker threads (0 = hardware)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--summary", verify.summary, "One row per check instead of per inequality");

  std::string gen_kind;
  std::string gen_file;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a game from a formula");
  gen_cmd->add_option("generator", gen_kind, "Generator")
      ->required()
      ->check(CLI::IsMember({"pcp-1in3"}));
  gen_cmd->add_option("file", gen_file, "Formula file")->required();
  gen_cmd->add_option("-o,--output", gen_output, "Output game file");

  std::string catalog_name;
  std::string catalog_output;
  auto* catalog_cmd = app.add_subcommand("catalog", "Write a built-in game");
  catalog_cmd->add_option("name", catalog_name, "Game name")
      ->required()
      ->check(CLI::IsMember(CatalogNames()));
  catalog_cmd->add_option("-o,--output", catalog_output, "Output game file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Output o{out, json};
  try {
    if (*value_cmd) return RunValue(value, o);
    if (*transform_cmd) return RunTransform(transform, o);
    if (*verify_cmd) return RunVerify(verify, o);
    if (*gen_cmd) return RunGen(gen_file, gen_output, o);
    return RunCatalog(catalog_name, catalog_output, o);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace twoprover::cli

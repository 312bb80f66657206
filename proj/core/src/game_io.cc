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

#include "twoprover/game_io.h"

#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "twoprover/errors.h"

namespace twoprover {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string raw(text.substr(start, end - start));
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream in(raw);
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

int ParseIndex(const std::string& tok, int line, int bound, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty()) {
    throw ParseError(line, std::string("expected an integer ") + what + ", got '" + tok + "'");
  }
  if (v < 0 || v >= bound) {
    throw ParseError(line, std::string(what) + " " + tok + " out of range [0, " +
                               std::to_string(bound) + ")");
  }
  return static_cast<int>(v);
}

int ParseCount(const std::string& tok, int line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || v <= 0 || v > (1L << 30)) {
    throw ParseError(line, "expected a positive count, got '" + tok + "'");
  }
  return static_cast<int>(v);
}

Rational ParseValue(const std::string& tok, int line) {
  try {
    return ParseRational(tok);
  } catch (const ParseError& e) {
    throw ParseError(line, e.what());
  }
}

// Shape-specific handling for the three kinds.
struct Shape {
  std::vector<int> question_bounds;  // one per question coordinate
  std::vector<int> answer_bounds;    // one per answer coordinate
};

class Builder {
 public:
  virtual ~Builder() = default;
  virtual Shape shape() const = 0;
  virtual Rational& PiAt(const std::vector<int>& q, int line) = 0;
  virtual Rational& AcceptAt(const std::vector<int>& q, const std::vector<int>& a, int line) = 0;
  virtual void Label(const std::vector<std::string>& tokens, int line) {
    (void)tokens;
    throw ParseError(line, "labels are only supported for two_prover_one_round games");
  }
  virtual AnyGame Finish() = 0;
};

class TwoProverBuilder : public Builder {
 public:
  explicit TwoProverBuilder(const std::vector<int>& c)
      : g_(TwoProverGame<Rational>::Zero(c[0], c[1], c[2], c[3])) {}
  Shape shape() const override {
    return {{g_.q1_count, g_.q2_count}, {g_.a1_count, g_.a2_count}};
  }
  Rational& PiAt(const std::vector<int>& q, int) override { return g_.Pi(q[0], q[1]); }
  Rational& AcceptAt(const std::vector<int>& q, const std::vector<int>& a, int) override {
    return g_.Accept(q[0], q[1], a[0], a[1]);
  }
  void Label(const std::vector<std::string>& t, int line) override {
    if (t.size() != 4) throw ParseError(line, "label needs: label <q1|q2|a1|a2> <index> <name>");
    std::vector<std::string>* target = nullptr;
    int bound = 0;
    if (t[1] == "q1") target = &g_.labels.questions1, bound = g_.q1_count;
    if (t[1] == "q2") target = &g_.labels.questions2, bound = g_.q2_count;
    if (t[1] == "a1") target = &g_.labels.answers1, bound = g_.a1_count;
    if (t[1] == "a2") target = &g_.labels.answers2, bound = g_.a2_count;
    if (!target) throw ParseError(line, "unknown label set '" + t[1] + "'");
    const int index = ParseIndex(t[2], line, bound, "label index");
    if (target->empty()) target->assign(bound, "");
    (*target)[index] = t[3];
  }
  AnyGame Finish() override { return std::move(g_); }

 private:
  TwoProverGame<Rational> g_;
};

class MultiRoundBuilder : public Builder {
 public:
  explicit MultiRoundBuilder(const std::vector<int>& c)
      : g_(MultiRoundGame<Rational>::Zero(c[0], c[1], c[2])) {}
  Shape shape() const override {
    return {std::vector<int>(g_.rounds, g_.q_count), std::vector<int>(g_.rounds, g_.a_count)};
  }
  Rational& PiAt(const std::vector<int>& q, int) override {
    return g_.pi[EncodeTuple(q, g_.q_count)];
  }
  Rational& AcceptAt(const std::vector<int>& q, const std::vector<int>& a, int) override {
    return g_.Accept(EncodeTuple(q, g_.q_count), EncodeTuple(a, g_.a_count));
  }
  AnyGame Finish() override { return std::move(g_); }

 private:
  MultiRoundGame<Rational> g_;
};

class PcpBuilder : public Builder {
 public:
  explicit PcpBuilder(const std::vector<int>& c) : g_(PcpGame<Rational>::Zero(c[0], c[1])) {}
  Shape shape() const override {
    return {std::vector<int>(3, g_.positions), std::vector<int>(3, g_.alphabet)};
  }
  Rational& PiAt(const std::vector<int>& q, int line) override {
    return g_.pi[Triple(q, line)];
  }
  Rational& AcceptAt(const std::vector<int>& q, const std::vector<int>& a, int line) override {
    return g_.Accept(Triple(q, line), static_cast<int>(EncodeTuple(a, g_.alphabet)));
  }
  AnyGame Finish() override { return std::move(g_); }

 private:
  std::size_t Triple(const std::vector<int>& q, int line) {
    if (!(q[0] < q[1] && q[1] < q[2])) {
      throw ParseError(line, "pcp3 positions must be strictly increasing");
    }
    return g_.TripleIndex({q[0], q[1], q[2]});
  }
  PcpGame<Rational> g_;
};

std::vector<int> Indices(const std::vector<std::string>& t, std::size_t from,
                         const std::vector<int>& bounds, int line, const char* what) {
  std::vector<int> out;
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    out.push_back(ParseIndex(t[from + k], line, bounds[k], what));
  }
  return out;
}

template <typename G>
void CheckValid(const G& g) {
  ValidationReport report = Validate(g);
  if (!report.ok()) throw ValidationError("invalid game: " + report.Summary());
}

}  // namespace

const char* GameKindName(GameKind kind) {
  switch (kind) {
    case GameKind::kTwoProver:
      return "two_prover_one_round";
    case GameKind::kMultiRound:
      return "multi_round";
    case GameKind::kPcp:
      return "pcp3";
  }
  return "?";
}

GameKind KindOf(const AnyGame& game) { return static_cast<GameKind>(game.index()); }

AnyGame ParseGame(std::string_view text) {
  std::vector<Line> lines = Tokenize(text);
  std::size_t next = 0;
  auto expect = [&](const char* keyword) -> const Line& {
    if (next >= lines.size()) throw ParseError(0, std::string("missing '") + keyword + "' line");
    const Line& l = lines[next++];
    if (l.tokens[0] != keyword) {
      throw ParseError(l.number, std::string("expected '") + keyword + "', got '" + l.tokens[0] + "'");
    }
    return l;
  };
  const Line& version = expect("format_version");
  if (version.tokens.size() != 2 || version.tokens[1] != "1") {
    throw ParseError(version.number, "unsupported format_version (only 1 is known)");
  }
  const Line& kind_line = expect("kind");
  if (kind_line.tokens.size() != 2) throw ParseError(kind_line.number, "kind needs one value");
  const std::string& kind = kind_line.tokens[1];
  std::size_t count_arity;
  if (kind == "two_prover_one_round") {
    count_arity = 4;
  } else if (kind == "multi_round") {
    count_arity = 3;
  } else if (kind == "pcp3") {
    count_arity = 2;
  } else {
    throw ParseError(kind_line.number, "unknown kind '" + kind + "'");
  }
  const Line& counts_line = expect("counts");
  if (counts_line.tokens.size() != count_arity + 1) {
    throw ParseError(counts_line.number, "counts for " + kind + " needs " +
                                             std::to_string(count_arity) + " values");
  }
  std::vector<int> counts;
  for (std::size_t k = 1; k <= count_arity; ++k) {
    counts.push_back(ParseCount(counts_line.tokens[k], counts_line.number));
  }
  std::unique_ptr<Builder> builder;
  try {
    if (kind == "two_prover_one_round") builder = std::make_unique<TwoProverBuilder>(counts);
    if (kind == "multi_round") builder = std::make_unique<MultiRoundBuilder>(counts);
    if (kind == "pcp3") builder = std::make_unique<PcpBuilder>(counts);
  } catch (const SizeGuardError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(counts_line.number, e.what());
  }
  const Shape shape = builder->shape();
  const std::size_t nq = shape.question_bounds.size();
  const std::size_t na = shape.answer_bounds.size();
  std::int64_t answer_codes = 1;
  for (int b : shape.answer_bounds) answer_codes *= b;

  std::set<std::vector<int>> seen_pi;
  std::set<std::vector<int>> seen_accept;
  auto mark = [](std::set<std::vector<int>>& seen, std::vector<int> key, int line) {
    if (!seen.insert(std::move(key)).second) throw ParseError(line, "duplicate entry");
  };
  auto check_value = [](const Rational& v, int line) {
    if (v < 0 || v > 1) throw ParseError(line, "value " + ToString(v) + " outside [0, 1]");
  };

  for (; next < lines.size(); ++next) {
    const Line& l = lines[next];
    const auto& t = l.tokens;
    const std::string& key = t[0];
    if (key == "pi") {
      if (t.size() != nq + 2) {
        throw ParseError(l.number, "pi needs " + std::to_string(nq) + " indices and a value");
      }
      auto q = Indices(t, 1, shape.question_bounds, l.number, "question");
      mark(seen_pi, q, l.number);
      Rational v = ParseValue(t.back(), l.number);
      if (v < 0) throw ParseError(l.number, "negative pi entry " + ToString(v));
      builder->PiAt(q, l.number) = v;
    } else if (key == "accept" || key == "accept_weighted") {
      const bool weighted = key == "accept_weighted";
      if (t.size() != 1 + nq + na + (weighted ? 1 : 0)) {
        throw ParseError(l.number, key + " needs " + std::to_string(nq) + " question and " +
                                       std::to_string(na) + " answer indices" +
                                       (weighted ? " and a value" : ""));
      }
      auto q = Indices(t, 1, shape.question_bounds, l.number, "question");
      auto a = Indices(t, 1 + nq, shape.answer_bounds, l.number, "answer");
      std::vector<int> full = q;
      full.insert(full.end(), a.begin(), a.end());
      mark(seen_accept, full, l.number);
      Rational v = weighted ? ParseValue(t.back(), l.number) : Rational(1);
      check_value(v, l.number);
      builder->AcceptAt(q, a, l.number) = v;
    } else if (key == "accept_dense") {
      if (t.size() != 1 + nq + static_cast<std::size_t>(answer_codes)) {
        throw ParseError(l.number, "accept_dense needs " + std::to_string(nq) +
                                       " question indices and " + std::to_string(answer_codes) +
                                       " values");
      }
      auto q = Indices(t, 1, shape.question_bounds, l.number, "question");
      for (std::int64_t code = 0; code < answer_codes; ++code) {
        std::vector<int> a(na);
        std::int64_t rest = code;
        for (std::size_t k = na; k-- > 0;) {
          a[k] = static_cast<int>(rest % shape.answer_bounds[k]);
          rest /= shape.answer_bounds[k];
        }
        std::vector<int> full = q;
        full.insert(full.end(), a.begin(), a.end());
        mark(seen_accept, full, l.number);
        Rational v = ParseValue(t[1 + nq + code], l.number);
        check_value(v, l.number);
        builder->AcceptAt(q, a, l.number) = v;
      }
    } else if (key == "label") {
      builder->Label(t, l.number);
    } else {
      throw ParseError(l.number, "unknown keyword '" + key + "'");
    }
  }
  AnyGame game = builder->Finish();
  std::visit([](const auto& g) { CheckValid(g); }, game);
  return game;
}

namespace {

void Header(std::ostringstream& out, const char* kind) {
  out << "format_version 1\nkind " << kind << "\n";
}

void Emit(std::ostringstream& out, const std::vector<int>& q, const std::vector<int>& a,
          const Rational& v) {
  if (v == 0) return;
  out << (v == 1 ? "accept" : "accept_weighted");
  for (int x : q) out << ' ' << x;
  for (int x : a) out << ' ' << x;
  if (v != 1) out << ' ' << ToString(v);
  out << '\n';
}

}  // namespace

std::string SerializeGame(const TwoProverGame<Rational>& g) {
  std::ostringstream out;
  Header(out, "two_prover_one_round");
  out << "counts " << g.q1_count << ' ' << g.q2_count << ' ' << g.a1_count << ' ' << g.a2_count
      << '\n';
  auto labels = [&out](const char* set, const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!names[i].empty()) out << "label " << set << ' ' << i << ' ' << names[i] << '\n';
    }
  };
  labels("q1", g.labels.questions1);
  labels("q2", g.labels.questions2);
  labels("a1", g.labels.answers1);
  labels("a2", g.labels.answers2);
  for (int i = 0; i < g.q1_count; ++i) {
    for (int j = 0; j < g.q2_count; ++j) {
      if (g.Pi(i, j) != 0) out << "pi " << i << ' ' << j << ' ' << ToString(g.Pi(i, j)) << '\n';
    }
  }
  for (int i = 0; i < g.q1_count; ++i) {
    for (int j = 0; j < g.q2_count; ++j) {
      for (int x = 0; x < g.a1_count; ++x) {
        for (int y = 0; y < g.a2_count; ++y) Emit(out, {i, j}, {x, y}, g.Accept(i, j, x, y));
      }
    }
  }
  return out.str();
}

std::string SerializeGame(const MultiRoundGame<Rational>& g) {
  std::ostringstream out;
  Header(out, "multi_round");
  out << "counts " << g.q_count << ' ' << g.a_count << ' ' << g.rounds << '\n';
  for (std::int64_t q = 0; q < g.QuestionTuples(); ++q) {
    if (g.pi[q] == 0) continue;
    out << "pi";
    for (int x : DecodeTuple(q, g.q_count, g.rounds)) out << ' ' << x;
    out << ' ' << ToString(g.pi[q]) << '\n';
  }
  for (std::int64_t q = 0; q < g.QuestionTuples(); ++q) {
    for (std::int64_t a = 0; a < g.AnswerTuples(); ++a) {
      Emit(out, DecodeTuple(q, g.q_count, g.rounds), DecodeTuple(a, g.a_count, g.rounds),
           g.Accept(q, a));
    }
  }
  return out.str();
}

std::string SerializeGame(const PcpGame<Rational>& g) {
  std::ostringstream out;
  Header(out, "pcp3");
  out << "counts " << g.positions << ' ' << g.alphabet << '\n';
  for (std::size_t t = 0; t < g.triples.size(); ++t) {
    if (g.pi[t] == 0) continue;
    const Triple& tr = g.triples[t];
    out << "pi " << tr[0] << ' ' << tr[1] << ' ' << tr[2] << ' ' << ToString(g.pi[t]) << '\n';
  }
  for (std::size_t t = 0; t < g.triples.size(); ++t) {
    const Triple& tr = g.triples[t];
    for (int c = 0; c < g.AnswerTriples(); ++c) {
      Emit(out, {tr[0], tr[1], tr[2]}, DecodeTuple(c, g.alphabet, 3), g.Accept(t, c));
    }
  }
  return out.str();
}

std::string SerializeGame(const AnyGame& game) {
  return std::visit([](const auto& g) { return SerializeGame(g); }, game);
}

OneInThreeFormula ParseFormula(std::string_view text) {
  std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty formula file");
  const Line& head = lines[0];
  if (head.tokens.size() != 3 || head.tokens[0] != "1in3") {
    throw ParseError(head.number, "expected header '1in3 <variables> <clauses>'");
  }
  OneInThreeFormula f;
  f.num_variables = ParseCount(head.tokens[1], head.number);
  const int m = ParseCount(head.tokens[2], head.number);
  if (static_cast<int>(lines.size()) - 1 != m) {
    throw ParseError(head.number, "header announces " + std::to_string(m) + " clauses, found " +
                                      std::to_string(lines.size() - 1));
  }
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens.size() != 3) throw ParseError(l.number, "a clause has exactly three literals");
    std::array<Literal, 3> clause;
    for (int s = 0; s < 3; ++s) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(l.tokens[s], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != l.tokens[s].size() || v == 0 || std::labs(v) > f.num_variables) {
        throw ParseError(l.number, "literal '" + l.tokens[s] + "' must be a nonzero integer with |v| <= " +
                                       std::to_string(f.num_variables));
      }
      clause[s] = {static_cast<int>(std::labs(v)) - 1, v > 0};
    }
    if (clause[0].variable == clause[1].variable || clause[0].variable == clause[2].variable ||
        clause[1].variable == clause[2].variable) {
      throw ParseError(l.number, "clause repeats a variable");
    }
    f.clauses.push_back(clause);
  }
  return f;
}

std::string SerializeFormula(const OneInThreeFormula& f) {
  std::ostringstream out;
  out << "1in3 " << f.num_variables << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int s = 0; s < 3; ++s) {
      out << (s ? " " : "") << (clause[s].positive ? "" : "-") << clause[s].variable + 1;
    }
    out << '\n';
  }
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace twoprover

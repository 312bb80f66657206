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

#include "twoprover/transforms.h"

#include <algorithm>
#include <map>
#include <set>

#include "twoprover/errors.h"

namespace twoprover {

PrefixIndex::PrefixIndex(int base, int max_length)
    : base_(base), max_length_(max_length) {
  if (base <= 0 || max_length <= 0) {
    throw DimensionError("prefix index needs a positive base and length");
  }
  offsets_.push_back(0);
  for (int k = 1; k <= max_length; ++k) {
    offsets_.push_back(offsets_.back() + IntPow(base, k));
  }
}

std::int64_t PrefixIndex::Encode(int length, std::int64_t code) const {
  if (length < 1 || length > max_length_ || code < 0 || code >= IntPow(base_, length)) {
    throw DimensionError("prefix (length " + std::to_string(length) + ", code " +
                         std::to_string(code) + ") out of range");
  }
  return offsets_[length - 1] + code;
}

std::int64_t PrefixIndex::Encode(const std::vector<int>& tuple) const {
  return Encode(static_cast<int>(tuple.size()), EncodeTuple(tuple, base_));
}

std::pair<int, std::int64_t> PrefixIndex::Decode(std::int64_t index) const {
  if (index < 0 || index >= size()) {
    throw DimensionError("prefix index " + std::to_string(index) + " out of range");
  }
  int k = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), index) -
                           offsets_.begin());
  return {k, index - offsets_[k - 1]};
}

std::vector<int> PrefixIndex::DecodeTuple(std::int64_t index) const {
  auto [k, code] = Decode(index);
  return twoprover::DecodeTuple(code, base_, k);
}

namespace {

void CheckGuard(int q1, int q2, std::int64_t a1, std::int64_t a2, const char* what) {
  CheckTableSize(SaturatingProduct({std::uint64_t(q1), std::uint64_t(q2),
                                    std::uint64_t(a1), std::uint64_t(a2)}),
                 what);
}

}  // namespace

MultiRoundOracularization OracularizeMultiRound(const MultiRoundGame<Rational>& g) {
  RequireValid(g, "multi-round game");
  const int q = g.q_count;
  const int a = g.a_count;
  const int r = g.rounds;
  MultiRoundOracularization out;
  out.rounds = r;
  out.question_prefixes = PrefixIndex(q, r);
  out.answer_prefixes = PrefixIndex(a, r);

  out.q1_of_code.assign(g.QuestionTuples(), -1);
  std::set<std::int64_t> prefixes;
  for (std::int64_t code = 0; code < g.QuestionTuples(); ++code) {
    if (g.pi[code] == 0) continue;
    out.q1_of_code[code] = static_cast<int>(out.q1_codes.size());
    out.q1_codes.push_back(code);
    for (int k = 1; k <= r; ++k) {
      prefixes.insert(out.question_prefixes.Encode(k, code / IntPow(q, r - k)));
    }
  }
  out.q2_of_prefix.assign(out.question_prefixes.size(), -1);
  for (std::int64_t p : prefixes) {
    out.q2_of_prefix[p] = static_cast<int>(out.q2_prefixes.size());
    out.q2_prefixes.push_back(p);
  }

  const int q1n = static_cast<int>(out.q1_codes.size());
  const int q2n = static_cast<int>(out.q2_prefixes.size());
  const std::int64_t a1n = g.AnswerTuples();
  const std::int64_t a2n = out.answer_prefixes.size();
  CheckGuard(q1n, q2n, a1n, a2n, "oracularized multi-round game");
  auto game = TwoProverGame<Rational>::Zero(q1n, q2n, static_cast<int>(a1n),
                                            static_cast<int>(a2n));
  auto cons = game;
  auto sim = game;

  std::vector<std::pair<int, std::int64_t>> answer_decoded(a2n);
  for (std::int64_t b = 0; b < a2n; ++b) answer_decoded[b] = out.answer_prefixes.Decode(b);

  for (int i = 0; i < q1n; ++i) {
    const std::int64_t qcode = out.q1_codes[i];
    for (int j = 0; j < q2n; ++j) {
      auto [k, pcode] = out.question_prefixes.Decode(out.q2_prefixes[j]);
      const bool is_prefix = qcode / IntPow(q, r - k) == pcode;
      if (is_prefix) game.Pi(i, j) = g.pi[qcode] / r;
      const std::int64_t shift = IntPow(a, r - k);
      for (std::int64_t a1 = 0; a1 < a1n; ++a1) {
        const Rational& accept = g.Accept(qcode, a1);
        for (std::int64_t b = 0; b < a2n; ++b) {
          const auto& [kb, bcode] = answer_decoded[b];
          const bool consistent = kb == k && a1 / shift == bcode;
          std::size_t idx = game.PredicateIndex(i, j, static_cast<int>(a1), static_cast<int>(b));
          sim.predicate[idx] = accept;
          if (consistent) {
            cons.predicate[idx] = 1;
            game.predicate[idx] = accept;
          }
        }
      }
    }
  }
  cons.pi = game.pi;
  sim.pi = game.pi;
  out.game = std::move(game);
  out.consistency_only = std::move(cons);
  out.simulation_only = std::move(sim);
  return out;
}

template <Scalar S>
std::vector<S> PositionMarginal(const PcpGame<S>& g) {
  std::vector<S> marginal(g.positions, S(0));
  for (std::size_t t = 0; t < g.triples.size(); ++t) {
    if (g.pi[t] == 0) continue;
    for (int i = 0; i < 3; ++i) marginal[g.triples[t][i]] += g.pi[t] / 3;
  }
  return marginal;
}

template std::vector<Rational> PositionMarginal(const PcpGame<Rational>&);
template std::vector<double> PositionMarginal(const PcpGame<double>&);

namespace {

// Digit of `code` (in A^3, first letter most significant) for slot i.
int Letter(int code, int slot, int alphabet) {
  for (int s = 2; s > slot; --s) code /= alphabet;
  return code % alphabet;
}

int SlotOf(const Triple& t, int position) {
  for (int i = 0; i < 3; ++i) {
    if (t[i] == position) return i;
  }
  return -1;
}

}  // namespace

PcpOracularization OracularizePcp(const PcpGame<Rational>& g) {
  RequireValid(g, "three-query game");
  const int a = g.alphabet;
  PcpOracularization out;
  out.q1_of_triple.assign(g.triples.size(), -1);
  std::vector<bool> queried(g.positions, false);
  for (std::size_t t = 0; t < g.triples.size(); ++t) {
    if (g.pi[t] == 0) continue;
    out.q1_of_triple[t] = static_cast<int>(out.q1_triples.size());
    out.q1_triples.push_back(t);
    for (int p : g.triples[t]) queried[p] = true;
  }
  out.q2_of_position.assign(g.positions, -1);
  for (int p = 0; p < g.positions; ++p) {
    if (!queried[p]) continue;
    out.q2_of_position[p] = static_cast<int>(out.q2_positions.size());
    out.q2_positions.push_back(p);
  }
  const int q1n = static_cast<int>(out.q1_triples.size());
  const int q2n = static_cast<int>(out.q2_positions.size());
  CheckGuard(q1n, q2n, g.AnswerTriples(), a, "oracularized three-query game");
  auto game = TwoProverGame<Rational>::Zero(q1n, q2n, g.AnswerTriples(), a);
  auto cons = game;
  auto sim = game;
  for (int i = 0; i < q1n; ++i) {
    const std::size_t t = out.q1_triples[i];
    const Triple& tr = g.triples[t];
    for (int j = 0; j < q2n; ++j) {
      const int slot = SlotOf(tr, out.q2_positions[j]);
      if (slot >= 0) game.Pi(i, j) = g.pi[t] / 3;
      for (int code = 0; code < g.AnswerTriples(); ++code) {
        const Rational& accept = g.Accept(t, code);
        for (int b = 0; b < a; ++b) {
          std::size_t idx = game.PredicateIndex(i, j, code, b);
          sim.predicate[idx] = accept;
          if (slot >= 0 && Letter(code, slot, a) == b) {
            cons.predicate[idx] = 1;
            game.predicate[idx] = accept;
          }
        }
      }
    }
  }
  cons.pi = game.pi;
  sim.pi = game.pi;
  out.game = std::move(game);
  out.consistency_only = std::move(cons);
  out.simulation_only = std::move(sim);
  return out;
}

DummyOracularization OracularizePcpDummy(const PcpGame<Rational>& g) {
  RequireValid(g, "three-query game");
  const int a = g.alphabet;
  const int n = g.positions;
  DummyOracularization out;
  out.positions = n;
  out.alphabet = a;
  out.position_marginal = PositionMarginal(g);
  const std::vector<Rational>& marginal = out.position_marginal;

  out.q1_of_triple.assign(g.triples.size(), -1);
  for (std::size_t t = 0; t < g.triples.size(); ++t) {
    if (g.pi[t] == 0) continue;
    out.q1_of_triple[t] = static_cast<int>(out.q1_triples.size());
    out.q1_triples.push_back(t);
  }
  out.q2_of_pair.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    if (marginal[x] == 0) continue;
    for (int y = x; y < n; ++y) {
      if (marginal[y] == 0) continue;
      out.q2_of_pair[static_cast<std::size_t>(x) * n + y] =
          static_cast<int>(out.q2_pairs.size());
      out.q2_pairs.push_back({x, y});
    }
  }
  const int q1n = static_cast<int>(out.q1_triples.size());
  const int q2n = static_cast<int>(out.q2_pairs.size());
  CheckGuard(q1n, q2n, g.AnswerTriples(), static_cast<std::int64_t>(a) * a,
             "dummy-oracularized three-query game");
  auto game = TwoProverGame<Rational>::Zero(q1n, q2n, g.AnswerTriples(), a * a);
  auto cons = game;
  auto sim = game;
  const Rational third(1, 3);
  const Rational half(1, 2);
  for (int i = 0; i < q1n; ++i) {
    const std::size_t t = out.q1_triples[i];
    const Triple& tr = g.triples[t];
    for (int j = 0; j < q2n; ++j) {
      const auto [x, y] = out.q2_pairs[j];
      const int sx = SlotOf(tr, x);
      const int sy = SlotOf(tr, y);
      // Weights of "x is real" and "y is real".
      Rational wx, wy;
      if (x == y) {
        if (sx >= 0) wx = wy = half;
        if (sx >= 0) game.Pi(i, j) = g.pi[t] * third * marginal[x];
      } else {
        if (sx >= 0) wx = marginal[y];
        if (sy >= 0) wy = marginal[x];
        Rational total = wx + wy;
        game.Pi(i, j) = g.pi[t] * third * total;
        if (total != 0) {
          wx /= total;
          wy /= total;
        }
      }
      for (int code = 0; code < g.AnswerTriples(); ++code) {
        const Rational& accept = g.Accept(t, code);
        for (int b1 = 0; b1 < a; ++b1) {
          for (int b2 = 0; b2 < a; ++b2) {
            Rational c;
            if (sx >= 0 && Letter(code, sx, a) == b1) c += wx;
            if (sy >= 0 && Letter(code, sy, a) == b2) c += wy;
            std::size_t idx = game.PredicateIndex(i, j, code, b1 * a + b2);
            sim.predicate[idx] = accept;
            cons.predicate[idx] = c;
            game.predicate[idx] = c * accept;
          }
        }
      }
    }
  }
  cons.pi = game.pi;
  sim.pi = game.pi;
  out.game = std::move(game);
  out.consistency_only = std::move(cons);
  out.simulation_only = std::move(sim);
  return out;
}

TwoProverGame<Rational> ParallelRepeat(const TwoProverGame<Rational>& g, int n) {
  RequireValid(g, "game");
  if (n <= 0) throw DimensionError("repetition count must be positive");
  if (n == 1) return g;
  const std::int64_t q1n = IntPow(g.q1_count, n);
  const std::int64_t q2n = IntPow(g.q2_count, n);
  const std::int64_t a1n = IntPow(g.a1_count, n);
  const std::int64_t a2n = IntPow(g.a2_count, n);
  CheckTableSize(SaturatingProduct({std::uint64_t(q1n), std::uint64_t(q2n),
                                    std::uint64_t(a1n), std::uint64_t(a2n)}),
                 "repeated game");
  if (q1n > INT32_MAX || q2n > INT32_MAX || a1n > INT32_MAX || a2n > INT32_MAX) {
    throw SizeGuardError("repeated game counts exceed int range");
  }
  auto out = TwoProverGame<Rational>::Zero(static_cast<int>(q1n), static_cast<int>(q2n),
                                           static_cast<int>(a1n), static_cast<int>(a2n));
  std::vector<std::vector<int>> dq1(q1n), dq2(q2n), da1(a1n), da2(a2n);
  for (std::int64_t c = 0; c < q1n; ++c) dq1[c] = DecodeTuple(c, g.q1_count, n);
  for (std::int64_t c = 0; c < q2n; ++c) dq2[c] = DecodeTuple(c, g.q2_count, n);
  for (std::int64_t c = 0; c < a1n; ++c) da1[c] = DecodeTuple(c, g.a1_count, n);
  for (std::int64_t c = 0; c < a2n; ++c) da2[c] = DecodeTuple(c, g.a2_count, n);
  for (int i = 0; i < q1n; ++i) {
    for (int j = 0; j < q2n; ++j) {
      Rational p = 1;
      for (int c = 0; c < n && p != 0; ++c) p *= g.Pi(dq1[i][c], dq2[j][c]);
      out.Pi(i, j) = p;
      for (int x = 0; x < a1n; ++x) {
        for (int y = 0; y < a2n; ++y) {
          Rational acc = 1;
          for (int c = 0; c < n && acc != 0; ++c) {
            acc *= g.Accept(dq1[i][c], dq2[j][c], da1[x][c], da2[y][c]);
          }
          if (acc != 0) out.Accept(i, j, x, y) = acc;
        }
      }
    }
  }
  return out;
}

namespace {

void ValidateFormula(const OneInThreeFormula& f) {
  if (f.num_variables <= 0 || f.clauses.empty()) {
    throw ValidationError("formula is empty");
  }
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& clause = f.clauses[c];
    for (int i = 0; i < 3; ++i) {
      if (clause[i].variable < 0 || clause[i].variable >= f.num_variables) {
        throw ValidationError("clause " + std::to_string(c + 1) +
                              " references a variable outside 1.." +
                              std::to_string(f.num_variables));
      }
    }
    if (clause[0].variable == clause[1].variable ||
        clause[0].variable == clause[2].variable ||
        clause[1].variable == clause[2].variable) {
      throw ValidationError("clause " + std::to_string(c + 1) +
                            " repeats a variable; clauses need three distinct variables");
    }
  }
}

bool LiteralTrue(const Literal& lit, int value) { return (value == 1) == lit.positive; }

}  // namespace

PcpFromFormula PcpFrom1In3(const OneInThreeFormula& f) {
  ValidateFormula(f);
  PcpFromFormula out;
  out.variable_position.assign(f.num_variables, -1);
  std::vector<bool> used(f.num_variables, false);
  for (const auto& clause : f.clauses) {
    for (const Literal& lit : clause) used[lit.variable] = true;
  }
  for (int v = 0; v < f.num_variables; ++v) {
    if (!used[v]) continue;
    out.variable_position[v] = static_cast<int>(out.position_variable.size());
    out.position_variable.push_back(v);
  }
  const int positions = static_cast<int>(out.position_variable.size());
  out.game = PcpGame<Rational>::Zero(positions, 2);
  PcpGame<Rational>& g = out.game;
  std::vector<int> counts(g.triples.size(), 0);
  const Rational weight(1, static_cast<long>(f.clauses.size()));
  for (const auto& clause : f.clauses) {
    std::array<Literal, 3> lits = clause;
    for (Literal& lit : lits) lit.variable = out.variable_position[lit.variable];
    std::sort(lits.begin(), lits.end(),
              [](const Literal& x, const Literal& y) { return x.variable < y.variable; });
    const std::size_t t =
        g.TripleIndex({lits[0].variable, lits[1].variable, lits[2].variable});
    ++counts[t];
    g.pi[t] += weight;
    for (int code = 0; code < 8; ++code) {
      int satisfied = 0;
      for (int s = 0; s < 3; ++s) satisfied += LiteralTrue(lits[s], Letter(code, s, 2));
      if (satisfied == 1) g.Accept(t, code) += 1;
    }
  }
  for (std::size_t t = 0; t < g.triples.size(); ++t) {
    if (counts[t] <= 1) continue;
    for (int code = 0; code < 8; ++code) g.Accept(t, code) /= counts[t];
  }
  return out;
}

Rational OneInThreeValueByEnumeration(const OneInThreeFormula& f) {
  ValidateFormula(f);
  CheckTableSize(SaturatingPower(2, f.num_variables), "assignment enumeration");
  const std::int64_t total = IntPow(2, f.num_variables);
  long best = 0;
  for (std::int64_t mask = 0; mask < total; ++mask) {
    long count = 0;
    for (const auto& clause : f.clauses) {
      int satisfied = 0;
      for (const Literal& lit : clause) {
        satisfied += LiteralTrue(lit, static_cast<int>((mask >> lit.variable) & 1));
      }
      count += satisfied == 1;
    }
    best = std::max(best, count);
  }
  Rational value(best, static_cast<long>(f.clauses.size()));
  value.canonicalize();
  return value;
}

namespace {

void CheckProof(const PcpGame<Rational>& g, const std::vector<int>& proof) {
  if (static_cast<int>(proof.size()) != g.positions) {
    throw DimensionError("proof has length " + std::to_string(proof.size()) + ", expected " +
                         std::to_string(g.positions));
  }
  for (int letter : proof) {
    if (letter < 0 || letter >= g.alphabet) throw DimensionError("proof letter out of range");
  }
}

}  // namespace

DeterministicBipartiteStrategy HonestPcpStrategy(const PcpOracularization& o,
                                                 const PcpGame<Rational>& g,
                                                 const std::vector<int>& proof) {
  CheckProof(g, proof);
  const int a = g.alphabet;
  DeterministicBipartiteStrategy s;
  for (std::size_t t : o.q1_triples) {
    const Triple& tr = g.triples[t];
    s.answers1.push_back((proof[tr[0]] * a + proof[tr[1]]) * a + proof[tr[2]]);
  }
  for (int p : o.q2_positions) s.answers2.push_back(proof[p]);
  return s;
}

DeterministicBipartiteStrategy HonestDummyStrategy(const DummyOracularization& o,
                                                   const PcpGame<Rational>& g,
                                                   const std::vector<int>& proof) {
  CheckProof(g, proof);
  const int a = g.alphabet;
  DeterministicBipartiteStrategy s;
  for (std::size_t t : o.q1_triples) {
    const Triple& tr = g.triples[t];
    s.answers1.push_back((proof[tr[0]] * a + proof[tr[1]]) * a + proof[tr[2]]);
  }
  for (const auto& [x, y] : o.q2_pairs) s.answers2.push_back(proof[x] * a + proof[y]);
  return s;
}

namespace {

// Answers of the deterministic single prover to the first `k` questions.
std::int64_t RunRounds(const std::vector<std::vector<int>>& answers, int q, int a,
                       const std::vector<int>& questions, int k) {
  std::int64_t qcode = 0;
  std::int64_t acode = 0;
  for (int round = 1; round <= k; ++round) {
    qcode = qcode * q + questions[round - 1];
    const auto& table = answers[round - 1];
    std::int64_t h = qcode * IntPow(a, round - 1) + acode;
    if (h >= static_cast<std::int64_t>(table.size())) {
      throw DimensionError("deterministic strategy table too small");
    }
    int ans = table[h];
    if (ans < 0 || ans >= a) throw DimensionError("deterministic answer out of range");
    acode = acode * a + ans;
  }
  return acode;
}

}  // namespace

DeterministicBipartiteStrategy HonestMultiRoundStrategy(
    const MultiRoundOracularization& o, const MultiRoundGame<Rational>& g,
    const std::vector<std::vector<int>>& answers) {
  if (static_cast<int>(answers.size()) != g.rounds) {
    throw DimensionError("deterministic multi-round strategy needs one table per round");
  }
  DeterministicBipartiteStrategy s;
  for (std::int64_t code : o.q1_codes) {
    s.answers1.push_back(static_cast<int>(
        RunRounds(answers, g.q_count, g.a_count, DecodeTuple(code, g.q_count, g.rounds),
                  g.rounds)));
  }
  for (std::int64_t p : o.q2_prefixes) {
    std::vector<int> prefix = o.question_prefixes.DecodeTuple(p);
    const int k = static_cast<int>(prefix.size());
    std::int64_t acode = RunRounds(answers, g.q_count, g.a_count, prefix, k);
    s.answers2.push_back(static_cast<int>(o.answer_prefixes.Encode(k, acode)));
  }
  return s;
}

BipartiteStrategy<Rational> CanonicalizeSecondProverLengths(
    const MultiRoundOracularization& o, const BipartiteStrategy<Rational>& strategy) {
  const TwoProverGame<Rational>& g = o.game;
  if (strategy.q1_count != g.q1_count || strategy.q2_count != g.q2_count ||
      strategy.a1_count != g.a1_count || strategy.a2_count != g.a2_count) {
    throw DimensionError("strategy shape does not match the oracularized game");
  }
  // The length-1 block at the front of the answer prefixes has |A| entries.
  int alphabet = 0;
  while (alphabet < g.a2_count && o.answer_prefixes.Decode(alphabet).first == 1) ++alphabet;

  auto out = BipartiteStrategy<Rational>::Zero(g.q1_count, g.q2_count, g.a1_count, g.a2_count);
  std::vector<int> target(static_cast<std::size_t>(g.q2_count) * g.a2_count);
  for (int j = 0; j < g.q2_count; ++j) {
    const int k = o.question_prefixes.Decode(o.q2_prefixes[j]).first;
    for (int b = 0; b < g.a2_count; ++b) {
      auto [kb, code] = o.answer_prefixes.Decode(b);
      std::int64_t fixed = code;
      if (kb > k) fixed = code / IntPow(alphabet, kb - k);
      if (kb < k) fixed = code * IntPow(alphabet, k - kb);
      target[static_cast<std::size_t>(j) * g.a2_count + b] =
          static_cast<int>(o.answer_prefixes.Encode(k, fixed));
    }
  }
  for (int i = 0; i < g.q1_count; ++i) {
    for (int j = 0; j < g.q2_count; ++j) {
      for (int x = 0; x < g.a1_count; ++x) {
        for (int b = 0; b < g.a2_count; ++b) {
          const Rational& p = strategy(i, j, x, b);
          if (p == 0) continue;
          out(i, j, x, target[static_cast<std::size_t>(j) * g.a2_count + b]) += p;
        }
      }
    }
  }
  return out;
}

}  // namespace twoprover

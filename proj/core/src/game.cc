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

#include "twoprover/game.h"

#include <algorithm>
#include <limits>
#include <sstream>

namespace twoprover {
namespace {

template <Scalar S>
std::string Show(const S& value) {
  return ToString(value);
}

void CheckPositive(int value, const char* what) {
  if (value <= 0) {
    throw DimensionError(std::string(what) + " must be positive, got " +
                         std::to_string(value));
  }
}

template <Scalar S>
void CheckProbabilityRange(const std::vector<S>& values, const char* what,
                           std::vector<std::string>& violations) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > 1) {
      std::ostringstream msg;
      msg << what << " range: entry " << i << " = " << Show(values[i])
          << " is outside [0, 1]";
      violations.push_back(msg.str());
      return;
    }
  }
}

template <Scalar S>
void CheckSumsToOne(const S& sum, const std::string& what,
                    std::vector<std::string>& violations) {
  S deviation = Abs(S(sum - S(1)));
  if (deviation > ScalarTraits<S>::NormalizationTolerance()) {
    violations.push_back(what + " normalization: sums to " + Show(sum) +
                         " instead of 1");
  }
}

template <Scalar S>
void CheckDistributionBlocks(const std::vector<S>& values, std::size_t block,
                             const char* what,
                             std::vector<std::string>& violations) {
  for (std::size_t start = 0; start < values.size(); start += block) {
    S sum(0);
    for (std::size_t i = start; i < start + block; ++i) {
      if (values[i] < 0) {
        violations.push_back(std::string(what) + " nonnegativity: entry " +
                             std::to_string(i) + " is " + Show(values[i]));
        return;
      }
      sum += values[i];
    }
    std::size_t before = violations.size();
    CheckSumsToOne(sum, std::string(what) + " block " + std::to_string(start / block),
                   violations);
    if (violations.size() != before) return;
  }
}

void CheckSize(std::size_t actual, std::uint64_t expected, const char* what,
               std::vector<std::string>& violations) {
  if (actual != expected) {
    violations.push_back(std::string(what) + " dimensions: table has " +
                         std::to_string(actual) + " entries, expected " +
                         std::to_string(expected));
  }
}

}  // namespace

std::int64_t IntPow(int base, int exponent) {
  std::int64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::int64_t>::max() / base) {
      throw SizeGuardError("integer power " + std::to_string(base) + "^" +
                           std::to_string(exponent) + " overflows");
    }
    result *= base;
  }
  return result;
}

std::int64_t EncodeTuple(const std::vector<int>& digits, int base) {
  std::int64_t code = 0;
  for (int d : digits) code = code * base + d;
  return code;
}

std::vector<int> DecodeTuple(std::int64_t code, int base, int length) {
  std::vector<int> digits(length);
  for (int i = length - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(code % base);
    code /= base;
  }
  return digits;
}

std::string ValidationReport::Summary() const {
  std::string out;
  for (const std::string& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out.empty() ? "valid" : out;
}

// ---------------------------------------------------------------------------
// Constructors.

template <Scalar S>
TwoProverGame<S> TwoProverGame<S>::Zero(int q1, int q2, int a1, int a2) {
  CheckPositive(q1, "q1_count");
  CheckPositive(q2, "q2_count");
  CheckPositive(a1, "a1_count");
  CheckPositive(a2, "a2_count");
  std::uint64_t entries = SaturatingProduct({std::uint64_t(q1), std::uint64_t(q2),
                                             std::uint64_t(a1), std::uint64_t(a2)});
  CheckTableSize(entries, "two-prover predicate");
  TwoProverGame game;
  game.q1_count = q1;
  game.q2_count = q2;
  game.a1_count = a1;
  game.a2_count = a2;
  game.pi.assign(static_cast<std::size_t>(q1) * q2, S(0));
  game.predicate.assign(entries, S(0));
  return game;
}

template <Scalar S>
MultiRoundGame<S> MultiRoundGame<S>::Zero(int q_count, int a_count, int rounds) {
  CheckPositive(q_count, "q_count");
  CheckPositive(a_count, "a_count");
  CheckPositive(rounds, "rounds");
  std::uint64_t entries = SaturatingProduct(
      {SaturatingPower(q_count, rounds), SaturatingPower(a_count, rounds)});
  CheckTableSize(entries, "multi-round predicate");
  MultiRoundGame game;
  game.q_count = q_count;
  game.a_count = a_count;
  game.rounds = rounds;
  game.pi.assign(game.QuestionTuples(), S(0));
  game.predicate.assign(entries, S(0));
  return game;
}

template <Scalar S>
PcpGame<S> PcpGame<S>::Zero(int positions, int alphabet) {
  CheckPositive(positions, "positions");
  CheckPositive(alphabet, "alphabet_size");
  if (positions < 3) {
    throw DimensionError("a three-query game needs at least 3 positions, got " +
                         std::to_string(positions));
  }
  std::uint64_t n = positions;
  std::uint64_t triple_count = n * (n - 1) * (n - 2) / 6;
  std::uint64_t entries =
      SaturatingProduct({triple_count, SaturatingPower(alphabet, 3)});
  CheckTableSize(entries, "three-query predicate");
  PcpGame game;
  game.positions = positions;
  game.alphabet = alphabet;
  for (int a = 0; a < positions; ++a) {
    for (int b = a + 1; b < positions; ++b) {
      for (int c = b + 1; c < positions; ++c) game.triples.push_back({a, b, c});
    }
  }
  game.pi.assign(game.triples.size(), S(0));
  game.predicate.assign(entries, S(0));
  return game;
}

template <Scalar S>
std::size_t PcpGame<S>::TripleIndex(const Triple& t) const {
  if (!(0 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] < positions)) {
    throw DimensionError("triple (" + std::to_string(t[0]) + "," +
                         std::to_string(t[1]) + "," + std::to_string(t[2]) +
                         ") is not strictly increasing within " +
                         std::to_string(positions) + " positions");
  }
  auto it = std::lower_bound(triples.begin(), triples.end(), t);
  return static_cast<std::size_t>(it - triples.begin());
}

template <Scalar S>
BipartiteStrategy<S> BipartiteStrategy<S>::Zero(int q1, int q2, int a1, int a2) {
  CheckPositive(q1, "q1_count");
  CheckPositive(q2, "q2_count");
  CheckPositive(a1, "a1_count");
  CheckPositive(a2, "a2_count");
  std::uint64_t entries = SaturatingProduct({std::uint64_t(q1), std::uint64_t(q2),
                                             std::uint64_t(a1), std::uint64_t(a2)});
  CheckTableSize(entries, "bipartite strategy");
  BipartiteStrategy s;
  s.q1_count = q1;
  s.q2_count = q2;
  s.a1_count = a1;
  s.a2_count = a2;
  s.table.assign(entries, S(0));
  return s;
}

template <Scalar S>
MultiRoundStrategy<S> MultiRoundStrategy<S>::Zero(int q_count, int a_count,
                                                  int rounds) {
  CheckPositive(q_count, "q_count");
  CheckPositive(a_count, "a_count");
  CheckPositive(rounds, "rounds");
  MultiRoundStrategy s;
  s.q_count = q_count;
  s.a_count = a_count;
  s.rounds = rounds;
  for (int k = 1; k <= rounds; ++k) {
    std::uint64_t entries = SaturatingProduct(
        {SaturatingPower(q_count, k), SaturatingPower(a_count, k)});
    CheckTableSize(entries, "multi-round strategy");
    s.tables.emplace_back(entries, S(0));
  }
  return s;
}

template <Scalar S>
PcpProofDistribution<S> PcpProofDistribution<S>::Zero(int positions, int alphabet) {
  CheckPositive(positions, "positions");
  CheckPositive(alphabet, "alphabet_size");
  CheckTableSize(SaturatingPower(alphabet, positions), "proof distribution");
  PcpProofDistribution d;
  d.positions = positions;
  d.alphabet = alphabet;
  d.probabilities.assign(IntPow(alphabet, positions), S(0));
  return d;
}

template <Scalar S>
PcpProofDistribution<S> PcpProofDistribution<S>::PointMass(
    const std::vector<int>& proof, int alphabet) {
  PcpProofDistribution d = Zero(static_cast<int>(proof.size()), alphabet);
  for (int letter : proof) {
    if (letter < 0 || letter >= alphabet) {
      throw DimensionError("proof letter " + std::to_string(letter) +
                           " outside alphabet of size " + std::to_string(alphabet));
    }
  }
  d.probabilities[EncodeTuple(proof, alphabet)] = S(1);
  return d;
}

// ---------------------------------------------------------------------------
// Validation.

template <Scalar S>
ValidationReport Validate(const TwoProverGame<S>& game) {
  ValidationReport report;
  auto& v = report.violations;
  if (game.q1_count <= 0 || game.q2_count <= 0 || game.a1_count <= 0 ||
      game.a2_count <= 0) {
    v.push_back("dimensions: all counts must be positive");
    return report;
  }
  CheckSize(game.pi.size(), std::uint64_t(game.q1_count) * game.q2_count, "pi", v);
  CheckSize(game.predicate.size(),
            SaturatingProduct({std::uint64_t(game.q1_count), std::uint64_t(game.q2_count),
                               std::uint64_t(game.a1_count), std::uint64_t(game.a2_count)}),
            "predicate", v);
  if (!v.empty()) return report;
  S sum(0);
  for (const S& p : game.pi) {
    if (p < 0) {
      v.push_back("pi nonnegativity: entry " + Show(p) + " is negative");
      break;
    }
    sum += p;
  }
  CheckSumsToOne(sum, "pi", v);
  CheckProbabilityRange(game.predicate, "predicate", v);
  return report;
}

template <Scalar S>
ValidationReport Validate(const MultiRoundGame<S>& game) {
  ValidationReport report;
  auto& v = report.violations;
  if (game.q_count <= 0 || game.a_count <= 0 || game.rounds <= 0) {
    v.push_back("dimensions: all counts must be positive");
    return report;
  }
  CheckSize(game.pi.size(), SaturatingPower(game.q_count, game.rounds), "pi", v);
  CheckSize(game.predicate.size(),
            SaturatingProduct({SaturatingPower(game.q_count, game.rounds),
                               SaturatingPower(game.a_count, game.rounds)}),
            "predicate", v);
  if (!v.empty()) return report;
  S sum(0);
  for (const S& p : game.pi) {
    if (p < 0) {
      v.push_back("pi nonnegativity: entry " + Show(p) + " is negative");
      break;
    }
    sum += p;
  }
  CheckSumsToOne(sum, "pi", v);
  CheckProbabilityRange(game.predicate, "predicate", v);
  return report;
}

template <Scalar S>
ValidationReport Validate(const PcpGame<S>& game) {
  ValidationReport report;
  auto& v = report.violations;
  if (game.positions < 3 || game.alphabet <= 0) {
    v.push_back("dimensions: need positions >= 3 and a positive alphabet");
    return report;
  }
  std::uint64_t n = game.positions;
  std::uint64_t triple_count = n * (n - 1) * (n - 2) / 6;
  CheckSize(game.triples.size(), triple_count, "triples", v);
  CheckSize(game.pi.size(), triple_count, "pi", v);
  CheckSize(game.predicate.size(),
            triple_count * SaturatingPower(game.alphabet, 3), "predicate", v);
  if (!v.empty()) return report;
  for (const Triple& t : game.triples) {
    if (!(0 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] < game.positions)) {
      v.push_back("pi support: triple is not strictly increasing");
      return report;
    }
  }
  S sum(0);
  for (const S& p : game.pi) {
    if (p < 0) {
      v.push_back("pi nonnegativity: entry " + Show(p) + " is negative");
      break;
    }
    sum += p;
  }
  CheckSumsToOne(sum, "pi", v);
  CheckProbabilityRange(game.predicate, "predicate", v);
  return report;
}

template <Scalar S>
ValidationReport Validate(const BipartiteStrategy<S>& strategy) {
  ValidationReport report;
  auto& v = report.violations;
  CheckSize(strategy.table.size(),
            SaturatingProduct({std::uint64_t(strategy.q1_count),
                               std::uint64_t(strategy.q2_count),
                               std::uint64_t(strategy.a1_count),
                               std::uint64_t(strategy.a2_count)}),
            "strategy", v);
  if (!v.empty() || strategy.table.empty()) return report;
  CheckDistributionBlocks(strategy.table,
                          std::size_t(strategy.a1_count) * strategy.a2_count,
                          "strategy", v);
  return report;
}

template <Scalar S>
ValidationReport Validate(const MultiRoundStrategy<S>& strategy) {
  ValidationReport report;
  auto& v = report.violations;
  if (static_cast<int>(strategy.tables.size()) != strategy.rounds) {
    v.push_back("strategy dimensions: wrong number of rounds");
    return report;
  }
  for (int k = 1; k <= strategy.rounds; ++k) {
    const auto& table = strategy.tables[k - 1];
    CheckSize(table.size(),
              SaturatingProduct({SaturatingPower(strategy.q_count, k),
                                 SaturatingPower(strategy.a_count, k)}),
              "strategy round", v);
    if (!v.empty()) return report;
    std::string what = "round " + std::to_string(k);
    CheckDistributionBlocks(table, strategy.a_count, what.c_str(), v);
    if (!v.empty()) return report;
  }
  return report;
}

template <Scalar S>
ValidationReport Validate(const PcpProofDistribution<S>& proof) {
  ValidationReport report;
  auto& v = report.violations;
  CheckSize(proof.probabilities.size(),
            SaturatingPower(proof.alphabet, proof.positions), "proof distribution", v);
  if (!v.empty()) return report;
  CheckDistributionBlocks(proof.probabilities, proof.probabilities.size(),
                          "proof distribution", v);
  return report;
}

// ---------------------------------------------------------------------------
// Evaluation.

template <Scalar S>
S EvalTwoProver(const TwoProverGame<S>& game, const BipartiteStrategy<S>& strategy) {
  if (game.q1_count != strategy.q1_count || game.q2_count != strategy.q2_count ||
      game.a1_count != strategy.a1_count || game.a2_count != strategy.a2_count) {
    throw DimensionError("strategy shape does not match the game");
  }
  S total(0);
  for (int q1 = 0; q1 < game.q1_count; ++q1) {
    for (int q2 = 0; q2 < game.q2_count; ++q2) {
      const S& p = game.Pi(q1, q2);
      if (p == 0) continue;
      S inner(0);
      std::size_t base = game.PredicateIndex(q1, q2, 0, 0);
      std::size_t block = std::size_t(game.a1_count) * game.a2_count;
      for (std::size_t i = 0; i < block; ++i) {
        const S& r = game.predicate[base + i];
        if (r == 0) continue;
        inner += strategy.table[base + i] * r;
      }
      total += p * inner;
    }
  }
  return total;
}

template <Scalar S>
std::vector<S> InducedAnswerDistribution(const MultiRoundStrategy<S>& strategy,
                                         std::int64_t q_code) {
  const int r = strategy.rounds;
  const int a = strategy.a_count;
  std::vector<int> questions = DecodeTuple(q_code, strategy.q_count, r);
  // Breadth-first expansion over answer prefixes.
  std::vector<S> current{S(1)};
  std::int64_t q_prefix = 0;
  for (int k = 1; k <= r; ++k) {
    q_prefix = q_prefix * strategy.q_count + questions[k - 1];
    std::vector<S> next(current.size() * a, S(0));
    for (std::size_t prefix = 0; prefix < current.size(); ++prefix) {
      if (current[prefix] == 0) continue;
      for (int ak = 0; ak < a; ++ak) {
        next[prefix * a + ak] =
            current[prefix] * strategy.At(k, q_prefix, static_cast<std::int64_t>(prefix), ak);
      }
    }
    current = std::move(next);
  }
  return current;
}

template <Scalar S>
S EvalMultiRound(const MultiRoundGame<S>& game, const MultiRoundStrategy<S>& strategy) {
  if (game.q_count != strategy.q_count || game.a_count != strategy.a_count ||
      game.rounds != strategy.rounds) {
    throw DimensionError("multi-round strategy shape does not match the game");
  }
  S total(0);
  const std::int64_t answers = game.AnswerTuples();
  for (std::int64_t q = 0; q < game.QuestionTuples(); ++q) {
    if (game.pi[q] == 0) continue;
    std::vector<S> dist = InducedAnswerDistribution(strategy, q);
    S inner(0);
    for (std::int64_t a = 0; a < answers; ++a) {
      if (dist[a] == 0) continue;
      inner += dist[a] * game.Accept(q, a);
    }
    total += game.pi[q] * inner;
  }
  return total;
}

template <Scalar S>
S EvalPcpProof(const PcpGame<S>& game, const std::vector<int>& proof) {
  if (static_cast<int>(proof.size()) != game.positions) {
    throw DimensionError("proof length " + std::to_string(proof.size()) +
                         " does not match " + std::to_string(game.positions) +
                         " positions");
  }
  S total(0);
  const int a = game.alphabet;
  for (std::size_t t = 0; t < game.triples.size(); ++t) {
    if (game.pi[t] == 0) continue;
    const Triple& tr = game.triples[t];
    int code = (proof[tr[0]] * a + proof[tr[1]]) * a + proof[tr[2]];
    total += game.pi[t] * game.Accept(t, code);
  }
  return total;
}

template <Scalar S>
S EvalPcp(const PcpGame<S>& game, const PcpProofDistribution<S>& proof) {
  if (proof.positions != game.positions || proof.alphabet != game.alphabet) {
    throw DimensionError("proof distribution shape does not match the game");
  }
  S total(0);
  for (std::size_t t = 0; t < game.triples.size(); ++t) {
    if (game.pi[t] == 0) continue;
    std::vector<S> dist = PcpTripleDistribution(proof, game.triples[t]);
    S inner(0);
    for (int code = 0; code < game.AnswerTriples(); ++code) {
      if (dist[code] == 0) continue;
      inner += dist[code] * game.Accept(t, code);
    }
    total += game.pi[t] * inner;
  }
  return total;
}

template <Scalar S>
NoSignalingCheck<S> CheckNoSignaling(const BipartiteStrategy<S>& s, const S& tolerance) {
  NoSignalingCheck<S> result;
  // Prover 1 marginal over a2, compared across q2.
  std::vector<S> reference(s.a1_count);
  for (int q1 = 0; q1 < s.q1_count; ++q1) {
    for (int q2 = 0; q2 < s.q2_count; ++q2) {
      for (int a1 = 0; a1 < s.a1_count; ++a1) {
        S m(0);
        for (int a2 = 0; a2 < s.a2_count; ++a2) m += s(q1, q2, a1, a2);
        if (q2 == 0) {
          reference[a1] = m;
        } else {
          S diff = Abs(S(m - reference[a1]));
          if (diff > result.max_violation) result.max_violation = diff;
        }
      }
    }
  }
  reference.assign(s.a2_count, S(0));
  for (int q2 = 0; q2 < s.q2_count; ++q2) {
    for (int q1 = 0; q1 < s.q1_count; ++q1) {
      for (int a2 = 0; a2 < s.a2_count; ++a2) {
        S m(0);
        for (int a1 = 0; a1 < s.a1_count; ++a1) m += s(q1, q2, a1, a2);
        if (q1 == 0) {
          reference[a2] = m;
        } else {
          S diff = Abs(S(m - reference[a2]));
          if (diff > result.max_violation) result.max_violation = diff;
        }
      }
    }
  }
  result.no_signaling = !(result.max_violation > tolerance);
  return result;
}

namespace {

void CheckTriplePositions(const Triple& t, int positions) {
  for (int i = 0; i < 3; ++i) {
    if (t[i] < 0 || t[i] >= positions) {
      throw DimensionError("triple position " + std::to_string(t[i]) +
                           " out of range for " + std::to_string(positions) +
                           " positions");
    }
  }
  if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) {
    throw DimensionError("triple positions must be distinct");
  }
}

}  // namespace

template <Scalar S>
std::vector<S> PcpTripleDistribution(const PcpProofDistribution<S>& proof,
                                     const Triple& triple) {
  CheckTriplePositions(triple, proof.positions);
  const int a = proof.alphabet;
  std::vector<S> dist(a * a * a, S(0));
  std::vector<int> letters(proof.positions, 0);
  for (std::size_t code = 0; code < proof.probabilities.size(); ++code) {
    const S& p = proof.probabilities[code];
    if (p == 0) continue;
    letters = DecodeTuple(static_cast<std::int64_t>(code), a, proof.positions);
    dist[(letters[triple[0]] * a + letters[triple[1]]) * a + letters[triple[2]]] += p;
  }
  return dist;
}

template <Scalar S>
std::vector<S> PcpTripleDistribution(const PcpProofMixture<S>& proof,
                                     const Triple& triple) {
  CheckTriplePositions(triple, proof.positions);
  const int a = proof.alphabet;
  std::vector<S> dist(a * a * a, S(0));
  for (const auto& [weight, letters] : proof.components) {
    if (static_cast<int>(letters.size()) != proof.positions) {
      throw DimensionError("mixture component has the wrong length");
    }
    dist[(letters[triple[0]] * a + letters[triple[1]]) * a + letters[triple[2]]] += weight;
  }
  return dist;
}

template <Scalar S>
BipartiteStrategy<S> Embed(const DeterministicBipartiteStrategy& strategy,
                           int a1_count, int a2_count) {
  const int q1 = static_cast<int>(strategy.answers1.size());
  const int q2 = static_cast<int>(strategy.answers2.size());
  auto table = BipartiteStrategy<S>::Zero(q1, q2, a1_count, a2_count);
  for (int i = 0; i < q1; ++i) {
    if (strategy.answers1[i] < 0 || strategy.answers1[i] >= a1_count) {
      throw DimensionError("deterministic answer out of range for prover 1");
    }
  }
  for (int j = 0; j < q2; ++j) {
    if (strategy.answers2[j] < 0 || strategy.answers2[j] >= a2_count) {
      throw DimensionError("deterministic answer out of range for prover 2");
    }
  }
  for (int i = 0; i < q1; ++i) {
    for (int j = 0; j < q2; ++j) {
      table(i, j, strategy.answers1[i], strategy.answers2[j]) = S(1);
    }
  }
  return table;
}

MultiRoundStrategy<Rational> DeterministicMultiRound(
    int q_count, int a_count, int rounds,
    const std::vector<std::vector<int>>& answers) {
  auto s = MultiRoundStrategy<Rational>::Zero(q_count, a_count, rounds);
  if (static_cast<int>(answers.size()) != rounds) {
    throw DimensionError("deterministic multi-round strategy needs one table per round");
  }
  for (int k = 1; k <= rounds; ++k) {
    std::int64_t histories = IntPow(q_count, k) * IntPow(a_count, k - 1);
    if (static_cast<std::int64_t>(answers[k - 1].size()) != histories) {
      throw DimensionError("round " + std::to_string(k) + " table has the wrong size");
    }
    for (std::int64_t h = 0; h < histories; ++h) {
      int ans = answers[k - 1][h];
      if (ans < 0 || ans >= a_count) throw DimensionError("answer out of range");
      s.tables[k - 1][h * a_count + ans] = 1;
    }
  }
  return s;
}

namespace {

std::vector<double> ToDoubles(const std::vector<Rational>& values) {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i].get_d();
  return out;
}

}  // namespace

TwoProverGame<double> ToFloat(const TwoProverGame<Rational>& game) {
  TwoProverGame<double> out;
  out.q1_count = game.q1_count;
  out.q2_count = game.q2_count;
  out.a1_count = game.a1_count;
  out.a2_count = game.a2_count;
  out.pi = ToDoubles(game.pi);
  out.predicate = ToDoubles(game.predicate);
  out.labels = game.labels;
  return out;
}

MultiRoundGame<double> ToFloat(const MultiRoundGame<Rational>& game) {
  MultiRoundGame<double> out;
  out.q_count = game.q_count;
  out.a_count = game.a_count;
  out.rounds = game.rounds;
  out.pi = ToDoubles(game.pi);
  out.predicate = ToDoubles(game.predicate);
  return out;
}

PcpGame<double> ToFloat(const PcpGame<Rational>& game) {
  PcpGame<double> out;
  out.positions = game.positions;
  out.alphabet = game.alphabet;
  out.triples = game.triples;
  out.pi = ToDoubles(game.pi);
  out.predicate = ToDoubles(game.predicate);
  return out;
}

BipartiteStrategy<double> ToFloat(const BipartiteStrategy<Rational>& strategy) {
  BipartiteStrategy<double> out;
  out.q1_count = strategy.q1_count;
  out.q2_count = strategy.q2_count;
  out.a1_count = strategy.a1_count;
  out.a2_count = strategy.a2_count;
  out.table = ToDoubles(strategy.table);
  return out;
}

template <Scalar S>
S StatisticalDifference(const std::vector<S>& p, const std::vector<S>& q) {
  if (p.size() != q.size()) {
    throw DimensionError("statistical difference of distributions on different sets");
  }
  S total(0);
  for (std::size_t i = 0; i < p.size(); ++i) total += Abs(S(p[i] - q[i]));
  return total / 2;
}

#define TWOPROVER_INSTANTIATE(S)                                                   \
  template struct TwoProverGame<S>;                                                \
  template struct MultiRoundGame<S>;                                               \
  template struct PcpGame<S>;                                                      \
  template struct BipartiteStrategy<S>;                                            \
  template struct MultiRoundStrategy<S>;                                           \
  template struct PcpProofDistribution<S>;                                         \
  template ValidationReport Validate(const TwoProverGame<S>&);                     \
  template ValidationReport Validate(const MultiRoundGame<S>&);                    \
  template ValidationReport Validate(const PcpGame<S>&);                           \
  template ValidationReport Validate(const BipartiteStrategy<S>&);                 \
  template ValidationReport Validate(const MultiRoundStrategy<S>&);                \
  template ValidationReport Validate(const PcpProofDistribution<S>&);              \
  template S EvalTwoProver(const TwoProverGame<S>&, const BipartiteStrategy<S>&);  \
  template S EvalMultiRound(const MultiRoundGame<S>&, const MultiRoundStrategy<S>&); \
  template S EvalPcp(const PcpGame<S>&, const PcpProofDistribution<S>&);           \
  template S EvalPcpProof(const PcpGame<S>&, const std::vector<int>&);             \
  template NoSignalingCheck<S> CheckNoSignaling(const BipartiteStrategy<S>&, const S&); \
  template std::vector<S> PcpTripleDistribution(const PcpProofDistribution<S>&,    \
                                                const Triple&);                    \
  template std::vector<S> PcpTripleDistribution(const PcpProofMixture<S>&,         \
                                                const Triple&);                    \
  template BipartiteStrategy<S> Embed(const DeterministicBipartiteStrategy&, int, int); \
  template std::vector<S> InducedAnswerDistribution(const MultiRoundStrategy<S>&,  \
                                                    std::int64_t);                 \
  template S StatisticalDifference(const std::vector<S>&, const std::vector<S>&);

TWOPROVER_INSTANTIATE(Rational)
TWOPROVER_INSTANTIATE(double)

#undef TWOPROVER_INSTANTIATE

}  // namespace twoprover

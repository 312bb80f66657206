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

#include "twoprover/values.h"

#include <array>
#include <limits>
#include <type_traits>

#include "twoprover/errors.h"

namespace twoprover {
namespace {

// Common-denominator integer image of nonnegative rationals.
struct ScaledWeights {
  std::vector<mpz_class> values;
  mpz_class scale;  // weight = values[i] / scale
  bool fits_int64 = false;
};

ScaledWeights ScaleToIntegers(const std::vector<Rational>& weights) {
  ScaledWeights out;
  out.scale = 1;
  for (const Rational& w : weights) {
    if (w != 0) mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), w.get_den_mpz_t());
  }
  out.values.resize(weights.size());
  mpz_class total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0) continue;
    out.values[i] = weights[i].get_num() * (out.scale / weights[i].get_den());
    total += abs(out.values[i]);
  }
  out.fits_int64 = total < (mpz_class(1) << 62);
  return out;
}

std::vector<std::int64_t> ToInt64(const std::vector<mpz_class>& v) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_si();
  return out;
}

template <typename T>
struct SearchResult {
  T best{};
  std::vector<int> f1;
  std::vector<int> f2;
};

// w is indexed [q1][q2][a1][a2]. Enumerates prover-1 strategies in odometer
// order and lets prover 2 best-respond.
template <typename T>
SearchResult<T> EnumerateFirstProver(const std::vector<T>& w, int q1n, int q2n, int a1n,
                                     int a2n) {
  auto at = [&](int i, int j, int x, int y) -> const T& {
    return w[((static_cast<std::size_t>(i) * q2n + j) * a1n + x) * a2n + y];
  };
  std::vector<int> f1(q1n, 0);
  std::vector<T> score(static_cast<std::size_t>(q2n) * a2n, T(0));
  for (int i = 0; i < q1n; ++i) {
    for (int j = 0; j < q2n; ++j) {
      for (int y = 0; y < a2n; ++y) score[j * a2n + y] += at(i, j, 0, y);
    }
  }
  SearchResult<T> result;
  bool have = false;
  std::vector<int> respond(q2n);
  while (true) {
    T total(0);
    for (int j = 0; j < q2n; ++j) {
      int arg = 0;
      for (int y = 1; y < a2n; ++y) {
        if (score[j * a2n + y] > score[j * a2n + arg]) arg = y;
      }
      respond[j] = arg;
      total += score[j * a2n + arg];
    }
    if (!have || total > result.best) {
      have = true;
      result.best = total;
      result.f1 = f1;
      result.f2 = respond;
    }
    // Odometer step, last question fastest.
    int i = q1n - 1;
    while (i >= 0) {
      const int old = f1[i];
      const int next = old + 1 == a1n ? 0 : old + 1;
      f1[i] = next;
      for (int j = 0; j < q2n; ++j) {
        for (int y = 0; y < a2n; ++y) {
          score[j * a2n + y] += at(i, j, next, y);
          score[j * a2n + y] -= at(i, j, old, y);
        }
      }
      if (next != 0) break;
      --i;
    }
    if (i < 0) break;
  }
  return result;
}

template <typename T>
SearchResult<T> Search(const std::vector<T>& w, int q1n, int q2n, int a1n, int a2n,
                       bool enumerate_first) {
  if (enumerate_first) return EnumerateFirstProver(w, q1n, q2n, a1n, a2n);
  std::vector<T> transposed(w.size());
  for (int i = 0; i < q1n; ++i) {
    for (int j = 0; j < q2n; ++j) {
      for (int x = 0; x < a1n; ++x) {
        for (int y = 0; y < a2n; ++y) {
          transposed[((static_cast<std::size_t>(j) * q1n + i) * a2n + y) * a1n + x] =
              w[((static_cast<std::size_t>(i) * q2n + j) * a1n + x) * a2n + y];
        }
      }
    }
  }
  SearchResult<T> r = EnumerateFirstProver(transposed, q2n, q1n, a2n, a1n);
  std::swap(r.f1, r.f2);
  return r;
}

}  // namespace

template <Scalar S>
ValueResult<S, DeterministicBipartiteStrategy> ClassicalValue(const TwoProverGame<S>& game) {
  RequireValid(game, "game");
  const std::uint64_t count1 = SaturatingPower(game.a1_count, game.q1_count);
  const std::uint64_t count2 = SaturatingPower(game.a2_count, game.q2_count);
  const bool first = count1 <= count2;
  CheckTableSize(first ? count1 : count2, "deterministic strategy enumeration");

  std::vector<S> w(game.predicate.size());
  for (int i = 0; i < game.q1_count; ++i) {
    for (int j = 0; j < game.q2_count; ++j) {
      const S& p = game.Pi(i, j);
      const std::size_t base = game.PredicateIndex(i, j, 0, 0);
      for (std::size_t k = 0; k < std::size_t(game.a1_count) * game.a2_count; ++k) {
        if (p != 0 && game.predicate[base + k] != 0) w[base + k] = p * game.predicate[base + k];
      }
    }
  }

  ValueResult<S, DeterministicBipartiteStrategy> result;
  result.method = "deterministic-enumeration";
  result.exact = ScalarTraits<S>::kExact;
  if constexpr (std::is_same_v<S, Rational>) {
    ScaledWeights scaled = ScaleToIntegers(w);
    if (scaled.fits_int64) {
      auto r = Search(ToInt64(scaled.values), game.q1_count, game.q2_count, game.a1_count,
                      game.a2_count, first);
      result.value = Rational(mpz_class(static_cast<long>(r.best)), scaled.scale);
      result.witness = {r.f1, r.f2};
    } else {
      auto r = Search(scaled.values, game.q1_count, game.q2_count, game.a1_count,
                      game.a2_count, first);
      result.value = Rational(r.best, scaled.scale);
      result.witness = {r.f1, r.f2};
    }
    result.value.canonicalize();
  } else {
    auto r = Search(w, game.q1_count, game.q2_count, game.a1_count, game.a2_count, first);
    result.value = r.best;
    result.witness = {r.f1, r.f2};
  }
  return result;
}

template ValueResult<Rational, DeterministicBipartiteStrategy> ClassicalValue(
    const TwoProverGame<Rational>&);
template ValueResult<double, DeterministicBipartiteStrategy> ClassicalValue(
    const TwoProverGame<double>&);

ValueResult<Rational, MultiRoundWitness> MultiRoundValue(const MultiRoundGame<Rational>& game) {
  RequireValid(game, "multi-round game");
  const int q = game.q_count;
  const int a = game.a_count;
  const int r = game.rounds;
  // u holds U_k over (code of q_[1,k]) * A^k + code of a_[1,k].
  std::vector<Rational> u(game.predicate.size());
  for (std::int64_t qc = 0; qc < game.QuestionTuples(); ++qc) {
    if (game.pi[qc] == 0) continue;
    for (std::int64_t ac = 0; ac < game.AnswerTuples(); ++ac) {
      const Rational& acc = game.Accept(qc, ac);
      if (acc != 0) u[qc * game.AnswerTuples() + ac] = game.pi[qc] * acc;
    }
  }
  std::vector<std::vector<int>> answers(r);
  Rational value;
  for (int k = r; k >= 1; --k) {
    const std::int64_t histories = IntPow(q, k) * IntPow(a, k - 1);
    std::vector<Rational> best(histories);
    answers[k - 1].assign(histories, 0);
    for (std::int64_t h = 0; h < histories; ++h) {
      int arg = 0;
      for (int x = 1; x < a; ++x) {
        if (u[h * a + x] > u[h * a + arg]) arg = x;
      }
      answers[k - 1][h] = arg;
      best[h] = u[h * a + arg];
    }
    if (k == 1) {
      for (const Rational& b : best) value += b;
      break;
    }
    // U_{k-1}(q_[1,k-1], a_[1,k-1]) = sum over q_k of best(q_[1,k], a_[1,k-1]).
    const std::int64_t ak1 = IntPow(a, k - 1);
    std::vector<Rational> prev(IntPow(q, k - 1) * ak1);
    for (std::int64_t qc = 0; qc < IntPow(q, k); ++qc) {
      const std::int64_t parent = qc / q;
      for (std::int64_t ac = 0; ac < ak1; ++ac) {
        const Rational& b = best[qc * ak1 + ac];
        if (b != 0) prev[parent * ak1 + ac] += b;
      }
    }
    u = std::move(prev);
  }
  ValueResult<Rational, MultiRoundWitness> result;
  result.value = value;
  result.method = "backward-induction";
  result.exact = true;
  result.witness.strategy = DeterministicMultiRound(q, a, r, answers);
  result.witness.answers = std::move(answers);
  return result;
}

namespace {

template <typename T>
std::pair<T, std::int64_t> BestProof(const std::vector<T>& w, const PcpGame<Rational>& game) {
  const int a = game.alphabet;
  const int n = game.positions;
  const std::int64_t total = IntPow(a, n);
  const int a3 = game.AnswerTriples();
  std::vector<std::array<std::int64_t, 3>> place(game.triples.size());
  std::vector<std::size_t> live;
  for (std::size_t t = 0; t < game.triples.size(); ++t) {
    if (game.pi[t] == 0) continue;
    live.push_back(t);
    for (int s = 0; s < 3; ++s) place[t][s] = IntPow(a, n - 1 - game.triples[t][s]);
  }
  T best{};
  std::int64_t arg = -1;
  for (std::int64_t code = 0; code < total; ++code) {
    T value(0);
    for (std::size_t t : live) {
      int letters = 0;
      for (int s = 0; s < 3; ++s) letters = letters * a + static_cast<int>((code / place[t][s]) % a);
      value += w[t * a3 + letters];
    }
    if (arg < 0 || value > best) {
      best = value;
      arg = code;
    }
  }
  return {best, arg};
}

}  // namespace

ValueResult<Rational, std::vector<int>> PcpValue(const PcpGame<Rational>& game) {
  RequireValid(game, "three-query game");
  CheckTableSize(SaturatingPower(game.alphabet, game.positions), "proof enumeration");
  const int a3 = game.AnswerTriples();
  std::vector<Rational> w(game.predicate.size());
  for (std::size_t t = 0; t < game.triples.size(); ++t) {
    if (game.pi[t] == 0) continue;
    for (int c = 0; c < a3; ++c) {
      if (game.Accept(t, c) != 0) w[t * a3 + c] = game.pi[t] * game.Accept(t, c);
    }
  }
  ScaledWeights scaled = ScaleToIntegers(w);
  ValueResult<Rational, std::vector<int>> result;
  std::int64_t arg;
  if (scaled.fits_int64) {
    auto [best, code] = BestProof(ToInt64(scaled.values), game);
    result.value = Rational(mpz_class(static_cast<long>(best)), scaled.scale);
    arg = code;
  } else {
    auto [best, code] = BestProof(scaled.values, game);
    result.value = Rational(best, scaled.scale);
    arg = code;
  }
  result.value.canonicalize();
  result.witness = DecodeTuple(arg, game.alphabet, game.positions);
  result.method = "proof-enumeration";
  result.exact = true;
  return result;
}

namespace {

struct NsProgram {
  LinearProgram lp;
  std::vector<std::pair<int, int>> pairs;  // support question pairs
  std::vector<int> m1_offset;              // -1 when q1 never asked
  std::vector<int> m2_offset;
  int block = 0;                           // a1 * a2
};

NsProgram BuildNsProgram(const TwoProverGame<Rational>& g, const std::vector<Rational>& weights) {
  NsProgram p;
  const int a1 = g.a1_count;
  const int a2 = g.a2_count;
  p.block = a1 * a2;
  p.m1_offset.assign(g.q1_count, -1);
  p.m2_offset.assign(g.q2_count, -1);
  for (int i = 0; i < g.q1_count; ++i) {
    for (int j = 0; j < g.q2_count; ++j) {
      if (g.Pi(i, j) != 0) p.pairs.push_back({i, j});
    }
  }
  int vars = static_cast<int>(p.pairs.size()) * p.block;
  for (const auto& [i, j] : p.pairs) {
    if (p.m1_offset[i] < 0) {
      p.m1_offset[i] = vars;
      vars += a1;
    }
  }
  for (const auto& [i, j] : p.pairs) {
    if (p.m2_offset[j] < 0) {
      p.m2_offset[j] = vars;
      vars += a2;
    }
  }
  const std::uint64_t constraints =
      p.pairs.size() * (1 + static_cast<std::uint64_t>(a1) + a2);
  const SizeLimits& limits = DefaultLimits();
  if (static_cast<std::uint64_t>(vars) > limits.lp_max_variables ||
      constraints > limits.lp_max_constraints) {
    throw SizeGuardError("no-signaling LP needs " + std::to_string(vars) + " variables and " +
                         std::to_string(constraints) + " constraints; the size guard allows " +
                         std::to_string(limits.lp_max_variables) + " and " +
                         std::to_string(limits.lp_max_constraints) +
                         " (override with TWOPROVER_LP_MAX_VARIABLES / "
                         "TWOPROVER_LP_MAX_CONSTRAINTS)");
  }
  p.lp = LinearProgram(vars);
  for (std::size_t s = 0; s < p.pairs.size(); ++s) {
    const auto [i, j] = p.pairs[s];
    const int base = static_cast<int>(s) * p.block;
    for (int x = 0; x < a1; ++x) {
      for (int y = 0; y < a2; ++y) {
        p.lp.objective[base + x * a2 + y] = weights[g.PredicateIndex(i, j, x, y)];
      }
    }
    std::vector<std::pair<int, Rational>> terms;
    for (int k = 0; k < p.block; ++k) terms.push_back({base + k, Rational(1)});
    p.lp.AddConstraint(terms, Relation::kEqual, Rational(1));
    for (int x = 0; x < a1; ++x) {
      terms.clear();
      for (int y = 0; y < a2; ++y) terms.push_back({base + x * a2 + y, Rational(1)});
      terms.push_back({p.m1_offset[i] + x, Rational(-1)});
      p.lp.AddConstraint(terms, Relation::kEqual, Rational(0));
    }
    for (int y = 0; y < a2; ++y) {
      terms.clear();
      for (int x = 0; x < a1; ++x) terms.push_back({base + x * a2 + y, Rational(1)});
      terms.push_back({p.m2_offset[j] + y, Rational(-1)});
      p.lp.AddConstraint(terms, Relation::kEqual, Rational(0));
    }
  }
  return p;
}

BipartiteStrategy<Rational> ExtractNsStrategy(const TwoProverGame<Rational>& g,
                                              const NsProgram& p, const LpSolution& sol) {
  const int a1 = g.a1_count;
  const int a2 = g.a2_count;
  auto table = BipartiteStrategy<Rational>::Zero(g.q1_count, g.q2_count, a1, a2);
  auto marginal1 = [&](int i, int x) -> Rational {
    if (p.m1_offset[i] < 0) return x == 0 ? Rational(1) : Rational(0);
    return sol.primal[p.m1_offset[i] + x];
  };
  auto marginal2 = [&](int j, int y) -> Rational {
    if (p.m2_offset[j] < 0) return y == 0 ? Rational(1) : Rational(0);
    return sol.primal[p.m2_offset[j] + y];
  };
  std::vector<bool> on_support(static_cast<std::size_t>(g.q1_count) * g.q2_count, false);
  for (std::size_t s = 0; s < p.pairs.size(); ++s) {
    const auto [i, j] = p.pairs[s];
    on_support[static_cast<std::size_t>(i) * g.q2_count + j] = true;
    for (int k = 0; k < p.block; ++k) {
      table.table[table.Index(i, j, 0, 0) + k] = sol.primal[s * p.block + k];
    }
  }
  for (int i = 0; i < g.q1_count; ++i) {
    for (int j = 0; j < g.q2_count; ++j) {
      if (on_support[static_cast<std::size_t>(i) * g.q2_count + j]) continue;
      for (int x = 0; x < a1; ++x) {
        Rational m = marginal1(i, x);
        if (m == 0) continue;
        for (int y = 0; y < a2; ++y) table(i, j, x, y) = m * marginal2(j, y);
      }
    }
  }
  return table;
}

}  // namespace

ValueResult<Rational, NoSignalingWitness> NoSignalingValue(const TwoProverGame<Rational>& game) {
  RequireValid(game, "game");
  std::vector<Rational> weights(game.predicate.size());
  for (int i = 0; i < game.q1_count; ++i) {
    for (int j = 0; j < game.q2_count; ++j) {
      const Rational& p = game.Pi(i, j);
      if (p == 0) continue;
      const std::size_t base = game.PredicateIndex(i, j, 0, 0);
      for (int k = 0; k < game.a1_count * game.a2_count; ++k) {
        if (game.predicate[base + k] != 0) weights[base + k] = p * game.predicate[base + k];
      }
    }
  }
  NsProgram program = BuildNsProgram(game, weights);
  LpSolution sol = SolveLp(program.lp);
  if (sol.status != LpStatus::kOptimal) {
    throw Error(std::string("no-signaling LP ended ") + LpStatusName(sol.status));
  }
  ValueResult<Rational, NoSignalingWitness> result;
  result.value = sol.value;
  result.method = "exact-simplex";
  result.exact = true;
  result.witness.strategy = ExtractNsStrategy(game, program, sol);
  result.witness.lp_variables = program.lp.num_variables;
  result.witness.lp_constraints = static_cast<int>(program.lp.constraints.size());
  result.witness.lp = std::move(sol);
  return result;
}

BipartiteStrategy<Rational> NoSignalingVertex(const TwoProverGame<Rational>& game,
                                              const std::vector<Rational>& weights) {
  RequireValid(game, "game");
  if (weights.size() != game.predicate.size()) {
    throw DimensionError("objective weights must be indexed like the predicate");
  }
  NsProgram program = BuildNsProgram(game, weights);
  LpSolution sol = SolveLp(program.lp);
  if (sol.status != LpStatus::kOptimal) {
    throw Error(std::string("no-signaling vertex LP ended ") + LpStatusName(sol.status));
  }
  return ExtractNsStrategy(game, program, sol);
}

}  // namespace twoprover

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

#include "twoprover/no_signaling_rounding.h"

#include "twoprover/errors.h"

namespace twoprover {
namespace {

std::string Digits(std::int64_t code, int base, int length) {
  std::string out;
  for (int d : DecodeTuple(code, base, length)) out += std::to_string(d);
  return out;
}

std::vector<Rational> PrefixMarginal(const std::vector<Rational>& dist, int a, int r, int k) {
  std::vector<Rational> out(IntPow(a, k));
  const std::int64_t tail = IntPow(a, r - k);
  for (std::size_t c = 0; c < dist.size(); ++c) {
    if (dist[c] != 0) out[c / tail] += dist[c];
  }
  return out;
}

}  // namespace

std::int64_t NsMarginalTables::QuestionPrefix(std::int64_t q_code, int k) const {
  return q_code / IntPow(q_count, rounds - k);
}

std::int64_t NsMarginalTables::AnswerPrefix(std::int64_t a_code, int k) const {
  return a_code / IntPow(a_count, rounds - k);
}

NsMarginalTables NsDecompose(const MultiRoundGame<Rational>& game,
                             const MultiRoundOracularization& o,
                             const BipartiteStrategy<Rational>& theta) {
  const TwoProverGame<Rational>& gp = o.game;
  if (theta.q1_count != gp.q1_count || theta.q2_count != gp.q2_count ||
      theta.a1_count != gp.a1_count || theta.a2_count != gp.a2_count) {
    throw DimensionError("strategy shape does not match the oracularized game");
  }
  RequireValid(theta, "strategy");
  auto ns = CheckNoSignaling(theta, Rational(0));
  if (!ns.no_signaling) {
    throw PreconditionError("strategy signals (marginal discrepancy " + ToString(ns.max_violation) +
                            ")");
  }
  const int q = game.q_count;
  const int a = game.a_count;
  const int r = game.rounds;

  NsMarginalTables t;
  t.q_count = q;
  t.a_count = a;
  t.rounds = r;
  t.questions = o.q1_codes;
  for (std::int64_t code : t.questions) t.question_weight.push_back(game.pi[code]);
  const int n = static_cast<int>(t.questions.size());

  // Wrong-length answers are outside the model.
  for (int i = 0; i < gp.q1_count; ++i) {
    for (int j = 0; j < gp.q2_count; ++j) {
      const int k = o.question_prefixes.LengthOf(o.q2_prefixes[j]);
      for (int x = 0; x < gp.a1_count; ++x) {
        for (int y = 0; y < gp.a2_count; ++y) {
          if (theta(i, j, x, y) != 0 && o.answer_prefixes.LengthOf(y) != k) {
            throw PreconditionError("second prover answers with the wrong length at question " +
                                    std::to_string(j));
          }
        }
      }
    }
  }

  auto prover2_question = [&](std::int64_t q_code, int k) {
    return o.q2_of_prefix[o.question_prefixes.Encode(k, q_code / IntPow(q, r - k))];
  };

  t.alpha.resize(n);
  t.alpha_prefix.resize(n);
  t.eps_cons_qk.assign(n, std::vector<Rational>(r));
  t.eps_cons_q.resize(n);
  t.eps_round.assign(r, Rational(0));
  for (int s = 0; s < n; ++s) {
    const std::int64_t code = t.questions[s];
    for (int k = 1; k <= r; ++k) {
      const int j = prover2_question(code, k);
      std::vector<Rational> alpha(gp.a1_count);
      Rational mismatch, fail;
      for (int x = 0; x < gp.a1_count; ++x) {
        const Rational& accept = game.Accept(code, x);
        for (int y = 0; y < gp.a2_count; ++y) {
          const Rational& p = theta(s, j, x, y);
          if (p == 0) continue;
          alpha[x] += p;
          const bool agree = o.answer_prefixes.Decode(y).second == x / IntPow(a, r - k);
          if (!agree) mismatch += p;
          fail += p * (1 - (agree ? accept : Rational(0)));
        }
      }
      if (k == 1) {
        t.alpha[s] = alpha;
      } else if (alpha != t.alpha[s]) {
        throw PreconditionError("first-prover marginal depends on the round checked");
      }
      t.eps_cons_qk[s][k - 1] = mismatch;
      t.eps_round[k - 1] += t.question_weight[s] * fail;
    }
    for (int k = 1; k <= r; ++k) {
      t.alpha_prefix[s].push_back(PrefixMarginal(t.alpha[s], a, r, k));
    }
    Rational sum;
    for (const Rational& e : t.eps_cons_qk[s]) sum += e;
    t.eps_cons_q[s] = sum / r;
    t.eps_cons += t.question_weight[s] * t.eps_cons_q[s];
    Rational sim;
    for (int x = 0; x < gp.a1_count; ++x) {
      if (t.alpha[s][x] != 0) sim += t.alpha[s][x] * (1 - game.Accept(code, x));
    }
    t.eps_sim += t.question_weight[s] * sim;
  }
  for (const Rational& e : t.eps_round) t.eps += e;
  t.eps /= r;

  // beta from the smallest supported extension; every other extension must
  // agree.
  t.beta.assign(o.question_prefixes.size(), {});
  for (int s = 0; s < n; ++s) {
    const std::int64_t code = t.questions[s];
    for (int k = 1; k <= r; ++k) {
      const int j = prover2_question(code, k);
      std::vector<Rational> beta(IntPow(a, k));
      for (int x = 0; x < gp.a1_count; ++x) {
        for (int y = 0; y < gp.a2_count; ++y) {
          const Rational& p = theta(s, j, x, y);
          if (p != 0) beta[o.answer_prefixes.Decode(y).second] += p;
        }
      }
      auto& slot = t.beta[o.q2_prefixes[j]];
      if (slot.empty()) {
        slot = std::move(beta);
      } else if (slot != beta) {
        throw PreconditionError("second-prover marginal at prefix " +
                                Digits(code / IntPow(q, r - k), q, k) +
                                " depends on the question suffix");
      }
    }
  }
  return t;
}

MultiRoundStrategy<Rational> RoundNoSignaling(const NsMarginalTables& t) {
  const int q = t.q_count;
  const int a = t.a_count;
  const PrefixIndex prefixes(q, t.rounds);
  auto s = MultiRoundStrategy<Rational>::Zero(q, a, t.rounds);
  const Rational uniform(1, a);
  for (int k = 1; k <= t.rounds; ++k) {
    for (std::int64_t qp = 0; qp < IntPow(q, k); ++qp) {
      const std::vector<Rational>& beta = t.beta[prefixes.Encode(k, qp)];
      for (std::int64_t ap = 0; ap < IntPow(a, k - 1); ++ap) {
        Rational denom;
        if (!beta.empty()) {
          for (int x = 0; x < a; ++x) denom += beta[ap * a + x];
        }
        for (int x = 0; x < a; ++x) {
          s.At(k, qp, ap, x) = denom == 0 ? uniform : beta[ap * a + x] / denom;
        }
      }
    }
  }
  return s;
}

HybridFamily BuildHybrids(const NsMarginalTables& t, const MultiRoundStrategy<Rational>& rounded,
                          const MultiRoundGame<Rational>& game) {
  const int r = t.rounds;
  const int a = t.a_count;
  const PrefixIndex prefixes(t.q_count, r);
  const std::int64_t answers = IntPow(a, r);
  HybridFamily out;
  out.h.assign(r, std::vector<std::vector<Rational>>(t.questions.size()));
  out.p.assign(r, Rational(0));
  for (int k = 1; k <= r; ++k) {
    for (std::size_t s = 0; s < t.questions.size(); ++s) {
      const std::int64_t code = t.questions[s];
      const std::vector<Rational>& beta = t.beta[prefixes.Encode(k, t.QuestionPrefix(code, k))];
      std::vector<Rational>& h = out.h[k - 1][s];
      h.assign(answers, Rational(0));
      for (std::int64_t ac = 0; ac < answers; ++ac) {
        Rational v = beta[t.AnswerPrefix(ac, k)];
        for (int i = k + 1; i <= r && v != 0; ++i) {
          v *= rounded.At(i, t.QuestionPrefix(code, i), t.AnswerPrefix(ac, i - 1),
                          static_cast<int>(t.AnswerPrefix(ac, i) % a));
        }
        h[ac] = v;
        if (v != 0) out.p[k - 1] += t.question_weight[s] * v * game.Accept(code, ac);
      }
    }
  }
  return out;
}

NsRoundingRun RunNsRounding(const MultiRoundGame<Rational>& game,
                            const MultiRoundOracularization& o,
                            const BipartiteStrategy<Rational>& theta, const Rational& w,
                            const std::string& label) {
  NsRoundingRun run;
  run.tables = NsDecompose(game, o, theta);
  run.rounded = RoundNoSignaling(run.tables);
  run.hybrids = BuildHybrids(run.tables, run.rounded, game);
  const NsMarginalTables& t = run.tables;
  const int r = t.rounds;
  InequalityReport& rep = run.report;
  const std::string pre = label.empty() ? "" : label + " ";
  auto qname = [&](std::size_t s) { return pre + "q=" + Digits(t.questions[s], t.q_count, r); };
  const PrefixIndex prefixes(t.q_count, r);

  for (std::size_t s = 0; s < t.questions.size(); ++s) {
    for (int k = 1; k <= r; ++k) {
      const auto& beta = t.beta[prefixes.Encode(k, t.QuestionPrefix(t.questions[s], k))];
      rep.AddExact("marginal-closeness", qname(s) + " k=" + std::to_string(k),
                   StatisticalDifference(t.alpha_prefix[s][k - 1], beta), t.eps_cons_qk[s][k - 1]);
    }
    for (int k = 2; k <= r; ++k) {
      rep.AddExact("hybrid-step", qname(s) + " k=" + std::to_string(k),
                   StatisticalDifference(run.hybrids.h[k - 2][s], run.hybrids.h[k - 1][s]),
                   t.eps_cons_qk[s][k - 2] + t.eps_cons_qk[s][k - 1]);
    }
  }
  const Rational& p1 = run.hybrids.p.front();
  const Rational& pr = run.hybrids.p.back();
  rep.AddExact("hybrid-chain", pre + "p_r - p_1", pr - p1, 2 * r * t.eps_cons);
  rep.AddExact("rounded-below-value", pre + "p_1", p1, w);
  rep.AddExact("last-hybrid", pre + "1 - eps(r)", 1 - t.eps_round.back(), pr);
  rep.AddExact("cons-below-eps", pre + "eps_cons", t.eps_cons, t.eps);
  rep.AddExact("sim-below-eps", pre + "eps_sim", t.eps_sim, t.eps);
  rep.AddExact("soundness", pre + "(1 - w)/(3r)", (1 - w) / (3 * r), t.eps);

  // Definitional identities, recorded as |difference| <= 0.
  auto identity = [&](const std::string& name, const Rational& x, const Rational& y) {
    rep.AddExact(name, pre + "|difference|", abs(Rational(x - y)), Rational(0));
  };
  identity("identity-eps", t.eps, 1 - EvalTwoProver(o.game, theta));
  identity("identity-eps-cons", t.eps_cons, 1 - EvalTwoProver(o.consistency_only, theta));
  identity("identity-eps-sim", t.eps_sim, 1 - EvalTwoProver(o.simulation_only, theta));
  identity("identity-p1", p1, EvalMultiRound(game, run.rounded));
  return run;
}

}  // namespace twoprover

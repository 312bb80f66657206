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

#include "twoprover/verify.h"

#include <cmath>
#include <functional>

#include "twoprover/commuting_rounding.h"
#include "twoprover/errors.h"
#include "twoprover/no_signaling_rounding.h"
#include "twoprover/parallel.h"
#include "twoprover/random_games.h"
#include "twoprover/transforms.h"
#include "twoprover/values.h"

namespace twoprover {
namespace {

std::string SampleName(int i) { return "s" + std::to_string(i); }

int PositionsFor(const VerifyOptions& o, int sample) {
  return o.positions > 0 ? o.positions : 3 + sample % 2;
}

RandomGameOptions GameOptions(const VerifyOptions& opt) {
  RandomGameOptions g;
  g.accept_density = opt.accept_density;
  return g;
}

InequalityReport LemmaWns(const VerifyOptions& opt, int i) {
  std::mt19937_64 rng = SampleRng(opt.seed, i);
  auto g = RandomMultiRoundGame(opt.questions, opt.answers, opt.rounds, rng, GameOptions(opt));
  const Rational w = MultiRoundValue(g).value;
  auto o = OracularizeMultiRound(g);
  const Rational ns = NoSignalingValue(o.game).value;
  InequalityReport rep;
  rep.AddExact("lemma-wns", SampleName(i) + " w_ns", ns, 1 - (1 - w) / (3 * g.rounds));
  return rep;
}

InequalityReport LemmaGame(const VerifyOptions& opt, int i) {
  std::mt19937_64 rng = SampleRng(opt.seed, i);
  auto g = RandomPcpGame(PositionsFor(opt, i), opt.alphabet, rng, GameOptions(opt));
  const Rational w = PcpValue(g).value;
  auto o = OracularizePcpDummy(g);
  SeeSawOptions ss;
  ss.dim1 = ss.dim2 = opt.dim;
  ss.restarts = opt.restarts;
  ss.max_iterations = 200;
  ss.seed = opt.seed * 1000003 + i;
  ss.threads = 1;
  const double elb = EntangledLowerBound(o.game, ss).value;
  const Rational classical = ClassicalValue(o.game).value;
  int queried = 0;
  for (const Rational& p : o.position_marginal) queried += p > 0;
  const double c = 1 / std::pow(1 + 15 * std::sqrt(2.0), 2);
  const double wd = w.get_d();
  InequalityReport rep;
  rep.AddFloat("lemma-game", SampleName(i) + " entangled lb", elb,
               1 - c * (1 - wd) * (1 - wd) / (queried * queried), 1e-6);
  rep.AddFloat("classical-below-entangled", SampleName(i) + " classical", classical.get_d(), elb,
               1e-9);
  rep.AddExact("honest-completeness", SampleName(i) + " w", w, classical);
  return rep;
}

InequalityReport NsClaims(const VerifyOptions& opt, int i) {
  std::mt19937_64 rng = SampleRng(opt.seed, i);
  auto g = RandomMultiRoundGame(opt.questions, opt.answers, opt.rounds, rng, GameOptions(opt));
  const Rational w = MultiRoundValue(g).value;
  auto o = OracularizeMultiRound(g);
  InequalityReport rep;
  auto run = [&](const BipartiteStrategy<Rational>& theta, const std::string& name) {
    auto canonical = CanonicalizeSecondProverLengths(o, theta);
    rep.Append(RunNsRounding(g, o, canonical, w, SampleName(i) + " " + name).report);
  };
  run(NoSignalingValue(o.game).witness.strategy, "lp");
  for (int k = 0; k < opt.strategies; ++k) {
    if (k % 2 == 0) {
      run(RandomProductStrategy(o.game.q1_count, o.game.q2_count, o.game.a1_count,
                                o.game.a2_count, rng),
          "product" + std::to_string(k));
    } else {
      run(RandomNoSignalingStrategy(o.game, rng), "vertex" + std::to_string(k));
    }
  }
  return rep;
}

struct ComSample {
  PcpGame<Rational> game;
  DummyOracularization o;
  QuantumStrategy strategy;
  ComRoundingTables tables;
};

ComSample DrawComSample(const VerifyOptions& opt, int i, std::mt19937_64& rng) {
  ComSample s;
  s.game = RandomPcpGame(PositionsFor(opt, i), opt.alphabet, rng, GameOptions(opt));
  s.o = OracularizePcpDummy(s.game);
  QuantumStrategy raw =
      RandomProjectiveStrategy(opt.dim, opt.dim, s.o.game.q1_count, s.o.game.a1_count,
                               s.o.game.q2_count, s.o.game.a2_count, rng);
  s.strategy = SymmetrizeSecondProver(raw, s.o.q2_pairs, s.o.alphabet);
  s.tables = ComDecompose(s.game, s.o, s.strategy);
  return s;
}

void AddSelections(const ComRoundingTables& t, const VerifyOptions& opt, int i,
                   std::mt19937_64& rng, InequalityReport& rep) {
  std::uniform_int_distribution<int> pick(0, t.queried() - 1);
  for (int m = 1; m <= opt.max_sequence; ++m) {
    std::vector<int> seq(m);
    for (int& q : seq) q = t.order[pick(rng)];
    for (int k = 1; k <= m; ++k) {
      SelectionValues v = ClaimSelection(t, seq, k);
      std::string inst = SampleName(i) + " t=";
      for (int j = 0; j < m; ++j) inst += (j ? "," : "") + std::to_string(seq[j]);
      rep.AddFloat("claim-selection", inst + " i=" + std::to_string(k), v.lhs, v.rhs,
                   kRoundingTolerance);
    }
  }
}

InequalityReport ComClaims(const VerifyOptions& opt, int i) {
  std::mt19937_64 rng = SampleRng(opt.seed, i);
  ComSample s = DrawComSample(opt, i, rng);
  const Rational w = PcpValue(s.game).value;
  RoundedProof rounded = RoundCommuting(s.tables);
  InequalityReport rep =
      VerifyComClaims(s.game, s.o, s.strategy, s.tables, rounded, w, SampleName(i));
  AddSelections(s.tables, opt, i, rng, rep);
  return rep;
}

InequalityReport ClaimSelectionSuite(const VerifyOptions& opt, int i) {
  std::mt19937_64 rng = SampleRng(opt.seed, i);
  ComSample s = DrawComSample(opt, i, rng);
  InequalityReport rep;
  AddSelections(s.tables, opt, i, rng, rep);
  return rep;
}

InequalityReport LemmaDistanceSuite(const VerifyOptions& opt, int i) {
  std::mt19937_64 rng = SampleRng(opt.seed, i);
  std::uniform_int_distribution<int> outcomes(2, 3);
  const int a = outcomes(rng);
  Povm m = RandomPovm(opt.dim, a, rng);
  Povm n = RandomPovm(opt.dim, a, rng);
  Vector phi = RandomState(opt.dim * opt.dim, rng);
  LemmaDistanceValues v = LemmaDistanceBipartite(m, n, phi);
  InequalityReport rep;
  rep.AddFloat("distance-first", SampleName(i), v.d_squared, v.middle, 1e-8);
  rep.AddFloat("distance-second", SampleName(i), v.middle, v.two_p, 1e-8);
  return rep;
}

using SuiteFn = InequalityReport (*)(const VerifyOptions&, int);

SuiteFn Lookup(const std::string& suite) {
  if (suite == "lemma-wns") return LemmaWns;
  if (suite == "lemma-game") return LemmaGame;
  if (suite == "ns-claims") return NsClaims;
  if (suite == "com-claims") return ComClaims;
  if (suite == "lemma-distance") return LemmaDistanceSuite;
  if (suite == "claim-selection") return ClaimSelectionSuite;
  return nullptr;
}

}  // namespace

std::vector<std::string> SuiteNames() {
  return {"lemma-wns", "lemma-game", "ns-claims", "com-claims", "lemma-distance",
          "claim-selection"};
}

InequalityReport RunSuite(const std::string& suite, const VerifyOptions& options) {
  SuiteFn fn = Lookup(suite);
  if (!fn) throw PreconditionError("unknown verification suite '" + suite + "'");
  if (options.samples < 1) throw PreconditionError("samples must be positive");
  std::function<InequalityReport(int)> sample = [&](int i) { return fn(options, i); };
  std::vector<InequalityReport> parts = ParallelMap(options.samples, sample, options.threads);
  InequalityReport out(suite);
  for (const InequalityReport& p : parts) out.Append(p);
  if (options.perturb != 0) out.Perturb(options.perturb);
  return out;
}

}  // namespace twoprover

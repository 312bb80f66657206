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

#include <benchmark/benchmark.h>

#include "twoprover/catalog.h"
#include "twoprover/no_signaling_rounding.h"
#include "twoprover/random_games.h"
#include "twoprover/transforms.h"
#include "twoprover/values.h"
#include "twoprover/verify.h"

namespace twoprover {
namespace {

void BM_ClassicalMagicSquare(benchmark::State& state) {
  const auto g = MagicSquare();
  for (auto _ : state) benchmark::DoNotOptimize(ClassicalValue(g).value);
}
BENCHMARK(BM_ClassicalMagicSquare);

void BM_NoSignalingChsh(benchmark::State& state) {
  const auto g = ParallelRepeat(Chsh(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(NoSignalingValue(g).value);
}
BENCHMARK(BM_NoSignalingChsh)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_SeeSawChsh(benchmark::State& state) {
  const auto g = Chsh();
  SeeSawOptions options;
  options.restarts = static_cast<int>(state.range(0));
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(EntangledLowerBound(g, options).value);
}
BENCHMARK(BM_SeeSawChsh)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SeeSawMagicSquare(benchmark::State& state) {
  const auto g = MagicSquare();
  SeeSawOptions options;
  options.dim1 = options.dim2 = 4;
  options.restarts = 1;
  options.classical_warm_start = false;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(EntangledLowerBound(g, options).value);
}
BENCHMARK(BM_SeeSawMagicSquare)->Unit(benchmark::kMillisecond);

void BM_NsRoundingRun(benchmark::State& state) {
  std::mt19937_64 rng = SampleRng(1, 0);
  const auto g = RandomMultiRoundGame(2, 2, static_cast<int>(state.range(0)), rng);
  const auto o = OracularizeMultiRound(g);
  const Rational w = MultiRoundValue(g).value;
  const auto theta = CanonicalizeSecondProverLengths(o, NoSignalingValue(o.game).witness.strategy);
  for (auto _ : state) benchmark::DoNotOptimize(RunNsRounding(g, o, theta, w).report.AllHold());
}
BENCHMARK(BM_NsRoundingRun)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_VerifySuite(benchmark::State& state, const char* suite) {
  VerifyOptions options;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(RunSuite(suite, options).AllHold());
}
BENCHMARK_CAPTURE(BM_VerifySuite, com_claims, "com-claims")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifySuite, ns_claims, "ns-claims")->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace twoprover

BENCHMARK_MAIN();

// Copyright 2026 The fairdire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "fairdire/dire_solver.h"
#include "fairdire/envyfree.h"
#include "fairdire/rules.h"
#include "fairdire/synthgen.h"

namespace fairdire {
namespace {

struct Instance {
  Election election;
  ConstraintSet constraints;
};

Instance Make(int m, int n, int k, uint64_t seed) {
  GenConfig cfg;
  cfg.m = m;
  cfg.n = n;
  cfg.k = k;
  cfg.seed = seed;
  Election e = GenerateElection(cfg);
  ConstraintSet cs = DefaultConstraints(e, k);
  return {std::move(e), std::move(cs)};
}

void BM_SolveDrcwd(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Instance inst = Make(m, 100, 6, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        SolveDrcwd(inst.election, inst.constraints, Rule::kKBorda, 6));
  }
}
BENCHMARK(BM_SolveDrcwd)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_BetaCcOptimal(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Instance inst = Make(m, 50, 3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(OptimalCommittee(inst.election, Rule::kBetaCC, 3));
  }
}
BENCHMARK(BM_BetaCcOptimal)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_FindEnvyfreeDire(benchmark::State& state) {
  const Instance inst = Make(14, 30, 4, 3);
  const Notion notion = Notion::Fec(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(FindEnvyfreeDire(inst.election, inst.constraints,
                                              Rule::kKBorda, 4, notion,
                                              Scope::kGlobal));
  }
}
BENCHMARK(BM_FindEnvyfreeDire)->Arg(0)->Arg(1)->Arg(3)
    ->Unit(benchmark::kMillisecond);

void BM_SampleMallows(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Ranking sigma(m);
  for (int i = 0; i < m; ++i) sigma[i] = i;
  Rng rng = MakeRng(4, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleMallows(sigma, 0.5, rng));
  }
}
BENCHMARK(BM_SampleMallows)->Arg(10)->Arg(50)->Arg(200);

}  // namespace
}  // namespace fairdire

BENCHMARK_MAIN();

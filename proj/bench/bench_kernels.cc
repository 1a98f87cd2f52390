// Copyright 2026 The econgame Authors
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

// Serial reference vs OpenMP kernels: episode rollouts and cell evaluation.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "econgame/core/rng.h"
#include "econgame/egta/cell_eval.h"
#include "econgame/egta/game.h"
#include "econgame/env/scenario.h"
#include "econgame/rl/econ_env.h"
#include "econgame/rl/oracle.h"
#include "econgame/rl/rollout.h"

namespace econgame {
namespace {

struct Fixture {
  EnvFactory factory;
  std::vector<PolicyParams> policies;  // one per role
};

const Fixture& Economy() {
  static const Fixture f = [] {
    Fixture out;
    out.factory =
        MakeEconEnvFactory(HeterogeneousSkillsScenario(), {64, 64});
    const auto env = out.factory();
    for (int r = 0; r < static_cast<int>(env->roles().size()); ++r) {
      out.policies.push_back(InitialRolePolicy(env->roles()[r], r, 1));
    }
    return out;
  }();
  return f;
}

std::vector<EpisodeJob> Jobs(int n) {
  const Fixture& f = Economy();
  std::vector<EpisodeJob> jobs;
  for (int e = 0; e < n; ++e) {
    EpisodeJob job{MixKey({7, static_cast<std::uint64_t>(e)}), {}};
    for (const auto& p : f.policies) job.role_policies.push_back(&p);
    jobs.push_back(job);
  }
  return jobs;
}

template <bool kParallel>
void BM_Rollouts(benchmark::State& state) {
  const auto jobs = Jobs(static_cast<int>(state.range(0)));
  RolloutOptions opt;
  for (auto _ : state) {
    auto out = kParallel
                   ? CollectEpisodesParallel(Economy().factory, jobs, opt)
                   : CollectEpisodesSerial(Economy().factory, jobs, opt);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Rollouts<false>)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rollouts<true>)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

// Two strategies per role; every cell of the 2^4 tensor, `runs` each.
template <bool kParallel>
void BM_CellEvaluation(benchmark::State& state) {
  const Fixture& f = Economy();
  const auto env = f.factory();
  const int n = static_cast<int>(env->roles().size());
  CellEvalOptions opt;
  opt.runs = static_cast<int>(state.range(0));
  opt.parallel = kParallel;
  for (auto _ : state) {
    state.PauseTiming();
    EmpiricalGame game(n);
    std::vector<std::vector<Strategy>> sets(n);
    for (int r = 0; r < n; ++r) {
      sets[r].push_back({"a", f.policies[r]});
      sets[r].push_back({"b", InitialRolePolicy(env->roles()[r], r, 2)});
    }
    game.AddStrategies(sets);
    const auto cells = game.PendingCells();
    state.ResumeTiming();
    benchmark::DoNotOptimize(EvaluateCells(game, f.factory, cells, opt));
  }
  state.SetItemsProcessed(state.iterations() * 16);
}
BENCHMARK(BM_CellEvaluation<false>)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CellEvaluation<true>)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace econgame

BENCHMARK_MAIN();

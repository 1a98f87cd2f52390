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
#include "econgame/egta/cell_eval.h"

#include "econgame/core/errors.h"
#include "econgame/core/rng.h"

namespace econgame {

std::vector<double> RoleUtilities(const EpisodeRecord& episode,
                                  const std::vector<AgentSlot>& agents,
                                  int num_roles) {
  std::vector<double> sum(num_roles, 0.0);
  std::vector<int> count(num_roles, 0);
  for (std::size_t a = 0; a < agents.size(); ++a) {
    sum[agents[a].role] += episode.discounted_returns[a];
    ++count[agents[a].role];
  }
  for (int r = 0; r < num_roles; ++r) {
    if (count[r] > 0) sum[r] /= count[r];
  }
  return sum;
}

std::uint64_t CellRunSeed(std::uint64_t seed, std::span<const int> profile,
                          int run) {
  std::uint64_t key = MixKey({seed, 0x63656C6CULL});
  for (int s : profile) key = MixKey({key, static_cast<std::uint64_t>(s)});
  return MixKey({key, static_cast<std::uint64_t>(run)});
}

namespace {

std::vector<std::vector<double>> RunCells(
    const EnvFactory& factory,
    const std::vector<std::vector<const PolicyParams*>>& cell_policies,
    const std::vector<std::vector<int>>& cell_profiles,
    const CellEvalOptions& options) {
  if (options.runs < 1) {
    throw ContractViolation("cell evaluation needs runs >= 1");
  }
  const auto probe = factory();
  const auto& agents = probe->agents();
  const int n_roles = static_cast<int>(probe->roles().size());
  std::vector<EpisodeJob> jobs;
  jobs.reserve(cell_policies.size() * options.runs);
  for (std::size_t c = 0; c < cell_policies.size(); ++c) {
    if (static_cast<int>(cell_policies[c].size()) != n_roles) {
      throw ContractViolation("cell evaluation: one policy per role needed");
    }
    for (int r = 0; r < options.runs; ++r) {
      jobs.push_back({CellRunSeed(options.seed, cell_profiles[c], r),
                      cell_policies[c]});
    }
  }
  RolloutOptions rollout;
  rollout.record = false;
  rollout.deterministic = options.deterministic;
  const auto episodes =
      options.parallel ? CollectEpisodesParallel(factory, jobs, rollout)
                       : CollectEpisodesSerial(factory, jobs, rollout);
  // Reduce in run order so the sum is the same however the episodes ran.
  std::vector<std::vector<double>> out(cell_policies.size());
  for (std::size_t c = 0; c < cell_policies.size(); ++c) {
    std::vector<double> mean(n_roles, 0.0);
    for (int r = 0; r < options.runs; ++r) {
      const auto u = RoleUtilities(episodes[c * options.runs + r], agents,
                                   n_roles);
      for (int k = 0; k < n_roles; ++k) mean[k] += u[k];
    }
    for (double& v : mean) v /= options.runs;
    out[c] = std::move(mean);
  }
  return out;
}

}  // namespace

std::vector<double> EstimateUtilities(
    const EnvFactory& factory,
    std::span<const PolicyParams* const> role_policies,
    std::span<const int> profile, const CellEvalOptions& options) {
  return RunCells(factory, {{role_policies.begin(), role_policies.end()}},
                  {{profile.begin(), profile.end()}}, options)[0];
}

int EvaluateCells(EmpiricalGame& game, const EnvFactory& factory,
                  std::span<const std::size_t> cells,
                  const CellEvalOptions& options) {
  if (cells.empty()) return 0;
  std::vector<std::vector<const PolicyParams*>> policies;
  std::vector<std::vector<int>> profiles;
  for (std::size_t cell : cells) {
    if (cell >= game.num_cells()) {
      throw ContractViolation("EvaluateCells: cell out of range");
    }
    auto profile = game.CellProfile(cell);
    std::vector<const PolicyParams*> p;
    for (int i = 0; i < game.num_players(); ++i) {
      p.push_back(&game.strategies(i)[profile[i]].params);
    }
    policies.push_back(std::move(p));
    profiles.push_back(std::move(profile));
  }
  const auto utilities = RunCells(factory, policies, profiles, options);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    game.SetUtilities(cells[k], utilities[k]);
  }
  game.runs_per_cell = options.runs;
  return static_cast<int>(cells.size());
}

int ExpandEmpiricalGame(EmpiricalGame& game,
                        std::vector<std::vector<Strategy>> new_strategies,
                        const EnvFactory& factory,
                        const CellEvalOptions& options) {
  game.AddStrategies(std::move(new_strategies));
  const auto pending = game.PendingCells();
  return EvaluateCells(game, factory, pending, options);
}

}  // namespace econgame

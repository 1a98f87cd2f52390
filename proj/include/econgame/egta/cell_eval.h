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
#ifndef ECONGAME_EGTA_CELL_EVAL_H_
#define ECONGAME_EGTA_CELL_EVAL_H_

// Monte Carlo utility estimates for joint pure-strategy profiles.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "econgame/egta/game.h"
#include "econgame/rl/game_env.h"
#include "econgame/rl/rollout.h"

namespace econgame {

struct CellEvalOptions {
  int runs = 10;
  std::uint64_t seed = 0;
  bool parallel = true;
  bool deterministic = false;  // argmax actions
};

// Per-role utility of one episode: mean over the role's agents of their
// discounted returns.
std::vector<double> RoleUtilities(const EpisodeRecord& episode,
                                  const std::vector<AgentSlot>& agents,
                                  int num_roles);

// Seed of run `run` of the joint profile `profile`. Depends only on the
// strategy indices, so it is stable when the tensor grows.
std::uint64_t CellRunSeed(std::uint64_t seed, std::span<const int> profile,
                          int run);

// Mean over runs of RoleUtilities. Runs use CellRunSeed(seed, profile, r).
std::vector<double> EstimateUtilities(const EnvFactory& factory,
                                      std::span<const PolicyParams* const>
                                          role_policies,
                                      std::span<const int> profile,
                                      const CellEvalOptions& options);

// Evaluates the given cells of `game` (whose strategies must carry policy
// parameters) and stores the results. Results do not depend on
// options.parallel. Returns the number of cells evaluated.
int EvaluateCells(EmpiricalGame& game, const EnvFactory& factory,
                  std::span<const std::size_t> cells,
                  const CellEvalOptions& options);

// Appends one list of new strategies per player and evaluates exactly the
// cells that contain at least one new strategy. Returns that count.
int ExpandEmpiricalGame(EmpiricalGame& game,
                        std::vector<std::vector<Strategy>> new_strategies,
                        const EnvFactory& factory,
                        const CellEvalOptions& options);

}  // namespace econgame

#endif  // ECONGAME_EGTA_CELL_EVAL_H_

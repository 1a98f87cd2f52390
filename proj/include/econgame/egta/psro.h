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
#ifndef ECONGAME_EGTA_PSRO_H_
#define ECONGAME_EGTA_PSRO_H_

// Policy-space response oracles: grow per-role strategy sets with RL best
// responses to the current Nash meta-strategy of the empirical game.

#include <cstdint>
#include <functional>
#include <vector>

#include "econgame/egta/cell_eval.h"
#include "econgame/egta/game.h"
#include "econgame/egta/nash.h"
#include "econgame/rl/oracle.h"
#include "econgame/rl/ppo.h"

namespace econgame {

struct PsroConfig {
  int epochs = 8;
  int episodes_per_oracle = 100;
  int runs_per_cell = 10;
  int final_eval_runs = 100;
  NashConfig meta_solver;
  TrainConfig train;  // learning rates, PPO settings; episodes is ignored
  std::uint64_t seed = 0;
  bool parallel = true;
};

PsroConfig DefaultPsroConfig();
void Validate(const PsroConfig& config);

struct PsroEpochDiagnostics {
  int epoch = 0;  // 0 is the initial one-cell game
  std::vector<int> set_sizes;
  int new_cells = 0;
  long total_cells = 0;
  double solver_regret = 0.0;
  bool approximate = false;
  std::string solver_method;
  MixedStrategyProfile profile;
};

struct PsroState {
  EmpiricalGame game{1};
  MixedStrategyProfile profile;
  std::vector<PsroEpochDiagnostics> diagnostics;
  std::vector<CurvePoint> curve;

  int completed_epochs() const {
    return static_cast<int>(diagnostics.size()) - 1;
  }
};

// Called after initialization and after every epoch with the state so far.
using PsroCheckpointFn = std::function<void(const PsroState&)>;

// Starts from `resume` when it holds at least the initial epoch, otherwise
// from one random policy per role. Runs until config.epochs epochs are done.
PsroState RunPsro(const EnvFactory& factory, const PsroConfig& config,
                  const PsroCheckpointFn& checkpoint = {},
                  PsroState* resume = nullptr);

}  // namespace econgame

#endif  // ECONGAME_EGTA_PSRO_H_

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
#include "econgame/egta/psro.h"

#include "econgame/core/errors.h"
#include "econgame/core/rng.h"

namespace econgame {

PsroConfig DefaultPsroConfig() {
  PsroConfig config;
  config.train.learning_rates = PsroLearningRates();
  return config;
}

void Validate(const PsroConfig& config) {
  if (config.epochs < 0) throw ConfigError("psro.epochs", "must be >= 0");
  if (config.episodes_per_oracle < 1) {
    throw ConfigError("psro.episodes_per_oracle", "must be >= 1");
  }
  if (config.runs_per_cell < 1) {
    throw ConfigError("psro.runs_per_cell", "must be >= 1");
  }
  if (config.final_eval_runs < 1) {
    throw ConfigError("psro.final_eval_runs", "must be >= 1");
  }
  Validate(config.meta_solver);
  Validate(config.train);
}

namespace {

std::string StrategyName(const RoleSpec& role, int index) {
  return role.name + "_" + std::to_string(index);
}

}  // namespace

PsroState RunPsro(const EnvFactory& factory, const PsroConfig& config,
                  const PsroCheckpointFn& checkpoint, PsroState* resume) {
  Validate(config);
  const auto probe = factory();
  const auto& roles = probe->roles();
  const int n = static_cast<int>(roles.size());
  const CellEvalOptions eval{.runs = config.runs_per_cell,
                             .seed = config.seed,
                             .parallel = config.parallel,
                             .deterministic = false};

  PsroState state;
  if (resume != nullptr && !resume->diagnostics.empty()) {
    state = std::move(*resume);
    if (state.game.num_players() != n || !state.game.complete()) {
      throw ConsistencyError("PSRO resume state does not match environment");
    }
  } else {
    state.game = EmpiricalGame(n);
    std::vector<std::vector<Strategy>> initial(n);
    for (int r = 0; r < n; ++r) {
      initial[r].push_back({StrategyName(roles[r], 0),
                            InitialRolePolicy(roles[r], r, config.seed)});
    }
    const int cells = ExpandEmpiricalGame(state.game, std::move(initial),
                                          factory, eval);
    state.profile = UniformProfile(state.game.shape());
    state.diagnostics.push_back({0, state.game.shape(), cells,
                                 static_cast<long>(state.game.num_cells()),
                                 0.0, false, "initial", state.profile});
    if (checkpoint) checkpoint(state);
  }

  TrainConfig train = config.train;
  train.episodes = config.episodes_per_oracle;
  train.seed = config.seed;
  for (int epoch = state.completed_epochs() + 1; epoch <= config.epochs;
       ++epoch) {
    // Oracles see an immutable snapshot of the strategy sets.
    std::vector<std::vector<const PolicyParams*>> snapshot(n);
    for (int r = 0; r < n; ++r) {
      for (const Strategy& s : state.game.strategies(r)) {
        snapshot[r].push_back(&s.params);
      }
    }
    const OpponentSampler sampler(snapshot, state.profile);
    std::vector<BestResponseResult> responses(n);
    const bool outer = config.parallel && n > 1;
#pragma omp parallel for schedule(dynamic) if (outer)
    for (int r = 0; r < n; ++r) {
      responses[r] = TrainBestResponse(r, sampler, factory, train,
                                       config.seed, epoch,
                                       config.parallel && !outer);
    }
    std::vector<std::vector<Strategy>> additions(n);
    for (int r = 0; r < n; ++r) {
      const int index = static_cast<int>(state.game.strategies(r).size());
      additions[r].push_back({StrategyName(roles[r], index),
                              std::move(responses[r].policy)});
      state.curve.insert(state.curve.end(), responses[r].curve.begin(),
                         responses[r].curve.end());
    }
    const int cells = ExpandEmpiricalGame(state.game, std::move(additions),
                                          factory, eval);
    NashConfig solver = config.meta_solver;
    solver.seed = MixKey({config.seed, static_cast<std::uint64_t>(epoch)});
    const NashResult nash = SolveNash(state.game, solver);
    state.profile = nash.profile;
    state.diagnostics.push_back({epoch, state.game.shape(), cells,
                                 static_cast<long>(state.game.num_cells()),
                                 nash.regret, nash.approximate, nash.method,
                                 nash.profile});
    if (checkpoint) checkpoint(state);
  }
  return state;
}

}  // namespace econgame

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
#ifndef ECONGAME_RL_ROLLOUT_H_
#define ECONGAME_RL_ROLLOUT_H_

// Episode execution. The serial and OpenMP collectors return identical
// results: every random draw is keyed on the episode seed and agent index.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "econgame/rl/game_env.h"
#include "econgame/rl/ppo.h"

namespace econgame {

// One episode to run: its seed and the policy each role plays.
struct EpisodeJob {
  std::uint64_t seed = 0;
  std::vector<const PolicyParams*> role_policies;
};

struct EpisodeRecord {
  std::vector<Trajectory> agents;          // empty unless recording
  std::vector<double> discounted_returns;  // per agent
};

struct RolloutOptions {
  bool record = true;          // keep per-step transitions
  bool deterministic = false;  // argmax actions
  // Optional observers, called around every environment step.
  std::function<void(const MultiAgentEnv&)> before_step;
  std::function<void(const MultiAgentEnv&)> after_step;
};

// Runs one episode on `env` (which is reset with job.seed).
EpisodeRecord RunEpisode(MultiAgentEnv& env, const EpisodeJob& job,
                         const RolloutOptions& options);

// Reference implementation: one environment, jobs in order.
std::vector<EpisodeRecord> CollectEpisodesSerial(
    const EnvFactory& factory, std::span<const EpisodeJob> jobs,
    const RolloutOptions& options);

// One environment per OpenMP thread, dynamic schedule over jobs.
std::vector<EpisodeRecord> CollectEpisodesParallel(
    const EnvFactory& factory, std::span<const EpisodeJob> jobs,
    const RolloutOptions& options);

}  // namespace econgame

#endif  // ECONGAME_RL_ROLLOUT_H_

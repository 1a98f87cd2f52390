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
#ifndef ECONGAME_RL_ORACLE_H_
#define ECONGAME_RL_ORACLE_H_

// Best-response training against frozen opponents, and independent
// multi-agent training where every role learns at once.

#include <cstdint>
#include <string>
#include <vector>

#include "econgame/rl/game_env.h"
#include "econgame/rl/ppo.h"
#include "econgame/rl/rollout.h"

namespace econgame {

// One row of the training-curve log.
struct CurvePoint {
  std::string scheme;
  int epoch = 0;
  int episode = 0;
  int agent_id = 0;
  std::string agent_type;
  double discounted_return = 0.0;
  double moving_avg = 0.0;
};

// Mixed strategies of every role over that role's pure strategies.
class OpponentSampler {
 public:
  // Throws ContractViolation if a distribution has the wrong length, a
  // negative entry, or does not sum to one within 1e-9.
  OpponentSampler(std::vector<std::vector<const PolicyParams*>> strategies,
                  std::vector<std::vector<double>> probabilities);

  int num_roles() const { return static_cast<int>(strategies_.size()); }
  // One pure-strategy index per role (roles with empty sets get -1).
  std::vector<int> Sample(std::uint64_t key) const;
  const PolicyParams* strategy(int role, int index) const {
    return strategies_[role][index];
  }
  const std::vector<double>& probabilities(int role) const {
    return probabilities_[role];
  }

 private:
  std::vector<std::vector<const PolicyParams*>> strategies_;
  std::vector<std::vector<double>> probabilities_;
};

struct BestResponseResult {
  PolicyParams policy;
  std::vector<CurvePoint> curve;
};

// Trains a fresh policy for `role` over config.episodes episodes. Each
// episode draws one pure strategy per other role from `opponents`; only the
// learner is updated, every config.episodes_per_batch episodes.
BestResponseResult TrainBestResponse(int role, const OpponentSampler& opponents,
                                     const EnvFactory& factory,
                                     const TrainConfig& config,
                                     std::uint64_t seed, int epoch = 0,
                                     bool parallel = true);

struct ImarlResult {
  std::vector<PolicyParams> initial;
  std::vector<PolicyParams> policies;  // one per role
  std::vector<CurvePoint> curve;
};

// All roles learn concurrently from one shared stream of episodes.
ImarlResult TrainImarl(const EnvFactory& factory, const TrainConfig& config,
                       bool parallel = true);

// Initial random policy of `role` for a given seed.
PolicyParams InitialRolePolicy(const RoleSpec& role, int role_index,
                               std::uint64_t seed);

// Appends curve points for one batch of episodes, maintaining per-agent
// moving averages in `history`.
void AppendCurve(const std::string& scheme, int epoch, int first_episode,
                 const std::vector<EpisodeRecord>& episodes,
                 const std::vector<AgentSlot>& agents,
                 const std::vector<RoleSpec>& roles, int only_role, int window,
                 std::vector<std::vector<double>>& history,
                 std::vector<CurvePoint>& curve);

}  // namespace econgame

#endif  // ECONGAME_RL_ORACLE_H_

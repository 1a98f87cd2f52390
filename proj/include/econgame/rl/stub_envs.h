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
#ifndef ECONGAME_RL_STUB_ENVS_H_
#define ECONGAME_RL_STUB_ENVS_H_

// Small environments with known answers, used to exercise the learners and
// the game-solving loop in isolation from the economy.

#include <vector>

#include "econgame/rl/game_env.h"

namespace econgame {

// One-shot two-player matrix game. Row player picks a row, column player a
// column; rewards are payoff_row[r][c] and payoff_col[r][c]. Both players see
// a constant input.
class BimatrixEnv : public MultiAgentEnv {
 public:
  BimatrixEnv(std::vector<std::vector<double>> payoff_row,
              std::vector<std::vector<double>> payoff_col,
              std::vector<int> hidden = {8});

  const std::vector<RoleSpec>& roles() const override { return roles_; }
  const std::vector<AgentSlot>& agents() const override { return agents_; }
  int horizon() const override { return 1; }
  void Reset(std::uint64_t seed) override;
  std::vector<std::vector<double>> PolicyInputs() const override;
  EnvStep Step(const std::vector<std::vector<int>>& actions) override;

 private:
  std::vector<std::vector<double>> payoff_row_, payoff_col_;
  std::vector<RoleSpec> roles_;
  std::vector<AgentSlot> agents_;
  bool done_ = false;
};

// Every agent receives the same reward every step regardless of actions.
class ConstantRewardEnv : public MultiAgentEnv {
 public:
  ConstantRewardEnv(int n_roles, int horizon, double reward, double discount);

  const std::vector<RoleSpec>& roles() const override { return roles_; }
  const std::vector<AgentSlot>& agents() const override { return agents_; }
  int horizon() const override { return horizon_; }
  void Reset(std::uint64_t seed) override;
  std::vector<std::vector<double>> PolicyInputs() const override;
  EnvStep Step(const std::vector<std::vector<int>>& actions) override;
  int episodes_started() const { return episodes_; }

 private:
  int horizon_;
  double reward_;
  std::vector<RoleSpec> roles_;
  std::vector<AgentSlot> agents_;
  int t_ = 0;
  int episodes_ = 0;
};

// Single-agent contextual bandit: the context is one of two values drawn per
// episode; action k pays rewards[k] in both contexts.
class BanditEnv : public MultiAgentEnv {
 public:
  explicit BanditEnv(std::vector<double> rewards, std::vector<int> hidden = {8});

  const std::vector<RoleSpec>& roles() const override { return roles_; }
  const std::vector<AgentSlot>& agents() const override { return agents_; }
  int horizon() const override { return 1; }
  void Reset(std::uint64_t seed) override;
  std::vector<std::vector<double>> PolicyInputs() const override;
  EnvStep Step(const std::vector<std::vector<int>>& actions) override;

 private:
  std::vector<double> rewards_;
  std::vector<RoleSpec> roles_;
  std::vector<AgentSlot> agents_;
  double context_ = 0.0;
};

}  // namespace econgame

#endif  // ECONGAME_RL_STUB_ENVS_H_

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
#ifndef ECONGAME_RL_ECON_ENV_H_
#define ECONGAME_RL_ECON_ENV_H_

#include <optional>

#include "econgame/env/economy.h"
#include "econgame/rl/game_env.h"

namespace econgame {

// Role indices of the economy game.
inline constexpr int kHouseholdRole = 0;
inline constexpr int kFirmRole = 1;
inline constexpr int kCentralBankRole = 2;
inline constexpr int kGovernmentRole = 3;

// Adapts Economy to MultiAgentEnv: four roles, one agent per household and
// firm plus the central bank and government. Observations are scaled by the
// grid defaults (prices by p, wages by w, money by n*w, hours by n, goods by
// c, inventories by n; rates and taxes raw) before the heterogeneity
// features are appended.
class EconEnv : public MultiAgentEnv {
 public:
  EconEnv(ScenarioConfig config, std::vector<int> hidden);

  const std::vector<RoleSpec>& roles() const override { return roles_; }
  const std::vector<AgentSlot>& agents() const override { return agents_; }
  int horizon() const override { return economy_.config().horizon; }

  void Reset(std::uint64_t seed) override;
  std::vector<std::vector<double>> PolicyInputs() const override;
  EnvStep Step(const std::vector<std::vector<int>>& actions) override;

  // Maps per-agent head indices onto the economy's joint action.
  JointAction ToJointAction(const std::vector<std::vector<int>>& actions) const;

  const Economy& economy() const { return economy_; }
  const JointObservation& last_observation() const { return observation_; }
  // Full step record of the most recent Step call.
  const std::optional<StepResult>& last_step() const { return last_step_; }

 private:
  Economy economy_;
  std::vector<RoleSpec> roles_;
  std::vector<AgentSlot> agents_;
  JointObservation observation_;
  std::optional<StepResult> last_step_;
};

std::vector<double> HouseholdFeatures(const HouseholdParams& p);
std::vector<double> FirmFeatures(const FirmParams& p);

// Role specs of the economy for the given scenario and hidden sizes.
std::vector<RoleSpec> EconRoles(const ScenarioConfig& config,
                                const std::vector<int>& hidden);

EnvFactory MakeEconEnvFactory(const ScenarioConfig& config,
                              const std::vector<int>& hidden);

}  // namespace econgame

#endif  // ECONGAME_RL_ECON_ENV_H_

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
#ifndef ECONGAME_ENV_SCENARIO_H_
#define ECONGAME_ENV_SCENARIO_H_

#include <cstdint>
#include <vector>

#include "econgame/core/params.h"
#include "econgame/env/action_grids.h"

namespace econgame {

struct ScenarioConfig {
  int horizon = 40;  // quarters
  std::vector<HouseholdParams> households;
  std::vector<FirmParams> firms;
  CentralBankParams central_bank;
  GovernmentParams government;
  ActionGrids action_grids;
  std::uint64_t seed = 0;
  bool normalized_rewards = true;

  int n_households() const { return static_cast<int>(households.size()); }
  int n_firms() const { return static_cast<int>(firms.size()); }
};

// Throws ConfigError naming the first invalid field.
void Validate(const ScenarioConfig& config);

// Two households with skills [[2,1],[1,1]], a technology firm (alpha 2/3) and
// a labor-intensive firm (alpha 1), forty quarters.
ScenarioConfig HeterogeneousSkillsScenario();

}  // namespace econgame

#endif  // ECONGAME_ENV_SCENARIO_H_

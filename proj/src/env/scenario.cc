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
#include "econgame/env/scenario.h"

#include <string>

#include "econgame/core/errors.h"

namespace econgame {

void Validate(const ScenarioConfig& c) {
  if (c.horizon < 5) {
    throw ConfigError("scenario.horizon", "must be >= 5 (inflation window)");
  }
  if (c.households.empty()) {
    throw ConfigError("scenario.households", "need at least one household");
  }
  if (c.firms.empty()) throw ConfigError("scenario.firms", "need a firm");
  for (int i = 0; i < c.n_households(); ++i) {
    const std::string where = "scenario.households[" + std::to_string(i) + "]";
    if (static_cast<int>(c.households[i].skills.size()) != c.n_firms()) {
      throw ConfigError(where + ".skills", "need one skill per firm");
    }
    Validate(c.households[i], where);
  }
  for (int j = 0; j < c.n_firms(); ++j) {
    Validate(c.firms[j], "scenario.firms[" + std::to_string(j) + "]");
  }
  Validate(c.central_bank, "scenario.central_bank");
  Validate(c.government, "scenario.government");
  Validate(c.action_grids);
}

ScenarioConfig HeterogeneousSkillsScenario() {
  ScenarioConfig c;
  c.horizon = 40;
  const HouseholdParams base{.skills = {}, .gamma = 0.33, .nu = 0.5,
                             .mu = 1.0, .discount = 0.99};
  HouseholdParams h1 = base;
  h1.skills = {2.0, 1.0};
  HouseholdParams h2 = base;
  h2.skills = {1.0, 1.0};
  c.households = {h1, h2};
  const FirmParams tech{.rho = 0.97, .shock_mean = 0.0, .shock_std = 0.1,
                        .alpha = 2.0 / 3.0, .inventory_risk = 0.1,
                        .discount = 0.99};
  FirmParams agriculture = tech;
  agriculture.alpha = 1.0;
  c.firms = {tech, agriculture};
  c.central_bank = {.target_inflation = 1.02, .production_weight = 0.25,
                    .discount = 0.99};
  c.government = {.redistribution_fraction = 0.1, .weight_slope = 1.0,
                  .weight_intercept = 1.2, .weight_floor = 1e-3,
                  .weight_cap = 3.2, .discount = 0.99};
  c.seed = 0;
  c.normalized_rewards = true;
  return c;
}

}  // namespace econgame

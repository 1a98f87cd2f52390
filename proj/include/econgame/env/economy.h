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
#ifndef ECONGAME_ENV_ECONOMY_H_
#define ECONGAME_ENV_ECONOMY_H_

// Episodic economy with households, firms, a central bank and a government.
// Agents are ordered households, firms, central bank, government.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "econgame/core/params.h"
#include "econgame/env/scenario.h"

namespace econgame {

struct WorldState {
  std::vector<double> savings;            // per household, $
  std::vector<double> inventory;          // per firm, units
  std::vector<double> prices;             // per firm, $/unit
  std::vector<double> wages;              // per firm, $/hour
  std::vector<double> production_factor;  // per firm, factor of last quarter
  std::array<double, 5> price_history{};  // total price t-4 .. t
  double interest_rate = 0.0;
  double tax_rate = 0.0;
  std::vector<double> credits;  // per household, $
  int step = 0;

  // Last quarter's flows, reported back in observations.
  std::vector<double> last_skilled_labor;  // per firm
  std::vector<double> last_consumption;    // per firm
  std::vector<double> last_taxes;          // per household
  double last_total_production = 0.0;
};

struct HouseholdAction {
  std::vector<int> labor;        // grid index per firm
  std::vector<int> consumption;  // grid index per firm
};

struct FirmAction {
  int wage = 0;
  int price = 0;
};

struct JointAction {
  std::vector<HouseholdAction> households;
  std::vector<FirmAction> firms;
  int rate = 0;
  int tax = 0;
  std::vector<int> fractions;  // raw-fraction index per household
};

struct DecodedActions {
  std::vector<std::vector<double>> labor;        // [i][j] hours
  std::vector<std::vector<double>> consumption;  // [i][j] requested units
  std::vector<double> wages;                     // next-quarter wage per firm
  std::vector<double> prices;                    // next-quarter price per firm
  double rate = 0.0;                             // next-quarter rate
  double tax_rate = 0.0;                         // next-quarter tax
  std::vector<double> fractions;                 // credit shares, sum to 1
};

// Household i: [credit, tax rate, rate, wages..., prices..., savings]
// Firm j: [skilled labor, consumption, shock, factor, wage, price, inventory]
// Central bank: [total price t-4 .. t, total production]
// Government: [tax rate, credits..., taxes collected..., welfare weights...]
struct JointObservation {
  std::vector<std::vector<double>> households;
  std::vector<std::vector<double>> firms;
  std::vector<double> central_bank;
  std::vector<double> government;
};

struct StepInfo {
  int step = 0;
  DecodedActions actions;
  // Quantities in effect during the quarter.
  std::vector<double> prices, wages, credits;
  double rate = 0.0, tax_rate = 0.0;
  std::vector<double> shocks, production_factors, production, skilled_labor;
  double total_production = 0.0;
  std::vector<std::vector<double>> realized_consumption;  // [i][j]
  std::vector<double> labor_income, taxes;               // per household
  double total_tax = 0.0;
  std::vector<double> next_credits;
  double total_price = 0.0;
  double inflation = 1.0;
  std::vector<double> savings_before, savings_after;
  std::vector<double> inventory_before, inventory_after;
  std::vector<double> welfare_weights;
  std::vector<double> raw_rewards, normalized_rewards;  // per agent
};

struct StepResult {
  JointObservation observations;  // for the next quarter
  std::vector<double> rewards;    // per agent, scale per config
  bool done = false;
  StepInfo info;
};

class Economy {
 public:
  // Throws ConfigError if the scenario is invalid.
  explicit Economy(ScenarioConfig config);

  JointObservation Reset(std::uint64_t seed);
  StepResult Step(const JointAction& actions);

  JointObservation Observe() const;
  const WorldState& state() const { return state_; }
  const ScenarioConfig& config() const { return config_; }
  const NormalizationDefaults& normalization() const { return norm_; }
  int num_agents() const { return config_.n_households() + config_.n_firms() + 2; }
  bool done() const { return state_.step >= config_.horizon; }

  // Exogenous shock of firm j in quarter t for the current episode seed.
  double Shock(int firm, int step) const;

  // The all-default joint action (center of every grid).
  JointAction DefaultAction() const;

 private:
  ScenarioConfig config_;
  NormalizationDefaults norm_;
  std::uint64_t episode_seed_ = 0;
  WorldState state_;
};

// Grid lookup of every index; fractions are the raw choices normalized by
// their sum. Throws DecodeError naming the agent on an out-of-range index.
DecodedActions DecodeActions(const JointAction& actions,
                             const ActionGrids& grids, int n_households,
                             int n_firms);

// sum_t discount^t * rewards[t]
double EpisodeReturn(std::span<const double> rewards, double discount);

// Observation vector lengths per agent type.
constexpr int HouseholdObsDim(int n_firms) { return 4 + 2 * n_firms; }
constexpr int FirmObsDim() { return 7; }
constexpr int CentralBankObsDim() { return 6; }
constexpr int GovernmentObsDim(int n_households) { return 1 + 3 * n_households; }

}  // namespace econgame

#endif  // ECONGAME_ENV_ECONOMY_H_

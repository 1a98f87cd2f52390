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
#include "econgame/env/economy.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "econgame/core/dynamics.h"
#include "econgame/core/errors.h"
#include "econgame/core/rng.h"

namespace econgame {
namespace {

double Lookup(const std::vector<double>& grid, int index,
              const std::string& agent, const char* what) {
  if (index < 0 || index >= static_cast<int>(grid.size())) {
    throw DecodeError(agent, std::string(what) + " index " +
                                 std::to_string(index) + " outside [0, " +
                                 std::to_string(grid.size()) + ")");
  }
  return grid[index];
}

double Sum(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

}  // namespace

DecodedActions DecodeActions(const JointAction& a, const ActionGrids& g,
                             int n_households, int n_firms) {
  if (static_cast<int>(a.households.size()) != n_households) {
    throw DecodeError("households", "expected " +
                                        std::to_string(n_households) +
                                        " household actions");
  }
  if (static_cast<int>(a.firms.size()) != n_firms) {
    throw DecodeError("firms",
                      "expected " + std::to_string(n_firms) + " firm actions");
  }
  if (static_cast<int>(a.fractions.size()) != n_households) {
    throw DecodeError("government", "expected one fraction per household");
  }
  DecodedActions d;
  d.labor.resize(n_households);
  d.consumption.resize(n_households);
  for (int i = 0; i < n_households; ++i) {
    const std::string who = "household_" + std::to_string(i);
    const HouseholdAction& h = a.households[i];
    if (static_cast<int>(h.labor.size()) != n_firms ||
        static_cast<int>(h.consumption.size()) != n_firms) {
      throw DecodeError(who, "expected one labor and one consumption index "
                             "per firm");
    }
    for (int j = 0; j < n_firms; ++j) {
      d.labor[i].push_back(Lookup(g.labor_hours, h.labor[j], who, "labor"));
      d.consumption[i].push_back(
          Lookup(g.consumption_units, h.consumption[j], who, "consumption"));
    }
  }
  for (int j = 0; j < n_firms; ++j) {
    const std::string who = "firm_" + std::to_string(j);
    d.wages.push_back(Lookup(g.wages, a.firms[j].wage, who, "wage"));
    d.prices.push_back(Lookup(g.prices, a.firms[j].price, who, "price"));
  }
  d.rate = Lookup(g.rates, a.rate, "central_bank", "rate");
  d.tax_rate = Lookup(g.tax_rates, a.tax, "government", "tax");
  double raw_total = 0.0;
  for (int i = 0; i < n_households; ++i) {
    d.fractions.push_back(
        Lookup(g.fraction_raw, a.fractions[i], "government", "fraction"));
    raw_total += d.fractions.back();
  }
  for (double& f : d.fractions) f /= raw_total;
  return d;
}

double EpisodeReturn(std::span<const double> rewards, double discount) {
  if (!(discount >= 0.0 && discount < 1.0)) {
    throw ContractViolation("EpisodeReturn: discount must be in [0, 1)");
  }
  double total = 0.0;
  double weight = 1.0;
  for (double r : rewards) {
    total += weight * r;
    weight *= discount;
  }
  return total;
}

Economy::Economy(ScenarioConfig config) : config_(std::move(config)) {
  Validate(config_);
  norm_ = NormalizationFromGrids(config_.action_grids);
  Reset(config_.seed);
}

double Economy::Shock(int firm, int step) const {
  const FirmParams& p = config_.firms[firm];
  const double z = StandardNormal(
      MixKey({episode_seed_, static_cast<std::uint64_t>(firm),
              static_cast<std::uint64_t>(step)}));
  return p.shock_mean + p.shock_std * z;
}

JointAction Economy::DefaultAction() const {
  const ActionGrids& g = config_.action_grids;
  JointAction a;
  for (int i = 0; i < config_.n_households(); ++i) {
    a.households.push_back(
        {std::vector<int>(config_.n_firms(), DefaultIndex(g.labor_hours)),
         std::vector<int>(config_.n_firms(),
                          DefaultIndex(g.consumption_units))});
    a.fractions.push_back(DefaultIndex(g.fraction_raw));
  }
  for (int j = 0; j < config_.n_firms(); ++j) {
    a.firms.push_back({DefaultIndex(g.wages), DefaultIndex(g.prices)});
  }
  a.rate = DefaultIndex(g.rates);
  a.tax = DefaultIndex(g.tax_rates);
  return a;
}

JointObservation Economy::Reset(std::uint64_t seed) {
  const int n_h = config_.n_households();
  const int n_f = config_.n_firms();
  const ActionGrids& g = config_.action_grids;
  episode_seed_ = seed;
  state_ = WorldState{};
  state_.savings.assign(n_h, 0.0);
  state_.credits.assign(n_h, 0.0);
  state_.last_taxes.assign(n_h, 0.0);
  state_.inventory.assign(n_f, 0.0);
  state_.prices.assign(n_f, DefaultValue(g.prices));
  state_.wages.assign(n_f, DefaultValue(g.wages));
  state_.production_factor.assign(n_f, 1.0);
  state_.last_skilled_labor.assign(n_f, 0.0);
  state_.last_consumption.assign(n_f, 0.0);
  state_.interest_rate = DefaultValue(g.rates);
  state_.tax_rate = DefaultValue(g.tax_rates);
  state_.price_history.fill(Sum(state_.prices));
  state_.step = 0;
  return Observe();
}

JointObservation Economy::Observe() const {
  const int n_h = config_.n_households();
  const int n_f = config_.n_firms();
  const WorldState& s = state_;
  JointObservation obs;
  for (int i = 0; i < n_h; ++i) {
    std::vector<double> o{s.credits[i], s.tax_rate, s.interest_rate};
    o.insert(o.end(), s.wages.begin(), s.wages.end());
    o.insert(o.end(), s.prices.begin(), s.prices.end());
    o.push_back(s.savings[i]);
    obs.households.push_back(std::move(o));
  }
  for (int j = 0; j < n_f; ++j) {
    // No shock has been drawn before the first quarter.
    const double shock = s.step == 0 ? 0.0 : Shock(j, s.step);
    obs.firms.push_back({s.last_skilled_labor[j], s.last_consumption[j], shock,
                         s.production_factor[j], s.wages[j], s.prices[j],
                         s.inventory[j]});
  }
  obs.central_bank.assign(s.price_history.begin(), s.price_history.end());
  obs.central_bank.push_back(s.last_total_production);
  obs.government.push_back(s.tax_rate);
  obs.government.insert(obs.government.end(), s.credits.begin(),
                        s.credits.end());
  obs.government.insert(obs.government.end(), s.last_taxes.begin(),
                        s.last_taxes.end());
  for (int i = 0; i < n_h; ++i) {
    obs.government.push_back(WelfareWeight(s.savings[i], config_.government));
  }
  return obs;
}

StepResult Economy::Step(const JointAction& actions) {
  if (done()) throw ContractViolation("Economy::Step: episode is done");
  const int n_h = config_.n_households();
  const int n_f = config_.n_firms();
  WorldState& s = state_;
  StepInfo info;
  info.step = s.step;

  // (a) decode
  info.actions = DecodeActions(actions, config_.action_grids, n_h, n_f);
  const DecodedActions& d = info.actions;
  info.prices = s.prices;
  info.wages = s.wages;
  info.credits = s.credits;
  info.rate = s.interest_rate;
  info.tax_rate = s.tax_rate;
  info.savings_before = s.savings;
  info.inventory_before = s.inventory;

  // (b) shocks, production factors, output
  info.shocks.resize(n_f);
  info.production_factors.resize(n_f);
  info.production.resize(n_f);
  info.skilled_labor.assign(n_f, 0.0);
  for (int j = 0; j < n_f; ++j) {
    for (int i = 0; i < n_h; ++i) {
      info.skilled_labor[j] += d.labor[i][j] * config_.households[i].skills[j];
    }
    info.shocks[j] = Shock(j, s.step);
    info.production_factors[j] = EvolveProductionFactor(
        s.production_factor[j], config_.firms[j].rho, info.shocks[j]);
    info.production[j] = Produce(info.production_factors[j],
                                 info.skilled_labor[j], config_.firms[j].alpha);
  }
  info.total_production = Sum(info.production);

  // (c) allocate current stock, (d) inventories
  info.realized_consumption.assign(n_h, std::vector<double>(n_f, 0.0));
  std::vector<double> consumed(n_f, 0.0);
  info.inventory_after.resize(n_f);
  for (int j = 0; j < n_f; ++j) {
    std::vector<double> requests(n_h);
    for (int i = 0; i < n_h; ++i) requests[i] = d.consumption[i][j];
    const std::vector<double> got = AllocateConsumption(requests, s.inventory[j]);
    for (int i = 0; i < n_h; ++i) info.realized_consumption[i][j] = got[i];
    consumed[j] = Sum(got);
    info.inventory_after[j] =
        UpdateInventory(s.inventory[j], info.production[j], consumed[j]);
  }

  // (e) savings and income tax at this quarter's rate, tax and credit
  info.labor_income.assign(n_h, 0.0);
  info.taxes.assign(n_h, 0.0);
  info.savings_after.resize(n_h);
  for (int i = 0; i < n_h; ++i) {
    std::vector<double> income(n_f), cost(n_f);
    for (int j = 0; j < n_f; ++j) {
      income[j] = d.labor[i][j] * config_.households[i].skills[j] * s.wages[j];
      cost[j] = info.realized_consumption[i][j] * s.prices[j];
    }
    info.labor_income[i] = Sum(income);
    info.taxes[i] = s.tax_rate * info.labor_income[i];
    info.savings_after[i] = UpdateSavings(s.savings[i], s.interest_rate,
                                          income, cost, s.tax_rate,
                                          s.credits[i]);
  }
  info.total_tax = Sum(info.taxes);

  // (f) credits paid out next quarter
  info.next_credits = ComputeTaxCredits(
      d.fractions, info.total_tax, config_.government.redistribution_fraction);

  // (g) inflation over the window t-4 .. t
  info.total_price = s.price_history.back();
  info.inflation = ComputeInflation(s.price_history);

  // (h) rewards
  const int n_agents = num_agents();
  info.raw_rewards.resize(n_agents);
  info.normalized_rewards.resize(n_agents);
  info.welfare_weights.resize(n_h);
  std::vector<double> hh_raw(n_h), hh_norm(n_h);
  for (int i = 0; i < n_h; ++i) {
    std::vector<double> labor = d.labor[i];
    hh_raw[i] = HouseholdReward(info.realized_consumption[i], labor,
                                info.savings_after[i], config_.households[i],
                                RewardScale::kRaw, norm_, s.prices);
    hh_norm[i] = HouseholdReward(info.realized_consumption[i], labor,
                                 info.savings_after[i], config_.households[i],
                                 RewardScale::kNormalized, norm_, s.prices);
    info.raw_rewards[i] = hh_raw[i];
    info.normalized_rewards[i] = hh_norm[i];
    info.welfare_weights[i] = WelfareWeight(s.savings[i], config_.government);
  }
  for (int j = 0; j < n_f; ++j) {
    const auto firm_reward = [&](RewardScale scale) {
      return FirmReward(s.prices[j], s.wages[j], consumed[j],
                        info.skilled_labor[j], info.inventory_after[j],
                        config_.firms[j], scale, norm_, n_h);
    };
    info.raw_rewards[n_h + j] = firm_reward(RewardScale::kRaw);
    info.normalized_rewards[n_h + j] = firm_reward(RewardScale::kNormalized);
  }
  std::vector<double> alphas;
  for (const FirmParams& f : config_.firms) alphas.push_back(f.alpha);
  const int cb = n_h + n_f;
  info.raw_rewards[cb] =
      CentralBankReward(info.inflation, info.total_production,
                        config_.central_bank, RewardScale::kRaw, alphas, n_h,
                        norm_);
  info.normalized_rewards[cb] =
      CentralBankReward(info.inflation, info.total_production,
                        config_.central_bank, RewardScale::kNormalized, alphas,
                        n_h, norm_);
  info.raw_rewards[cb + 1] = GovernmentReward(info.welfare_weights, hh_raw);
  info.normalized_rewards[cb + 1] =
      GovernmentReward(info.welfare_weights, hh_norm);

  // (i) install next-quarter state
  s.savings = info.savings_after;
  s.inventory = info.inventory_after;
  s.production_factor = info.production_factors;
  s.credits = info.next_credits;
  s.prices = d.prices;
  s.wages = d.wages;
  s.interest_rate = d.rate;
  s.tax_rate = d.tax_rate;
  s.last_skilled_labor = info.skilled_labor;
  s.last_consumption = consumed;
  s.last_taxes = info.taxes;
  s.last_total_production = info.total_production;

  // (j) advance and roll the price window
  ++s.step;
  std::rotate(s.price_history.begin(), s.price_history.begin() + 1,
              s.price_history.end());
  s.price_history.back() = Sum(s.prices);

  StepResult result;
  result.rewards = config_.normalized_rewards ? info.normalized_rewards
                                              : info.raw_rewards;
  result.done = done();
  result.observations = Observe();
  result.info = std::move(info);
  return result;
}

}  // namespace econgame

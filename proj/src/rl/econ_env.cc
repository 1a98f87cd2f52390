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
#include "econgame/rl/econ_env.h"

#include <cmath>
#include <numeric>
#include <string>

#include "econgame/core/errors.h"

namespace econgame {

std::vector<double> HouseholdFeatures(const HouseholdParams& p) {
  std::vector<double> f = p.skills;
  f.insert(f.end(), {p.gamma, p.nu, p.mu});
  return f;
}

std::vector<double> FirmFeatures(const FirmParams& p) {
  return {p.rho, p.shock_mean, p.shock_std, p.alpha, p.inventory_risk};
}

std::vector<RoleSpec> EconRoles(const ScenarioConfig& c,
                                const std::vector<int>& hidden) {
  const ActionGrids& g = c.action_grids;
  const int n_h = c.n_households();
  const int n_f = c.n_firms();
  const auto sz = [](const std::vector<double>& v) {
    return static_cast<int>(v.size());
  };
  PolicySpec household{AgentType::kHousehold, HouseholdObsDim(n_f), n_f + 3,
                       {}, hidden};
  for (int j = 0; j < n_f; ++j) household.action_dims.push_back(sz(g.labor_hours));
  for (int j = 0; j < n_f; ++j) {
    household.action_dims.push_back(sz(g.consumption_units));
  }
  PolicySpec firm{AgentType::kFirm, FirmObsDim(), 5,
                  {sz(g.wages), sz(g.prices)}, hidden};
  PolicySpec bank{AgentType::kCentralBank, CentralBankObsDim(), 0,
                  {sz(g.rates)}, hidden};
  PolicySpec government{AgentType::kGovernment, GovernmentObsDim(n_h), 0,
                        {sz(g.tax_rates)}, hidden};
  for (int i = 0; i < n_h; ++i) {
    government.action_dims.push_back(sz(g.fraction_raw));
  }
  return {{"household", household},
          {"firm", firm},
          {"central_bank", bank},
          {"government", government}};
}

EconEnv::EconEnv(ScenarioConfig config, std::vector<int> hidden)
    : economy_(std::move(config)) {
  const ScenarioConfig& c = economy_.config();
  roles_ = EconRoles(c, hidden);
  for (int i = 0; i < c.n_households(); ++i) {
    agents_.push_back({kHouseholdRole, "household_" + std::to_string(i),
                       c.households[i].discount});
  }
  for (int j = 0; j < c.n_firms(); ++j) {
    agents_.push_back(
        {kFirmRole, "firm_" + std::to_string(j), c.firms[j].discount});
  }
  agents_.push_back({kCentralBankRole, "central_bank",
                     c.central_bank.discount});
  agents_.push_back({kGovernmentRole, "government", c.government.discount});
  observation_ = economy_.Observe();
}

void EconEnv::Reset(std::uint64_t seed) {
  observation_ = economy_.Reset(seed);
  last_step_.reset();
}

std::vector<std::vector<double>> EconEnv::PolicyInputs() const {
  const ScenarioConfig& c = economy_.config();
  const NormalizationDefaults& n = economy_.normalization();
  const double money = n.default_labor * n.default_wage;
  const int n_h = c.n_households();
  const int n_f = c.n_firms();
  std::vector<std::vector<double>> inputs;
  for (int i = 0; i < n_h; ++i) {
    const std::vector<double>& o = observation_.households[i];
    std::vector<double> x{o[0] / money, o[1], o[2]};
    for (int j = 0; j < n_f; ++j) x.push_back(o[3 + j] / n.default_wage);
    for (int j = 0; j < n_f; ++j) x.push_back(o[3 + n_f + j] / n.default_price);
    x.push_back(o[3 + 2 * n_f] / money);
    const auto h = HouseholdFeatures(c.households[i]);
    x.insert(x.end(), h.begin(), h.end());
    inputs.push_back(std::move(x));
  }
  for (int j = 0; j < n_f; ++j) {
    const std::vector<double>& o = observation_.firms[j];
    std::vector<double> x{o[0] / n.default_labor,
                          o[1] / n.default_consumption,
                          o[2],
                          o[3],
                          o[4] / n.default_wage,
                          o[5] / n.default_price,
                          o[6] / n.default_labor};
    const auto f = FirmFeatures(c.firms[j]);
    x.insert(x.end(), f.begin(), f.end());
    inputs.push_back(std::move(x));
  }
  {
    const std::vector<double>& o = observation_.central_bank;
    const double total_price = n_f * n.default_price;
    double reference_output = 0.0;
    for (const FirmParams& f : c.firms) {
      reference_output += std::pow(n_h * n.default_labor, f.alpha);
    }
    std::vector<double> x;
    for (int k = 0; k < 5; ++k) x.push_back(o[k] / total_price);
    x.push_back(o[5] / reference_output);
    inputs.push_back(std::move(x));
  }
  {
    const std::vector<double>& o = observation_.government;
    std::vector<double> x{o[0]};
    for (int k = 1; k < 1 + 2 * n_h; ++k) x.push_back(o[k] / money);
    for (int k = 1 + 2 * n_h; k < 1 + 3 * n_h; ++k) x.push_back(o[k]);
    inputs.push_back(std::move(x));
  }
  return inputs;
}

JointAction EconEnv::ToJointAction(
    const std::vector<std::vector<int>>& actions) const {
  const int n_h = economy_.config().n_households();
  const int n_f = economy_.config().n_firms();
  if (static_cast<int>(actions.size()) != n_h + n_f + 2) {
    throw DecodeError("joint", "expected one action vector per agent");
  }
  const auto expect = [&](int agent, std::size_t len) {
    if (actions[agent].size() != len) {
      throw DecodeError(agents_[agent].label, "expected " +
                                                  std::to_string(len) +
                                                  " action heads");
    }
  };
  JointAction a;
  for (int i = 0; i < n_h; ++i) {
    expect(i, 2 * n_f);
    a.households.push_back(
        {{actions[i].begin(), actions[i].begin() + n_f},
         {actions[i].begin() + n_f, actions[i].end()}});
  }
  for (int j = 0; j < n_f; ++j) {
    expect(n_h + j, 2);
    a.firms.push_back({actions[n_h + j][0], actions[n_h + j][1]});
  }
  expect(n_h + n_f, 1);
  a.rate = actions[n_h + n_f][0];
  expect(n_h + n_f + 1, 1 + n_h);
  a.tax = actions[n_h + n_f + 1][0];
  a.fractions.assign(actions[n_h + n_f + 1].begin() + 1,
                     actions[n_h + n_f + 1].end());
  return a;
}

EnvStep EconEnv::Step(const std::vector<std::vector<int>>& actions) {
  StepResult result = economy_.Step(ToJointAction(actions));
  observation_ = result.observations;
  EnvStep step{result.rewards, result.done};
  last_step_ = std::move(result);
  return step;
}

EnvFactory MakeEconEnvFactory(const ScenarioConfig& config,
                              const std::vector<int>& hidden) {
  Validate(config);
  return [config, hidden]() -> std::unique_ptr<MultiAgentEnv> {
    return std::make_unique<EconEnv>(config, hidden);
  };
}

}  // namespace econgame

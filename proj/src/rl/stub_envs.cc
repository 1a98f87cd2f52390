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
#include "econgame/rl/stub_envs.h"

#include "econgame/core/errors.h"
#include "econgame/core/rng.h"

namespace econgame {

BimatrixEnv::BimatrixEnv(std::vector<std::vector<double>> payoff_row,
                         std::vector<std::vector<double>> payoff_col,
                         std::vector<int> hidden)
    : payoff_row_(std::move(payoff_row)), payoff_col_(std::move(payoff_col)) {
  const int rows = static_cast<int>(payoff_row_.size());
  const int cols = rows > 0 ? static_cast<int>(payoff_row_[0].size()) : 0;
  if (rows < 2 || cols < 2 ||
      static_cast<int>(payoff_col_.size()) != rows) {
    throw ConfigError("bimatrix", "need matching payoff tables, >= 2x2");
  }
  roles_ = {{"row", {AgentType::kGeneric, 1, 0, {rows}, hidden}},
            {"column", {AgentType::kGeneric, 1, 0, {cols}, hidden}}};
  agents_ = {{0, "row", 0.99}, {1, "column", 0.99}};
}

void BimatrixEnv::Reset(std::uint64_t) { done_ = false; }

std::vector<std::vector<double>> BimatrixEnv::PolicyInputs() const {
  return {{1.0}, {1.0}};
}

EnvStep BimatrixEnv::Step(const std::vector<std::vector<int>>& actions) {
  if (done_) throw ContractViolation("BimatrixEnv: episode is done");
  const int r = actions.at(0).at(0);
  const int c = actions.at(1).at(0);
  done_ = true;
  return {{payoff_row_.at(r).at(c), payoff_col_.at(r).at(c)}, true};
}

ConstantRewardEnv::ConstantRewardEnv(int n_roles, int horizon, double reward,
                                     double discount)
    : horizon_(horizon), reward_(reward) {
  for (int k = 0; k < n_roles; ++k) {
    roles_.push_back({"role_" + std::to_string(k),
                      {AgentType::kGeneric, 1, 0, {2}, {4}}});
    agents_.push_back({k, "agent_" + std::to_string(k), discount});
  }
}

void ConstantRewardEnv::Reset(std::uint64_t) {
  t_ = 0;
  ++episodes_;
}

std::vector<std::vector<double>> ConstantRewardEnv::PolicyInputs() const {
  return std::vector<std::vector<double>>(agents_.size(),
                                          {static_cast<double>(t_)});
}

EnvStep ConstantRewardEnv::Step(const std::vector<std::vector<int>>&) {
  if (t_ >= horizon_) throw ContractViolation("ConstantRewardEnv: done");
  ++t_;
  return {std::vector<double>(agents_.size(), reward_), t_ >= horizon_};
}

BanditEnv::BanditEnv(std::vector<double> rewards, std::vector<int> hidden)
    : rewards_(std::move(rewards)) {
  roles_ = {{"bandit",
             {AgentType::kGeneric, 1, 0,
              {static_cast<int>(rewards_.size())}, hidden}}};
  agents_ = {{0, "bandit", 0.99}};
}

void BanditEnv::Reset(std::uint64_t seed) {
  context_ = UnitFromBits(SplitMix64(seed)) < 0.5 ? -1.0 : 1.0;
}

std::vector<std::vector<double>> BanditEnv::PolicyInputs() const {
  return {{context_}};
}

EnvStep BanditEnv::Step(const std::vector<std::vector<int>>& actions) {
  return {{rewards_.at(actions.at(0).at(0))}, true};
}

}  // namespace econgame

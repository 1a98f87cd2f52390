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
#ifndef ECONGAME_RL_GAME_ENV_H_
#define ECONGAME_RL_GAME_ENV_H_

// Environment surface seen by the learners. A role is one player of the
// empirical game and owns one shared policy; several agents may play the
// same role (e.g. every household uses the household policy).

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "econgame/policy/policy.h"

namespace econgame {

struct RoleSpec {
  std::string name;
  PolicySpec policy;
};

struct AgentSlot {
  int role = 0;
  std::string label;
  double discount = 0.99;
};

struct EnvStep {
  std::vector<double> rewards;  // per agent
  bool done = false;
};

class MultiAgentEnv {
 public:
  virtual ~MultiAgentEnv() = default;

  virtual const std::vector<RoleSpec>& roles() const = 0;
  virtual const std::vector<AgentSlot>& agents() const = 0;
  virtual int horizon() const = 0;

  virtual void Reset(std::uint64_t seed) = 0;
  // Policy input (normalized observation followed by heterogeneity features)
  // for every agent at the current step.
  virtual std::vector<std::vector<double>> PolicyInputs() const = 0;
  // One vector of head indices per agent.
  virtual EnvStep Step(const std::vector<std::vector<int>>& actions) = 0;
};

using EnvFactory = std::function<std::unique_ptr<MultiAgentEnv>()>;

}  // namespace econgame

#endif  // ECONGAME_RL_GAME_ENV_H_

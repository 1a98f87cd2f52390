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
#ifndef ECONGAME_EGTA_NASH_H_
#define ECONGAME_EGTA_NASH_H_

// Approximate Nash equilibria of n-player general-sum empirical games.

#include <cstdint>
#include <string>

#include "econgame/egta/game.h"

namespace econgame {

struct NashConfig {
  int iterations = 10000;
  double step_size = 1e-2;
  int restarts = 20;
  double tolerance = 1e-3;  // empirical-game regret, in utility units
  std::uint64_t seed = 0;
  // Support combinations tried by the enumeration fallback.
  long max_support_combinations = 5000;
};

void Validate(const NashConfig& config);

struct NashResult {
  MixedStrategyProfile profile;
  double regret = 0.0;
  bool approximate = false;  // tolerance not met
  std::string method;        // pure, replicator, polished, support
};

// Order of attempts: pure-profile scan, projected replicator dynamics from a
// uniform start and random restarts (each candidate polished by Newton's
// method on the indifference conditions of its support), then support
// enumeration for small games. Returns the lowest-regret candidate seen.
// Throws ContractViolation if any cell is pending.
NashResult SolveNash(const EmpiricalGame& game, const NashConfig& config);

}  // namespace econgame

#endif  // ECONGAME_EGTA_NASH_H_

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
#ifndef ECONGAME_RL_GAE_H_
#define ECONGAME_RL_GAE_H_

#include <cstdint>
#include <span>
#include <vector>

namespace econgame {

struct Advantages {
  std::vector<double> advantages;
  std::vector<double> returns;  // advantages + values
};

// Generalized advantage estimation over concatenated trajectories.
// episode_end[t] marks the last step of a trajectory; the value after it is
// taken as zero (finite horizon).
Advantages ComputeAdvantages(std::span<const double> rewards,
                             std::span<const double> values,
                             std::span<const std::uint8_t> episode_end,
                             double discount, double gae_lambda);

// Rescales to mean 0 and standard deviation 1 (population). A batch with
// zero spread is only centered.
void Standardize(std::vector<double>& x);

}  // namespace econgame

#endif  // ECONGAME_RL_GAE_H_

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
#include "econgame/rl/gae.h"

#include <cmath>
#include <numeric>

#include "econgame/core/errors.h"

namespace econgame {

Advantages ComputeAdvantages(std::span<const double> rewards,
                             std::span<const double> values,
                             std::span<const std::uint8_t> episode_end,
                             double discount, double gae_lambda) {
  const std::size_t n = rewards.size();
  if (values.size() != n || episode_end.size() != n) {
    throw ContractViolation("ComputeAdvantages: misaligned arrays");
  }
  if (n > 0 && !episode_end[n - 1]) {
    throw ContractViolation("ComputeAdvantages: last step must end a "
                            "trajectory");
  }
  Advantages out;
  out.advantages.assign(n, 0.0);
  out.returns.assign(n, 0.0);
  double running = 0.0;
  for (std::size_t t = n; t-- > 0;) {
    const bool last = episode_end[t] != 0;
    const double next_value = last ? 0.0 : values[t + 1];
    const double delta = rewards[t] + discount * next_value - values[t];
    running = delta + (last ? 0.0 : discount * gae_lambda * running);
    out.advantages[t] = running;
    out.returns[t] = running + values[t];
  }
  return out;
}

void Standardize(std::vector<double>& x) {
  if (x.empty()) return;
  const double mean =
      std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  double var = 0.0;
  for (double v : x) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / static_cast<double>(x.size()));
  for (double& v : x) v = sd > 1e-12 ? (v - mean) / sd : v - mean;
}

}  // namespace econgame

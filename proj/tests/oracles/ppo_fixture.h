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
#ifndef ECONGAME_TESTS_ORACLES_PPO_FIXTURE_H_
#define ECONGAME_TESTS_ORACLES_PPO_FIXTURE_H_

// Random learner batches for a small network, with old log-probabilities
// perturbed so that some rows sit on each side of the clipping range.

#include <vector>

#include "econgame/core/rng.h"
#include "econgame/policy/policy.h"
#include "econgame/rl/ppo.h"

namespace oracle {

inline econgame::PolicySpec TinySpec() {
  return {econgame::AgentType::kGeneric, 3, 2, {3, 4}, {4}};
}

inline econgame::RolloutBatch RandomBatch(const econgame::PolicyParams& p,
                                          int rows, std::uint64_t seed,
                                          double log_ratio_spread = 0.4) {
  using namespace econgame;
  SplitMixStream rng(seed);
  const PolicySpec& spec = p.spec;
  RolloutBatch b;
  b.inputs.resize(rows, spec.input_dim());
  b.actions.resize(rows, static_cast<Eigen::Index>(spec.action_dims.size()));
  for (int r = 0; r < rows; ++r) {
    for (int k = 0; k < spec.input_dim(); ++k) {
      b.inputs(r, k) = 2 * rng.Uniform() - 1;
    }
    for (std::size_t h = 0; h < spec.action_dims.size(); ++h) {
      b.actions(r, static_cast<Eigen::Index>(h)) =
          static_cast<int>(rng() % spec.action_dims[h]);
    }
  }
  const BatchEvaluation e = EvaluateBatch(p, b.inputs, b.actions);
  for (int r = 0; r < rows; ++r) {
    b.old_log_probs.push_back(e.log_probs[r] +
                              log_ratio_spread * (2 * rng.Uniform() - 1));
    b.old_values.push_back(e.values[r]);
    b.advantages.push_back(2 * rng.Uniform() - 1);
    b.returns.push_back(e.values[r] + 2 * rng.Uniform() - 1);
  }
  return b;
}

}  // namespace oracle

#endif  // ECONGAME_TESTS_ORACLES_PPO_FIXTURE_H_

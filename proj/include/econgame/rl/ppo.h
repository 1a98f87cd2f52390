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
#ifndef ECONGAME_RL_PPO_H_
#define ECONGAME_RL_PPO_H_

// Clipped-surrogate policy optimization for one policy.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "econgame/policy/policy.h"

namespace econgame {

enum class OptimizerKind { kAdam, kSgd };

struct TrainConfig {
  // Per role, in role order (household, firm, central bank, government for
  // the economy).
  std::vector<double> learning_rates{2e-3, 2e-3, 2e-3, 5e-3};
  int episodes = 100;
  double clip_epsilon = 0.2;
  double gae_lambda = 0.95;
  int epochs_per_batch = 4;
  int minibatch_size = 256;
  double entropy_coef = 0.01;
  double value_coef = 0.5;
  int episodes_per_batch = 10;
  bool normalize_advantages = true;
  OptimizerKind optimizer = OptimizerKind::kAdam;
  std::vector<int> hidden{64, 64};
  int moving_average_window = 50;
  std::uint64_t seed = 0;

  double learning_rate(int role) const;
};

// Learning rates of the two training schemes for the economy.
std::vector<double> PsroLearningRates();
std::vector<double> ImarlLearningRates();

// Throws ConfigError on out-of-range values.
void Validate(const TrainConfig& config);

// Transitions of one agent over one episode.
struct Trajectory {
  std::vector<std::vector<double>> inputs;
  std::vector<std::vector<int>> actions;
  std::vector<double> log_probs;
  std::vector<double> values;
  std::vector<double> rewards;
  double discount = 0.99;
};

// Flattened, learner-ready batch.
struct RolloutBatch {
  RowMatrix inputs;
  IndexMatrix actions;
  std::vector<double> old_log_probs;
  std::vector<double> old_values;
  std::vector<double> advantages;
  std::vector<double> returns;
  std::size_t size() const { return old_log_probs.size(); }
};

// Runs GAE per trajectory (each with its own discount) and, if requested,
// standardizes advantages over the whole batch.
RolloutBatch BuildBatch(std::span<const Trajectory> trajectories,
                        double gae_lambda, bool normalize_advantages);

struct PpoLossTerms {
  double total = 0.0;
  double policy = 0.0;
  double value = 0.0;
  double entropy = 0.0;
  double clip_fraction = 0.0;
  double approx_kl = 0.0;
};

struct PpoCoefficients {
  double clip_epsilon = 0.2;  // +infinity disables clipping
  double value_coef = 0.5;
  double entropy_coef = 0.01;
};

// Mean over `rows` of -min(r A, clip(r, 1-eps, 1+eps) A)
// + value_coef (v - R)^2 - entropy_coef H. If `gradient` is non-null the
// exact gradient is written into it.
PpoLossTerms PpoLoss(const PolicyParams& params, const RolloutBatch& batch,
                     std::span<const std::size_t> rows,
                     const PpoCoefficients& coefficients,
                     std::vector<double>* gradient);

struct AdamState {
  std::vector<double> m, v;
  long step = 0;
};

struct PpoDiagnostics {
  PpoLossTerms first_minibatch;  // before any update
  PpoLossTerms last_minibatch;   // of the final epoch, before its step
  int gradient_steps = 0;
};

struct PpoUpdateResult {
  PolicyParams params;
  PpoDiagnostics diagnostics;
};

// epochs_per_batch passes over shuffled minibatches. Returns a new parameter
// version; the input is untouched. Throws TrainingError with a diagnostics
// dump if the loss becomes non-finite.
PpoUpdateResult PpoUpdate(const PolicyParams& params, const RolloutBatch& batch,
                          const TrainConfig& config, double learning_rate,
                          AdamState& optimizer, std::uint64_t shuffle_seed);

}  // namespace econgame

#endif  // ECONGAME_RL_PPO_H_

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
#include "econgame/rl/ppo.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "econgame/core/errors.h"
#include "econgame/core/rng.h"
#include "econgame/rl/gae.h"

namespace econgame {
namespace {

constexpr double kAdamBeta1 = 0.9;
constexpr double kAdamBeta2 = 0.999;
constexpr double kAdamEps = 1e-8;

std::string Dump(const PpoLossTerms& t, const PolicyParams& p) {
  double norm = 0.0;
  bool finite = true;
  for (double v : p.values) {
    norm += v * v;
    finite = finite && std::isfinite(v);
  }
  std::ostringstream out;
  out << "non-finite PPO loss: total=" << t.total << " policy=" << t.policy
      << " value=" << t.value << " entropy=" << t.entropy
      << " approx_kl=" << t.approx_kl << " clip_fraction=" << t.clip_fraction
      << " param_norm=" << std::sqrt(norm)
      << " params_finite=" << (finite ? "yes" : "no")
      << " agent_type=" << AgentTypeName(p.spec.agent_type);
  return out.str();
}

}  // namespace

double TrainConfig::learning_rate(int role) const {
  if (role < 0 || role >= static_cast<int>(learning_rates.size())) {
    throw ConfigError("training.learning_rates",
                      "no learning rate for role " + std::to_string(role));
  }
  return learning_rates[role];
}

std::vector<double> PsroLearningRates() { return {2e-3, 2e-3, 2e-3, 5e-3}; }
std::vector<double> ImarlLearningRates() { return {2e-3, 5e-3, 5e-3, 1e-2}; }

void Validate(const TrainConfig& c) {
  for (double lr : c.learning_rates) {
    if (!(lr >= 0.0)) {
      throw ConfigError("training.learning_rates", "must be >= 0");
    }
  }
  if (c.episodes < 1) throw ConfigError("training.episodes", "must be >= 1");
  if (!(c.clip_epsilon > 0.0)) {
    throw ConfigError("training.clip_epsilon", "must be > 0");
  }
  if (!(c.gae_lambda >= 0.0 && c.gae_lambda <= 1.0)) {
    throw ConfigError("training.gae_lambda", "must lie in [0, 1]");
  }
  if (c.epochs_per_batch < 1) {
    throw ConfigError("training.epochs_per_batch", "must be >= 1");
  }
  if (c.minibatch_size < 1) {
    throw ConfigError("training.minibatch_size", "must be >= 1");
  }
  if (c.episodes_per_batch < 1) {
    throw ConfigError("training.episodes_per_batch", "must be >= 1");
  }
  if (c.moving_average_window < 1) {
    throw ConfigError("training.moving_average_window", "must be >= 1");
  }
}

RolloutBatch BuildBatch(std::span<const Trajectory> trajectories,
                        double gae_lambda, bool normalize_advantages) {
  std::size_t rows = 0;
  for (const Trajectory& t : trajectories) rows += t.rewards.size();
  RolloutBatch batch;
  if (rows == 0) return batch;
  const auto& first = trajectories.front();
  const Eigen::Index in_dim = static_cast<Eigen::Index>(first.inputs[0].size());
  const Eigen::Index heads = static_cast<Eigen::Index>(first.actions[0].size());
  batch.inputs.resize(static_cast<Eigen::Index>(rows), in_dim);
  batch.actions.resize(static_cast<Eigen::Index>(rows), heads);
  Eigen::Index r = 0;
  for (const Trajectory& t : trajectories) {
    std::vector<std::uint8_t> ends(t.rewards.size(), 0);
    if (!ends.empty()) ends.back() = 1;
    Advantages adv = ComputeAdvantages(t.rewards, t.values, ends, t.discount,
                                       gae_lambda);
    for (std::size_t k = 0; k < t.rewards.size(); ++k, ++r) {
      for (Eigen::Index c = 0; c < in_dim; ++c) {
        batch.inputs(r, c) = t.inputs[k][c];
      }
      for (Eigen::Index h = 0; h < heads; ++h) {
        batch.actions(r, h) = t.actions[k][h];
      }
    }
    batch.old_log_probs.insert(batch.old_log_probs.end(), t.log_probs.begin(),
                               t.log_probs.end());
    batch.old_values.insert(batch.old_values.end(), t.values.begin(),
                            t.values.end());
    batch.advantages.insert(batch.advantages.end(), adv.advantages.begin(),
                            adv.advantages.end());
    batch.returns.insert(batch.returns.end(), adv.returns.begin(),
                         adv.returns.end());
  }
  if (normalize_advantages) Standardize(batch.advantages);
  return batch;
}

PpoLossTerms PpoLoss(const PolicyParams& params, const RolloutBatch& batch,
                     std::span<const std::size_t> rows,
                     const PpoCoefficients& k, std::vector<double>* gradient) {
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  RowMatrix inputs(n, batch.inputs.cols());
  IndexMatrix actions(n, batch.actions.cols());
  for (Eigen::Index b = 0; b < n; ++b) {
    inputs.row(b) = batch.inputs.row(static_cast<Eigen::Index>(rows[b]));
    actions.row(b) = batch.actions.row(static_cast<Eigen::Index>(rows[b]));
  }
  const BatchEvaluation eval = EvaluateBatch(params, inputs, actions);

  PpoLossTerms terms;
  std::vector<double> d_logp(n), d_entropy(n), d_value(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (Eigen::Index b = 0; b < n; ++b) {
    const std::size_t row = rows[b];
    const double adv = batch.advantages[row];
    const double log_ratio = eval.log_probs[b] - batch.old_log_probs[row];
    const double ratio = std::exp(log_ratio);
    const double clipped =
        std::clamp(ratio, 1.0 - k.clip_epsilon, 1.0 + k.clip_epsilon);
    const double surr1 = ratio * adv;
    const double surr2 = clipped * adv;
    terms.policy -= std::min(surr1, surr2) * inv_n;
    const double err = eval.values[b] - batch.returns[row];
    terms.value += err * err * inv_n;
    terms.entropy += eval.entropies[b] * inv_n;
    terms.approx_kl += ((ratio - 1.0) - log_ratio) * inv_n;
    if (std::abs(ratio - 1.0) > k.clip_epsilon) terms.clip_fraction += inv_n;
    d_logp[b] = surr1 <= surr2 ? -adv * ratio * inv_n : 0.0;
    d_value[b] = 2.0 * k.value_coef * err * inv_n;
    d_entropy[b] = -k.entropy_coef * inv_n;
  }
  terms.total =
      terms.policy + k.value_coef * terms.value - k.entropy_coef * terms.entropy;
  if (gradient != nullptr) {
    gradient->assign(params.values.size(), 0.0);
    const BatchCotangents cot{d_logp, d_entropy, d_value};
    EvaluateBatch(params, inputs, actions, &cot, gradient);
  }
  return terms;
}

PpoUpdateResult PpoUpdate(const PolicyParams& params, const RolloutBatch& batch,
                          const TrainConfig& config, double learning_rate,
                          AdamState& optimizer, std::uint64_t shuffle_seed) {
  PpoUpdateResult result{params, {}};
  const std::size_t n = batch.size();
  if (n == 0) return result;
  PolicyParams& p = result.params;
  const PpoCoefficients coef{config.clip_epsilon, config.value_coef,
                             config.entropy_coef};
  if (optimizer.m.size() != p.values.size()) {
    optimizer.m.assign(p.values.size(), 0.0);
    optimizer.v.assign(p.values.size(), 0.0);
    optimizer.step = 0;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  SplitMixStream rng(shuffle_seed);
  std::vector<double> grad;
  const std::size_t mb = static_cast<std::size_t>(config.minibatch_size);
  bool first = true;
  for (int epoch = 0; epoch < config.epochs_per_batch; ++epoch) {
    for (std::size_t k = n; k > 1; --k) {
      std::swap(order[k - 1], order[rng() % k]);
    }
    for (std::size_t start = 0; start < n; start += mb) {
      const std::span<const std::size_t> rows(
          order.data() + start, std::min(mb, n - start));
      const PpoLossTerms terms = PpoLoss(p, batch, rows, coef, &grad);
      if (!std::isfinite(terms.total)) throw TrainingError(Dump(terms, p));
      if (first) {
        result.diagnostics.first_minibatch = terms;
        first = false;
      }
      result.diagnostics.last_minibatch = terms;
      if (config.optimizer == OptimizerKind::kSgd) {
        for (std::size_t i = 0; i < p.values.size(); ++i) {
          p.values[i] -= learning_rate * grad[i];
        }
      } else {
        ++optimizer.step;
        const double c1 = 1.0 - std::pow(kAdamBeta1, optimizer.step);
        const double c2 = 1.0 - std::pow(kAdamBeta2, optimizer.step);
        for (std::size_t i = 0; i < p.values.size(); ++i) {
          optimizer.m[i] = kAdamBeta1 * optimizer.m[i] + (1 - kAdamBeta1) * grad[i];
          optimizer.v[i] =
              kAdamBeta2 * optimizer.v[i] + (1 - kAdamBeta2) * grad[i] * grad[i];
          p.values[i] -= learning_rate * (optimizer.m[i] / c1) /
                         (std::sqrt(optimizer.v[i] / c2) + kAdamEps);
        }
      }
      ++result.diagnostics.gradient_steps;
    }
  }
  return result;
}

}  // namespace econgame

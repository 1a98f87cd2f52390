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
#ifndef ECONGAME_POLICY_POLICY_H_
#define ECONGAME_POLICY_POLICY_H_

// Per-agent-type stochastic policy: a tanh multilayer perceptron over the
// observation concatenated with the agent's heterogeneity features, a set of
// independent categorical heads (one per action dimension) and a scalar value
// head. Parameters live in one flat vector; see ShapeTable for the layout.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "econgame/core/rng.h"

namespace econgame {

enum class AgentType { kHousehold, kFirm, kCentralBank, kGovernment, kGeneric };

std::string_view AgentTypeName(AgentType type);
// Throws ConfigError for unknown names.
AgentType ParseAgentType(std::string_view name);

struct PolicySpec {
  AgentType agent_type = AgentType::kGeneric;
  int obs_dim = 0;
  int hetero_dim = 0;
  std::vector<int> action_dims;
  std::vector<int> hidden{64, 64};

  int input_dim() const { return obs_dim + hetero_dim; }
  int total_logits() const;
  bool operator==(const PolicySpec&) const = default;
};

// Throws ShapeError on non-positive sizes or heads with fewer than 2 actions.
void Validate(const PolicySpec& spec);

struct LayerShape {
  std::string name;
  int rows = 0;
  int cols = 0;
  std::size_t offset = 0;
  std::size_t size() const { return static_cast<std::size_t>(rows) * cols; }
};

// hidden{k}.weight/.bias for each hidden layer, then policy.weight/.bias
// (all heads stacked) and value.weight/.bias. Weights are row-major
// (rows = outputs).
std::vector<LayerShape> ShapeTable(const PolicySpec& spec);
std::size_t ParameterCount(const PolicySpec& spec);

struct PolicyParams {
  PolicySpec spec;
  std::vector<double> values;
};

// Glorot-uniform hidden and value weights, policy-head weights shrunk by 100x
// so a fresh policy is close to uniform, zero biases.
PolicyParams InitPolicy(const PolicySpec& spec, std::uint64_t seed);

// A policy with all parameters zero: uniform over every head, value 0.
PolicyParams UniformPolicy(const PolicySpec& spec);

struct ActionSample {
  std::vector<int> indices;
  double log_prob = 0.0;  // sum over heads
  double value = 0.0;
};

// Samples every head. In deterministic mode each head takes its argmax
// (lowest index on ties). Throws ContractViolation for a wrong-length or
// non-finite input.
ActionSample Act(const PolicyParams& params, std::span<const double> input,
                 SplitMixStream& rng, bool deterministic = false);

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using IndexMatrix =
    Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct BatchEvaluation {
  std::vector<double> log_probs;   // per row, summed over heads
  std::vector<double> entropies;   // per row, summed over heads
  std::vector<double> values;      // per row
};

// Weights of a scalar objective sum_b (lp[b]*log_prob_b + ent[b]*entropy_b +
// val[b]*value_b) whose parameter gradient EvaluateBatch accumulates.
struct BatchCotangents {
  std::span<const double> log_prob;
  std::span<const double> entropy;
  std::span<const double> value;
};

// Rows of `inputs` are samples; rows of `actions` hold one index per head.
// When `cotangents` is given, the gradient of the weighted objective is
// added into `*gradient` (resized to the parameter count if empty). Throws
// ShapeError on mismatched shapes.
BatchEvaluation EvaluateBatch(const PolicyParams& params,
                              const RowMatrix& inputs,
                              const IndexMatrix& actions,
                              const BatchCotangents* cotangents = nullptr,
                              std::vector<double>* gradient = nullptr);

// Per-head action probabilities for one input (head-major, concatenated).
std::vector<double> ActionProbabilities(const PolicyParams& params,
                                        std::span<const double> input);

}  // namespace econgame

#endif  // ECONGAME_POLICY_POLICY_H_

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
#include "econgame/policy/policy.h"

#include <cmath>
#include <limits>
#include <numeric>

#include "econgame/core/errors.h"

namespace econgame {
namespace {

using ConstMap = Eigen::Map<const RowMatrix>;
using MutMap = Eigen::Map<RowMatrix>;
using Eigen::MatrixXd;

ConstMap View(const PolicyParams& p, const LayerShape& s) {
  return ConstMap(p.values.data() + s.offset, s.rows, s.cols);
}

// Activations of every layer for a batch laid out one sample per column.
struct Forward {
  std::vector<MatrixXd> activations;  // [0] is the input
  MatrixXd logits;                    // total_logits x B
  MatrixXd log_softmax;               // per head, same layout as logits
  Eigen::RowVectorXd values;
};

Forward RunForward(const PolicyParams& params, const MatrixXd& input,
                   const std::vector<LayerShape>& shapes) {
  const PolicySpec& spec = params.spec;
  Forward f;
  f.activations.push_back(input);
  std::size_t k = 0;
  for (std::size_t layer = 0; layer < spec.hidden.size(); ++layer, k += 2) {
    MatrixXd z = View(params, shapes[k]) * f.activations.back();
    z.colwise() += View(params, shapes[k + 1]).transpose().col(0);
    f.activations.push_back(z.array().tanh().matrix());
  }
  const MatrixXd& last = f.activations.back();
  f.logits = View(params, shapes[k]) * last;
  f.logits.colwise() += View(params, shapes[k + 1]).transpose().col(0);
  f.values = (View(params, shapes[k + 2]) * last).row(0);
  f.values.array() += params.values[shapes[k + 3].offset];
  f.log_softmax.resize(f.logits.rows(), f.logits.cols());
  int offset = 0;
  for (int dim : spec.action_dims) {
    auto block = f.logits.middleRows(offset, dim);
    for (Eigen::Index b = 0; b < block.cols(); ++b) {
      const double max = block.col(b).maxCoeff();
      const double lse =
          max + std::log((block.col(b).array() - max).exp().sum());
      f.log_softmax.block(offset, b, dim, 1) = block.col(b).array() - lse;
    }
    offset += dim;
  }
  return f;
}

void CheckInput(const PolicySpec& spec, std::span<const double> input) {
  if (static_cast<int>(input.size()) != spec.input_dim()) {
    throw ContractViolation("policy input has length " +
                            std::to_string(input.size()) + ", expected " +
                            std::to_string(spec.input_dim()));
  }
  for (double x : input) {
    if (!std::isfinite(x)) throw ContractViolation("non-finite policy input");
  }
}

}  // namespace

std::string_view AgentTypeName(AgentType type) {
  switch (type) {
    case AgentType::kHousehold: return "household";
    case AgentType::kFirm: return "firm";
    case AgentType::kCentralBank: return "central_bank";
    case AgentType::kGovernment: return "government";
    case AgentType::kGeneric: return "generic";
  }
  return "generic";
}

AgentType ParseAgentType(std::string_view name) {
  for (AgentType t : {AgentType::kHousehold, AgentType::kFirm,
                      AgentType::kCentralBank, AgentType::kGovernment,
                      AgentType::kGeneric}) {
    if (AgentTypeName(t) == name) return t;
  }
  throw ConfigError("agent_type", "unknown agent type '" + std::string(name) +
                                      "'");
}

int PolicySpec::total_logits() const {
  return std::accumulate(action_dims.begin(), action_dims.end(), 0);
}

void Validate(const PolicySpec& spec) {
  if (spec.obs_dim < 0 || spec.hetero_dim < 0 || spec.input_dim() < 1) {
    throw ShapeError("policy spec: input dimension must be positive");
  }
  if (spec.action_dims.empty()) throw ShapeError("policy spec: no heads");
  for (int d : spec.action_dims) {
    if (d < 2) throw ShapeError("policy spec: head with fewer than 2 actions");
  }
  for (int h : spec.hidden) {
    if (h < 1) throw ShapeError("policy spec: empty hidden layer");
  }
}

std::vector<LayerShape> ShapeTable(const PolicySpec& spec) {
  std::vector<LayerShape> table;
  std::size_t offset = 0;
  const auto add = [&](std::string name, int rows, int cols) {
    table.push_back({std::move(name), rows, cols, offset});
    offset += table.back().size();
  };
  int fan_in = spec.input_dim();
  for (std::size_t k = 0; k < spec.hidden.size(); ++k) {
    const std::string prefix = "hidden" + std::to_string(k);
    add(prefix + ".weight", spec.hidden[k], fan_in);
    add(prefix + ".bias", 1, spec.hidden[k]);
    fan_in = spec.hidden[k];
  }
  add("policy.weight", spec.total_logits(), fan_in);
  add("policy.bias", 1, spec.total_logits());
  add("value.weight", 1, fan_in);
  add("value.bias", 1, 1);
  return table;
}

std::size_t ParameterCount(const PolicySpec& spec) {
  const auto table = ShapeTable(spec);
  return table.back().offset + table.back().size();
}

PolicyParams InitPolicy(const PolicySpec& spec, std::uint64_t seed) {
  Validate(spec);
  PolicyParams p{spec, std::vector<double>(ParameterCount(spec), 0.0)};
  SplitMixStream rng(MixKey({seed, 0x706F6C696379ULL}));
  for (const LayerShape& s : ShapeTable(spec)) {
    if (s.rows == 1 && s.name.ends_with(".bias")) continue;
    double limit = std::sqrt(6.0 / (s.rows + s.cols));
    if (s.name == "policy.weight") limit *= 0.01;
    for (std::size_t k = 0; k < s.size(); ++k) {
      p.values[s.offset + k] = limit * (2.0 * rng.Uniform() - 1.0);
    }
  }
  return p;
}

PolicyParams UniformPolicy(const PolicySpec& spec) {
  Validate(spec);
  return PolicyParams{spec, std::vector<double>(ParameterCount(spec), 0.0)};
}

std::vector<double> ActionProbabilities(const PolicyParams& params,
                                        std::span<const double> input) {
  CheckInput(params.spec, input);
  const Eigen::Map<const Eigen::VectorXd> x(input.data(), input.size());
  const Forward f = RunForward(params, x, ShapeTable(params.spec));
  std::vector<double> probs(f.log_softmax.rows());
  for (Eigen::Index k = 0; k < f.log_softmax.rows(); ++k) {
    probs[k] = std::exp(f.log_softmax(k, 0));
  }
  return probs;
}

ActionSample Act(const PolicyParams& params, std::span<const double> input,
                 SplitMixStream& rng, bool deterministic) {
  CheckInput(params.spec, input);
  const Eigen::Map<const Eigen::VectorXd> x(input.data(), input.size());
  const Forward f = RunForward(params, x, ShapeTable(params.spec));
  ActionSample sample;
  sample.value = f.values(0);
  int offset = 0;
  for (int dim : params.spec.action_dims) {
    int chosen = 0;
    if (deterministic) {
      for (int a = 1; a < dim; ++a) {
        if (f.log_softmax(offset + a, 0) > f.log_softmax(offset + chosen, 0)) {
          chosen = a;
        }
      }
    } else {
      const double u = rng.Uniform();
      double cumulative = 0.0;
      chosen = dim - 1;
      for (int a = 0; a < dim; ++a) {
        cumulative += std::exp(f.log_softmax(offset + a, 0));
        if (u < cumulative) {
          chosen = a;
          break;
        }
      }
    }
    sample.indices.push_back(chosen);
    sample.log_prob += f.log_softmax(offset + chosen, 0);
    offset += dim;
  }
  return sample;
}

BatchEvaluation EvaluateBatch(const PolicyParams& params,
                              const RowMatrix& inputs,
                              const IndexMatrix& actions,
                              const BatchCotangents* cotangents,
                              std::vector<double>* gradient) {
  const PolicySpec& spec = params.spec;
  const Eigen::Index batch = inputs.rows();
  if (inputs.cols() != spec.input_dim()) {
    throw ShapeError("EvaluateBatch: inputs have " +
                     std::to_string(inputs.cols()) + " columns, expected " +
                     std::to_string(spec.input_dim()));
  }
  if (actions.rows() != batch ||
      actions.cols() != static_cast<Eigen::Index>(spec.action_dims.size())) {
    throw ShapeError("EvaluateBatch: action matrix shape mismatch");
  }
  if (params.values.size() != ParameterCount(spec)) {
    throw ShapeError("EvaluateBatch: parameter vector has wrong length");
  }
  const auto shapes = ShapeTable(spec);
  const Forward f = RunForward(params, inputs.transpose(), shapes);

  BatchEvaluation out;
  out.log_probs.assign(batch, 0.0);
  out.entropies.assign(batch, 0.0);
  out.values.resize(batch);
  for (Eigen::Index b = 0; b < batch; ++b) out.values[b] = f.values(b);

  MatrixXd dlogits;
  if (cotangents != nullptr) dlogits = MatrixXd::Zero(f.logits.rows(), batch);

  int offset = 0;
  for (std::size_t h = 0; h < spec.action_dims.size(); ++h) {
    const int dim = spec.action_dims[h];
    for (Eigen::Index b = 0; b < batch; ++b) {
      const int a = actions(b, static_cast<Eigen::Index>(h));
      if (a < 0 || a >= dim) {
        throw ShapeError("EvaluateBatch: action index out of range in head " +
                         std::to_string(h));
      }
      const auto logp = f.log_softmax.col(b).segment(offset, dim).array();
      const Eigen::ArrayXd p = logp.exp();
      const double entropy = -(p * logp).sum();
      out.log_probs[b] += logp(a);
      out.entropies[b] += entropy;
      if (cotangents != nullptr) {
        auto g = dlogits.col(b).segment(offset, dim).array();
        const double w_lp = cotangents->log_prob.empty()
                                ? 0.0 : cotangents->log_prob[b];
        const double w_ent = cotangents->entropy.empty()
                                 ? 0.0 : cotangents->entropy[b];
        g -= w_lp * p;
        g(a) += w_lp;
        g -= w_ent * p * (logp + entropy);
      }
    }
    offset += dim;
  }
  if (cotangents == nullptr) return out;

  if (gradient->empty()) gradient->assign(params.values.size(), 0.0);
  if (gradient->size() != params.values.size()) {
    throw ShapeError("EvaluateBatch: gradient buffer has wrong length");
  }
  const auto grad_view = [&](const LayerShape& s) {
    return MutMap(gradient->data() + s.offset, s.rows, s.cols);
  };
  Eigen::RowVectorXd dvalue = Eigen::RowVectorXd::Zero(batch);
  if (!cotangents->value.empty()) {
    for (Eigen::Index b = 0; b < batch; ++b) dvalue(b) = cotangents->value[b];
  }
  const std::size_t head = 2 * spec.hidden.size();
  const MatrixXd& last = f.activations.back();
  grad_view(shapes[head]) += dlogits * last.transpose();
  grad_view(shapes[head + 1]) += dlogits.rowwise().sum().transpose();
  grad_view(shapes[head + 2]) += dvalue * last.transpose();
  (*gradient)[shapes[head + 3].offset] += dvalue.sum();

  MatrixXd dact = View(params, shapes[head]).transpose() * dlogits +
                  View(params, shapes[head + 2]).transpose() * dvalue;
  for (std::size_t layer = spec.hidden.size(); layer-- > 0;) {
    const MatrixXd& act = f.activations[layer + 1];
    const MatrixXd dz =
        (dact.array() * (1.0 - act.array().square())).matrix();
    grad_view(shapes[2 * layer]) += dz * f.activations[layer].transpose();
    grad_view(shapes[2 * layer + 1]) += dz.rowwise().sum().transpose();
    if (layer > 0) dact = View(params, shapes[2 * layer]).transpose() * dz;
  }
  return out;
}

}  // namespace econgame

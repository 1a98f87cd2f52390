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
#include "econgame/rl/oracle.h"

#include <cmath>
#include <numeric>

#include "econgame/core/errors.h"
#include "econgame/core/rng.h"
#include "econgame/policy/policy.h"

namespace econgame {
namespace {

std::vector<Trajectory> RoleTrajectories(std::vector<EpisodeRecord>& episodes,
                                         const std::vector<AgentSlot>& agents,
                                         int role) {
  std::vector<Trajectory> out;
  for (EpisodeRecord& e : episodes) {
    for (std::size_t a = 0; a < agents.size(); ++a) {
      if (agents[a].role == role) out.push_back(e.agents[a]);
    }
  }
  return out;
}

std::vector<EpisodeRecord> Collect(const EnvFactory& factory,
                                   const std::vector<EpisodeJob>& jobs,
                                   bool parallel) {
  RolloutOptions options;
  options.record = true;
  return parallel ? CollectEpisodesParallel(factory, jobs, options)
                  : CollectEpisodesSerial(factory, jobs, options);
}

}  // namespace

OpponentSampler::OpponentSampler(
    std::vector<std::vector<const PolicyParams*>> strategies,
    std::vector<std::vector<double>> probabilities)
    : strategies_(std::move(strategies)),
      probabilities_(std::move(probabilities)) {
  if (strategies_.size() != probabilities_.size()) {
    throw ContractViolation("OpponentSampler: role count mismatch");
  }
  for (std::size_t r = 0; r < strategies_.size(); ++r) {
    if (strategies_[r].size() != probabilities_[r].size()) {
      throw ContractViolation("OpponentSampler: distribution length mismatch");
    }
    if (strategies_[r].empty()) continue;
    double sum = 0.0;
    for (double p : probabilities_[r]) {
      if (!(p >= 0.0)) {
        throw ContractViolation("OpponentSampler: negative probability");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw ContractViolation("OpponentSampler: probabilities sum to " +
                              std::to_string(sum));
    }
  }
}

std::vector<int> OpponentSampler::Sample(std::uint64_t key) const {
  std::vector<int> picks(strategies_.size(), -1);
  for (std::size_t r = 0; r < strategies_.size(); ++r) {
    const auto& probs = probabilities_[r];
    if (probs.empty()) continue;
    const double u = UnitFromBits(MixKey({key, r}));
    double cumulative = 0.0;
    int chosen = static_cast<int>(probs.size()) - 1;
    // Zero-probability tail entries are never chosen.
    while (chosen > 0 && probs[chosen] == 0.0) --chosen;
    for (std::size_t k = 0; k < probs.size(); ++k) {
      cumulative += probs[k];
      if (probs[k] > 0.0 && u < cumulative) {
        chosen = static_cast<int>(k);
        break;
      }
    }
    picks[r] = chosen;
  }
  return picks;
}

PolicyParams InitialRolePolicy(const RoleSpec& role, int role_index,
                               std::uint64_t seed) {
  return InitPolicy(role.policy,
                    MixKey({seed, static_cast<std::uint64_t>(role_index),
                            0x696E6974ULL}));
}

void AppendCurve(const std::string& scheme, int epoch, int first_episode,
                 const std::vector<EpisodeRecord>& episodes,
                 const std::vector<AgentSlot>& agents,
                 const std::vector<RoleSpec>& roles, int only_role, int window,
                 std::vector<std::vector<double>>& history,
                 std::vector<CurvePoint>& curve) {
  history.resize(agents.size());
  for (std::size_t e = 0; e < episodes.size(); ++e) {
    for (std::size_t a = 0; a < agents.size(); ++a) {
      if (only_role >= 0 && agents[a].role != only_role) continue;
      auto& h = history[a];
      h.push_back(episodes[e].discounted_returns[a]);
      const std::size_t w = std::min<std::size_t>(h.size(), window);
      const double avg =
          std::accumulate(h.end() - static_cast<long>(w), h.end(), 0.0) /
          static_cast<double>(w);
      curve.push_back({scheme, epoch, first_episode + static_cast<int>(e),
                       static_cast<int>(a), roles[agents[a].role].name,
                       episodes[e].discounted_returns[a], avg});
    }
  }
}

BestResponseResult TrainBestResponse(int role, const OpponentSampler& opponents,
                                     const EnvFactory& factory,
                                     const TrainConfig& config,
                                     std::uint64_t seed, int epoch,
                                     bool parallel) {
  Validate(config);
  const auto probe = factory();
  const auto& roles = probe->roles();
  const auto& agents = probe->agents();
  const int n_roles = static_cast<int>(roles.size());
  if (opponents.num_roles() != n_roles) {
    throw ContractViolation("TrainBestResponse: sampler role count mismatch");
  }
  for (int r = 0; r < n_roles; ++r) {
    if (r != role && opponents.probabilities(r).empty()) {
      throw ContractViolation("TrainBestResponse: empty strategy set for "
                              "role " + roles[r].name);
    }
  }
  const std::uint64_t role_seed =
      MixKey({seed, static_cast<std::uint64_t>(role),
              static_cast<std::uint64_t>(epoch)});
  BestResponseResult result{InitialRolePolicy(roles[role], role, role_seed),
                            {}};
  AdamState adam;
  std::vector<std::vector<double>> history;
  const double lr = config.learning_rate(role);
  for (int start = 0, batch = 0; start < config.episodes;
       start += config.episodes_per_batch, ++batch) {
    const int count = std::min(config.episodes_per_batch,
                               config.episodes - start);
    std::vector<EpisodeJob> jobs;
    for (int k = 0; k < count; ++k) {
      const auto episode = static_cast<std::uint64_t>(start + k);
      const std::vector<int> picks =
          opponents.Sample(MixKey({role_seed, episode, 0x6F7070ULL}));
      EpisodeJob job{MixKey({role_seed, episode, 0x65706973ULL}), {}};
      for (int r = 0; r < n_roles; ++r) {
        job.role_policies.push_back(
            r == role ? &result.policy : opponents.strategy(r, picks[r]));
      }
      jobs.push_back(std::move(job));
    }
    std::vector<EpisodeRecord> episodes = Collect(factory, jobs, parallel);
    AppendCurve("psro", epoch, start, episodes, agents, roles, role,
                config.moving_average_window, history, result.curve);
    const auto trajectories = RoleTrajectories(episodes, agents, role);
    const RolloutBatch rb = BuildBatch(trajectories, config.gae_lambda,
                                       config.normalize_advantages);
    result.policy =
        PpoUpdate(result.policy, rb, config, lr, adam,
                  MixKey({role_seed, static_cast<std::uint64_t>(batch),
                          0x73687566ULL}))
            .params;
  }
  return result;
}

ImarlResult TrainImarl(const EnvFactory& factory, const TrainConfig& config,
                       bool parallel) {
  Validate(config);
  const auto probe = factory();
  const auto& roles = probe->roles();
  const auto& agents = probe->agents();
  const int n_roles = static_cast<int>(roles.size());
  ImarlResult result;
  for (int r = 0; r < n_roles; ++r) {
    result.initial.push_back(InitialRolePolicy(roles[r], r, config.seed));
  }
  result.policies = result.initial;
  std::vector<AdamState> adam(n_roles);
  std::vector<std::vector<double>> history;
  for (int start = 0, batch = 0; start < config.episodes;
       start += config.episodes_per_batch, ++batch) {
    const int count = std::min(config.episodes_per_batch,
                               config.episodes - start);
    std::vector<EpisodeJob> jobs;
    for (int k = 0; k < count; ++k) {
      EpisodeJob job{MixKey({config.seed,
                             static_cast<std::uint64_t>(start + k),
                             0x696D61726CULL}),
                     {}};
      for (int r = 0; r < n_roles; ++r) {
        job.role_policies.push_back(&result.policies[r]);
      }
      jobs.push_back(std::move(job));
    }
    std::vector<EpisodeRecord> episodes = Collect(factory, jobs, parallel);
    AppendCurve("imarl", 0, start, episodes, agents, roles, -1,
                config.moving_average_window, history, result.curve);
    std::vector<PolicyParams> next(result.policies);
#pragma omp parallel for schedule(static) if (parallel)
    for (int r = 0; r < n_roles; ++r) {
      const auto trajectories = RoleTrajectories(episodes, agents, r);
      const RolloutBatch rb = BuildBatch(trajectories, config.gae_lambda,
                                         config.normalize_advantages);
      next[r] = PpoUpdate(result.policies[r], rb, config,
                          config.learning_rate(r), adam[r],
                          MixKey({config.seed, static_cast<std::uint64_t>(r),
                                  static_cast<std::uint64_t>(batch)}))
                    .params;
    }
    result.policies = std::move(next);
  }
  return result;
}

}  // namespace econgame

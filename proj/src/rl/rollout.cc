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
#include "econgame/rl/rollout.h"

#include <omp.h>

#include <exception>

#include "econgame/core/errors.h"
#include "econgame/core/rng.h"

namespace econgame {

EpisodeRecord RunEpisode(MultiAgentEnv& env, const EpisodeJob& job,
                         const RolloutOptions& options) {
  const auto& agents = env.agents();
  const std::size_t n = agents.size();
  if (job.role_policies.size() != env.roles().size()) {
    throw ContractViolation("RunEpisode: need one policy per role");
  }
  env.Reset(job.seed);
  std::vector<SplitMixStream> streams;
  for (std::size_t a = 0; a < n; ++a) {
    streams.emplace_back(MixKey({job.seed, a, 0x726F6C6C6F7574ULL}));
  }
  EpisodeRecord record;
  record.discounted_returns.assign(n, 0.0);
  if (options.record) {
    record.agents.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      record.agents[a].discount = agents[a].discount;
    }
  }
  std::vector<double> weight(n, 1.0);
  std::vector<std::vector<int>> actions(n);
  bool done = false;
  while (!done) {
    const auto inputs = env.PolicyInputs();
    std::vector<ActionSample> samples;
    samples.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
      const PolicyParams* policy = job.role_policies[agents[a].role];
      samples.push_back(
          Act(*policy, inputs[a], streams[a], options.deterministic));
      actions[a] = samples.back().indices;
    }
    if (options.before_step) options.before_step(env);
    const EnvStep step = env.Step(actions);
    if (options.after_step) options.after_step(env);
    for (std::size_t a = 0; a < n; ++a) {
      record.discounted_returns[a] += weight[a] * step.rewards[a];
      weight[a] *= agents[a].discount;
      if (options.record) {
        Trajectory& t = record.agents[a];
        t.inputs.push_back(inputs[a]);
        t.actions.push_back(samples[a].indices);
        t.log_probs.push_back(samples[a].log_prob);
        t.values.push_back(samples[a].value);
        t.rewards.push_back(step.rewards[a]);
      }
    }
    done = step.done;
  }
  return record;
}

std::vector<EpisodeRecord> CollectEpisodesSerial(
    const EnvFactory& factory, std::span<const EpisodeJob> jobs,
    const RolloutOptions& options) {
  std::vector<EpisodeRecord> out;
  out.reserve(jobs.size());
  auto env = factory();
  for (const EpisodeJob& job : jobs) {
    out.push_back(RunEpisode(*env, job, options));
  }
  return out;
}

std::vector<EpisodeRecord> CollectEpisodesParallel(
    const EnvFactory& factory, std::span<const EpisodeJob> jobs,
    const RolloutOptions& options) {
  std::vector<EpisodeRecord> out(jobs.size());
  std::exception_ptr failure;
  const long count = static_cast<long>(jobs.size());
#pragma omp parallel
  {
    std::unique_ptr<MultiAgentEnv> env;
#pragma omp critical(econgame_env_factory)
    env = factory();
#pragma omp for schedule(dynamic)
    for (long k = 0; k < count; ++k) {
      try {
        out[k] = RunEpisode(*env, jobs[k], options);
      } catch (...) {
#pragma omp critical(econgame_rollout_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace econgame

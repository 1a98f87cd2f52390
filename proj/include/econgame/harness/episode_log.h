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
#ifndef ECONGAME_HARNESS_EPISODE_LOG_H_
#define ECONGAME_HARNESS_EPISODE_LOG_H_

// Per-step, per-agent records of test episodes and their CSV form.
//
// The file starts with the schema line "# econgame episode_log v1" and a
// header. Columns:
//   scheme, episode, step, agent_id, agent_type,
//   reward_raw, reward_normalized,
//   price, wage        firm rows: price and wage in effect this quarter
//   consumption        household: units received; firm: units sold
//   labor              household: hours worked; firm: skill-weighted hours
//   rate, tax_rate     in effect this quarter (every row)
//   inflation          over the five-quarter window ending now (every row)
//   production         firm: own output; central bank: total output
//   tax_collected      household: tax paid; government: total collected
//   savings            household: end-of-quarter savings
//   inventory          firm: end-of-quarter inventory
//   actions            decoded action values joined by ';'
//   observations       raw observation the agent acted on, joined by ';'
// Cells that do not apply to a row are empty.

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "econgame/env/scenario.h"
#include "econgame/policy/policy.h"
#include "econgame/rl/oracle.h"

namespace econgame {

inline constexpr char kEpisodeLogSchema[] = "# econgame episode_log v1";

struct EpisodeLogRow {
  std::string scheme;
  int episode = 0;
  int step = 0;
  int agent_id = 0;
  std::string agent_type;
  double reward_raw = 0.0;
  double reward_normalized = 0.0;
  std::optional<double> price, wage, consumption, labor;
  double rate = 0.0;
  double tax_rate = 0.0;
  double inflation = 0.0;
  std::optional<double> production, tax_collected, savings, inventory;
  std::vector<double> actions;
  std::vector<double> observations;
};

struct EvaluationOptions {
  std::string scheme;
  int episodes = 500;
  std::uint64_t seed = 0;
  bool deterministic = false;
  std::vector<int> hidden{64, 64};
};

// Plays one pure strategy per role (household, firm, central bank,
// government), drawn from `mix` at the start of each episode. Episode k is
// reset with a seed derived from (seed, k).
std::vector<EpisodeLogRow> EvaluateEpisodes(const ScenarioConfig& scenario,
                                            const OpponentSampler& mix,
                                            const EvaluationOptions& options);

// Fixed policies, one per role.
std::vector<EpisodeLogRow> EvaluateEpisodes(
    const ScenarioConfig& scenario,
    const std::vector<const PolicyParams*>& role_policies,
    const EvaluationOptions& options);

void WriteEpisodeLog(std::ostream& out, const std::vector<EpisodeLogRow>& rows);

// Throws ConsistencyError on a missing schema line or unexpected header.
std::vector<EpisodeLogRow> ReadEpisodeLog(std::istream& in);

}  // namespace econgame

#endif  // ECONGAME_HARNESS_EPISODE_LOG_H_

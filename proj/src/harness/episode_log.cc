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
#include "econgame/harness/episode_log.h"

#include <cstdio>
#include <numeric>
#include <sstream>

#include "econgame/core/errors.h"
#include "econgame/core/rng.h"
#include "econgame/rl/econ_env.h"
#include "econgame/rl/rollout.h"

namespace econgame {
namespace {

constexpr char kHeader[] =
    "scheme,episode,step,agent_id,agent_type,reward_raw,reward_normalized,"
    "price,wage,consumption,labor,rate,tax_rate,inflation,production,"
    "tax_collected,savings,inventory,actions,observations";

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string Opt(const std::optional<double>& v) { return v ? Num(*v) : ""; }

std::string Join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) s += ';';
    s += Num(v[k]);
  }
  return s;
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double ParseNum(const std::string& s, const char* column) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConsistencyError(std::string("episode log: bad value in column ") +
                           column + ": '" + s + "'");
  }
}

std::optional<double> ParseOpt(const std::string& s, const char* column) {
  if (s.empty()) return std::nullopt;
  return ParseNum(s, column);
}

std::vector<double> ParseList(const std::string& s, const char* column) {
  std::vector<double> out;
  if (s.empty()) return out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ';')) out.push_back(ParseNum(item, column));
  return out;
}

double Sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

}  // namespace

std::vector<EpisodeLogRow> EvaluateEpisodes(
    const ScenarioConfig& scenario,
    const std::vector<const PolicyParams*>& role_policies,
    const EvaluationOptions& options) {
  std::vector<std::vector<const PolicyParams*>> sets;
  std::vector<std::vector<double>> probabilities;
  for (const PolicyParams* p : role_policies) {
    sets.push_back({p});
    probabilities.push_back({1.0});
  }
  return EvaluateEpisodes(scenario, OpponentSampler(sets, probabilities),
                          options);
}

std::vector<EpisodeLogRow> EvaluateEpisodes(const ScenarioConfig& scenario,
                                            const OpponentSampler& mix,
                                            const EvaluationOptions& options) {
  EconEnv env(scenario, options.hidden);
  const int I = scenario.n_households();
  const int J = scenario.n_firms();
  std::vector<EpisodeLogRow> rows;
  JointObservation before;
  int episode = 0;
  RolloutOptions rollout;
  rollout.record = false;
  rollout.deterministic = options.deterministic;
  rollout.before_step = [&](const MultiAgentEnv&) {
    before = env.last_observation();
  };
  rollout.after_step = [&](const MultiAgentEnv&) {
    const StepInfo& info = env.last_step()->info;
    const DecodedActions& act = info.actions;
    const auto base = [&](int agent, const char* type) {
      EpisodeLogRow r;
      r.scheme = options.scheme;
      r.episode = episode;
      r.step = info.step;
      r.agent_id = agent;
      r.agent_type = type;
      r.reward_raw = info.raw_rewards[agent];
      r.reward_normalized = info.normalized_rewards[agent];
      r.rate = info.rate;
      r.tax_rate = info.tax_rate;
      r.inflation = info.inflation;
      return r;
    };
    for (int i = 0; i < I; ++i) {
      EpisodeLogRow r = base(i, "household");
      r.consumption = Sum(info.realized_consumption[i]);
      r.labor = Sum(act.labor[i]);
      r.tax_collected = info.taxes[i];
      r.savings = info.savings_after[i];
      r.actions = act.labor[i];
      r.actions.insert(r.actions.end(), act.consumption[i].begin(),
                       act.consumption[i].end());
      r.observations = before.households[i];
      rows.push_back(std::move(r));
    }
    for (int j = 0; j < J; ++j) {
      EpisodeLogRow r = base(I + j, "firm");
      r.price = info.prices[j];
      r.wage = info.wages[j];
      double sold = 0.0;
      for (int i = 0; i < I; ++i) sold += info.realized_consumption[i][j];
      r.consumption = sold;
      r.labor = info.skilled_labor[j];
      r.production = info.production[j];
      r.inventory = info.inventory_after[j];
      r.actions = {act.wages[j], act.prices[j]};
      r.observations = before.firms[j];
      rows.push_back(std::move(r));
    }
    EpisodeLogRow cb = base(I + J, "central_bank");
    cb.production = info.total_production;
    cb.actions = {act.rate};
    cb.observations = before.central_bank;
    rows.push_back(std::move(cb));
    EpisodeLogRow gov = base(I + J + 1, "government");
    gov.tax_collected = info.total_tax;
    gov.actions = {act.tax_rate};
    gov.actions.insert(gov.actions.end(), act.fractions.begin(),
                       act.fractions.end());
    gov.observations = before.government;
    rows.push_back(std::move(gov));
  };
  for (episode = 0; episode < options.episodes; ++episode) {
    const auto e = static_cast<std::uint64_t>(episode);
    const std::vector<int> picks =
        mix.Sample(MixKey({options.seed, e, 0x6D6978ULL}));
    EpisodeJob job{MixKey({options.seed, e, 0x6576616CULL}), {}};
    for (int r = 0; r < mix.num_roles(); ++r) {
      job.role_policies.push_back(mix.strategy(r, picks[r]));
    }
    RunEpisode(env, job, rollout);
  }
  return rows;
}

void WriteEpisodeLog(std::ostream& out,
                     const std::vector<EpisodeLogRow>& rows) {
  out << kEpisodeLogSchema << "\n" << kHeader << "\n";
  for (const EpisodeLogRow& r : rows) {
    out << r.scheme << ',' << r.episode << ',' << r.step << ',' << r.agent_id
        << ',' << r.agent_type << ',' << Num(r.reward_raw) << ','
        << Num(r.reward_normalized) << ',' << Opt(r.price) << ','
        << Opt(r.wage) << ',' << Opt(r.consumption) << ',' << Opt(r.labor)
        << ',' << Num(r.rate) << ',' << Num(r.tax_rate) << ','
        << Num(r.inflation) << ',' << Opt(r.production) << ','
        << Opt(r.tax_collected) << ',' << Opt(r.savings) << ','
        << Opt(r.inventory) << ',' << Join(r.actions) << ','
        << Join(r.observations) << '\n';
  }
}

std::vector<EpisodeLogRow> ReadEpisodeLog(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kEpisodeLogSchema) {
    throw ConsistencyError("episode log: missing schema line '" +
                           std::string(kEpisodeLogSchema) + "'");
  }
  if (!std::getline(in, line) || line != kHeader) {
    throw ConsistencyError("episode log: unexpected header");
  }
  std::vector<EpisodeLogRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c = SplitCsv(line);
    if (c.size() != 20) {
      throw ConsistencyError("episode log: expected 20 columns, got " +
                             std::to_string(c.size()));
    }
    EpisodeLogRow r;
    r.scheme = c[0];
    r.episode = static_cast<int>(ParseNum(c[1], "episode"));
    r.step = static_cast<int>(ParseNum(c[2], "step"));
    r.agent_id = static_cast<int>(ParseNum(c[3], "agent_id"));
    r.agent_type = c[4];
    r.reward_raw = ParseNum(c[5], "reward_raw");
    r.reward_normalized = ParseNum(c[6], "reward_normalized");
    r.price = ParseOpt(c[7], "price");
    r.wage = ParseOpt(c[8], "wage");
    r.consumption = ParseOpt(c[9], "consumption");
    r.labor = ParseOpt(c[10], "labor");
    r.rate = ParseNum(c[11], "rate");
    r.tax_rate = ParseNum(c[12], "tax_rate");
    r.inflation = ParseNum(c[13], "inflation");
    r.production = ParseOpt(c[14], "production");
    r.tax_collected = ParseOpt(c[15], "tax_collected");
    r.savings = ParseOpt(c[16], "savings");
    r.inventory = ParseOpt(c[17], "inventory");
    r.actions = ParseList(c[18], "actions");
    r.observations = ParseList(c[19], "observations");
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace econgame

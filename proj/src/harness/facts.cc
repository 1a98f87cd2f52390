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
#include "econgame/harness/facts.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace econgame {
namespace {

std::vector<double> Ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t k = 0; k < order.size();) {
    std::size_t end = k;
    while (end + 1 < order.size() && v[order[end + 1]] == v[order[k]]) ++end;
    const double rank = 0.5 * static_cast<double>(k + end) + 1.0;
    for (std::size_t m = k; m <= end; ++m) ranks[order[m]] = rank;
    k = end + 1;
  }
  return ranks;
}

}  // namespace

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

double SpearmanCorrelation(const std::vector<double>& x,
                           const std::vector<double>& y) {
  const auto rx = Ranks(x);
  const auto ry = Ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (rx[k] - mx) * (ry[k] - my);
    sxx += (rx[k] - mx) * (rx[k] - mx);
    syy += (ry[k] - my) * (ry[k] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

LawOfDemandResult CheckLawOfDemand(const std::vector<EpisodeLogRow>& rows,
                                   int direction) {
  // firm agent id -> episode -> (price sum, steps, consumption sum)
  struct Acc {
    double price = 0.0;
    int steps = 0;
    double consumption = 0.0;
  };
  std::vector<int> firms;
  std::map<int, std::map<int, Acc>> acc;
  for (const EpisodeLogRow& r : rows) {
    if (r.agent_type != "firm" || !r.price || !r.consumption) continue;
    if (!acc.count(r.agent_id)) firms.push_back(r.agent_id);
    Acc& a = acc[r.agent_id][r.episode];
    a.price += *r.price;
    a.consumption += *r.consumption;
    ++a.steps;
  }
  LawOfDemandResult result;
  if (firms.size() < 2) {
    result.detail = "fewer than two firms in the log";
    return result;
  }
  std::vector<double> pooled_p, pooled_c;
  for (int f : firms) {
    double p = 0.0, c = 0.0;
    for (const auto& [episode, a] : acc[f]) {
      const double mean_price = a.price / a.steps;
      p += mean_price;
      c += a.consumption;
      pooled_p.push_back(mean_price);
      pooled_c.push_back(a.consumption);
    }
    const double n = static_cast<double>(acc[f].size());
    result.mean_price.push_back(p / n);
    result.mean_consumption.push_back(c / n);
  }
  const auto [lo, hi] = std::minmax_element(result.mean_price.begin(),
                                            result.mean_price.end());
  if (*hi - *lo <= 1e-12 * std::max(1.0, std::abs(*hi))) {
    result.detail = "firm mean prices are equal";
    return result;
  }
  result.rank_correlation =
      SpearmanCorrelation(result.mean_price, result.mean_consumption);
  result.pooled_rank_correlation = SpearmanCorrelation(pooled_p, pooled_c);
  const bool ok = direction < 0 ? result.rank_correlation < 0.0
                                : result.rank_correlation > 0.0;
  result.verdict = ok ? Verdict::kPass : Verdict::kFail;
  result.detail = "rank correlation " + std::to_string(result.rank_correlation);
  return result;
}

RateInflationResult CheckRateInflationRelation(
    const std::vector<EpisodeLogRow>& rows, double target_inflation) {
  RateInflationResult result;
  double sum_above = 0.0, sum_below = 0.0;
  for (const EpisodeLogRow& r : rows) {
    if (r.agent_type != "central_bank" || r.actions.empty()) continue;
    const double next_rate = r.actions[0];
    if (r.inflation > target_inflation) {
      ++result.above;
      sum_above += next_rate;
    } else if (r.inflation < target_inflation) {
      ++result.below;
      sum_below += next_rate;
    }
  }
  if (result.above == 0 || result.below == 0) {
    result.detail = "all quarters on one side of the target";
    return result;
  }
  result.mean_rate_above = sum_above / result.above;
  result.mean_rate_below = sum_below / result.below;
  result.gap = result.mean_rate_above - result.mean_rate_below;
  result.verdict = result.gap > 0.0 ? Verdict::kPass : Verdict::kFail;
  result.detail = "rate gap " + std::to_string(result.gap);
  return result;
}

}  // namespace econgame

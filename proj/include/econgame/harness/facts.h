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
#ifndef ECONGAME_HARNESS_FACTS_H_
#define ECONGAME_HARNESS_FACTS_H_

// Directional stylized-fact checks over episode logs.

#include <string>
#include <vector>

#include "econgame/harness/episode_log.h"

namespace econgame {

enum class Verdict { kPass, kFail, kInconclusive };
const char* VerdictName(Verdict v);

struct LawOfDemandResult {
  Verdict verdict = Verdict::kInconclusive;
  // Mean over episodes of each firm's per-episode mean price and total
  // consumption; firms indexed by order of appearance.
  std::vector<double> mean_price;
  std::vector<double> mean_consumption;
  // Spearman correlation between firm mean price and mean consumption.
  double rank_correlation = 0.0;
  // Same, pooled over (episode, firm) pairs.
  double pooled_rank_correlation = 0.0;
  std::string detail;
};

// direction -1 expects higher prices to meet lower consumption. Inconclusive
// with fewer than two firms or when firm mean prices are all equal.
LawOfDemandResult CheckLawOfDemand(const std::vector<EpisodeLogRow>& rows,
                                   int direction = -1);

struct RateInflationResult {
  Verdict verdict = Verdict::kInconclusive;
  int above = 0;  // quarters with inflation above target
  int below = 0;  // quarters with inflation below target
  double mean_rate_above = 0.0;
  double mean_rate_below = 0.0;
  double gap = 0.0;  // mean_rate_above - mean_rate_below
  std::string detail;
};

// Pairs each quarter's inflation with the rate the central bank chose for
// the next quarter. Pass when the gap is positive; inconclusive when one
// side of the target is empty.
RateInflationResult CheckRateInflationRelation(
    const std::vector<EpisodeLogRow>& rows, double target_inflation);

// Average ranks (ties share the mean rank), then Pearson on the ranks.
double SpearmanCorrelation(const std::vector<double>& x,
                           const std::vector<double>& y);

}  // namespace econgame

#endif  // ECONGAME_HARNESS_FACTS_H_

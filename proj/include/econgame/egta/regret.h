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
#ifndef ECONGAME_EGTA_REGRET_H_
#define ECONGAME_EGTA_REGRET_H_

// Regret of a joint strategy against per-role deviation sets, reported in
// absolute and percentage form.

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "econgame/egta/cell_eval.h"
#include "econgame/egta/game.h"

namespace econgame {

struct RegretReport {
  std::vector<std::string> role_names;
  std::vector<double> utility;   // U_i(sigma)
  std::vector<double> absolute;  // clamped at zero
  std::vector<std::optional<double>> percentage;  // percent; empty if U ~ 0
  double total_absolute = 0.0;
  double total_utility = 0.0;
  std::optional<double> total_percentage;
  // deviation_utilities[i][k] = U_i(k, sigma_{-i}).
  std::vector<std::vector<double>> deviation_utilities;
  std::vector<std::vector<std::string>> deviation_names;
  int runs = 0;
};

// Strategies one player may switch to, each a mixture over that player's
// pure strategies in the game.
struct DeviationSet {
  std::vector<std::string> names;
  std::vector<std::vector<double>> mixtures;
};

// Every pure strategy of the player, one deviation each.
std::vector<DeviationSet> PureDeviationSets(const EmpiricalGame& game);

// Regret of `candidate` against `deviations` (all pure strategies when
// null). Only cells reachable by a unilateral deviation are read.
RegretReport RegretFromGame(const EmpiricalGame& game,
                            const MixedStrategyProfile& candidate,
                            const std::vector<std::string>& role_names,
                            const std::vector<DeviationSet>* deviations =
                                nullptr);

// Cells needed to score `candidate`: all players inside its support, or
// exactly one player i outside it at a strategy some deviation of i uses.
std::vector<std::size_t> DeviationCells(
    const EmpiricalGame& game, const MixedStrategyProfile& candidate,
    const std::vector<DeviationSet>* deviations = nullptr);

// Builds a game over `strategy_sets`, simulates only DeviationCells with
// options.runs runs each, and scores `candidate` (a profile over the
// strategy sets). If `evaluated` is non-null the partial game is returned.
RegretReport ComputeRegret(std::vector<std::vector<Strategy>> strategy_sets,
                           const MixedStrategyProfile& candidate,
                           const EnvFactory& factory,
                           const CellEvalOptions& options,
                           const std::vector<std::string>& role_names,
                           const std::vector<DeviationSet>* deviations =
                               nullptr,
                           EmpiricalGame* evaluated = nullptr);

// "3.82 (5.33%)"; "undefined" replaces the percentage when it is missing.
std::string FormatRegretCell(double absolute,
                             const std::optional<double>& percentage);

// Table with one column per role plus Total and one row per labelled report.
std::string FormatRegretTable(
    const std::vector<std::pair<std::string, RegretReport>>& rows);

// Long-form CSV: scheme,role,utility,regret,percentage.
void WriteRegretCsv(
    std::ostream& out,
    const std::vector<std::pair<std::string, RegretReport>>& rows);

}  // namespace econgame

#endif  // ECONGAME_EGTA_REGRET_H_

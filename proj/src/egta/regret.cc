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
#include "econgame/egta/regret.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "econgame/core/errors.h"

namespace econgame {
namespace {

std::optional<double> Percent(double regret, double utility) {
  if (std::abs(utility) < 1e-12) return std::nullopt;
  return 100.0 * regret / utility;
}

std::string Fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

}  // namespace

std::vector<DeviationSet> PureDeviationSets(const EmpiricalGame& game) {
  std::vector<DeviationSet> sets(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    const auto& strategies = game.strategies(i);
    for (std::size_t k = 0; k < strategies.size(); ++k) {
      std::vector<double> mix(strategies.size(), 0.0);
      mix[k] = 1.0;
      sets[i].names.push_back(strategies[k].name);
      sets[i].mixtures.push_back(std::move(mix));
    }
  }
  return sets;
}

RegretReport RegretFromGame(const EmpiricalGame& game,
                            const MixedStrategyProfile& candidate,
                            const std::vector<std::string>& role_names,
                            const std::vector<DeviationSet>* deviations) {
  const int n = game.num_players();
  if (static_cast<int>(role_names.size()) != n) {
    throw ContractViolation("RegretFromGame: one role name per player");
  }
  const std::vector<DeviationSet> pure =
      deviations == nullptr ? PureDeviationSets(game)
                            : std::vector<DeviationSet>{};
  const auto& sets = deviations == nullptr ? pure : *deviations;
  if (static_cast<int>(sets.size()) != n) {
    throw ContractViolation("RegretFromGame: one deviation set per player");
  }
  const auto dev = DeviationPayoffs(game, candidate);
  RegretReport report;
  report.role_names = role_names;
  report.runs = game.runs_per_cell;
  for (int i = 0; i < n; ++i) {
    double value = 0.0;
    for (std::size_t k = 0; k < dev[i].size(); ++k) {
      if (candidate[i][k] != 0.0) value += candidate[i][k] * dev[i][k];
    }
    std::vector<double> utilities;
    for (const auto& mix : sets[i].mixtures) {
      if (mix.size() != dev[i].size()) {
        throw ContractViolation("RegretFromGame: deviation mixture length");
      }
      double u = 0.0;
      for (std::size_t k = 0; k < mix.size(); ++k) {
        if (mix[k] != 0.0) u += mix[k] * dev[i][k];
      }
      if (std::isnan(u)) {
        throw ContractViolation("RegretFromGame: deviation reaches a pending "
                                "cell");
      }
      utilities.push_back(u);
    }
    double best = value;
    for (double u : utilities) best = std::max(best, u);
    const double regret = std::max(0.0, best - value);
    report.utility.push_back(value);
    report.absolute.push_back(regret);
    report.percentage.push_back(Percent(regret, value));
    report.total_absolute += regret;
    report.total_utility += value;
    report.deviation_utilities.push_back(std::move(utilities));
    report.deviation_names.push_back(sets[i].names);
  }
  report.total_percentage =
      Percent(report.total_absolute, report.total_utility);
  return report;
}

std::vector<std::size_t> DeviationCells(
    const EmpiricalGame& game, const MixedStrategyProfile& candidate,
    const std::vector<DeviationSet>* deviations) {
  ValidateProfile(candidate, game.shape());
  const int n = game.num_players();
  std::vector<std::vector<bool>> reachable(n);
  for (int i = 0; i < n; ++i) {
    const std::size_t size = game.strategies(i).size();
    reachable[i].assign(size, deviations == nullptr);
    if (deviations == nullptr) continue;
    for (const auto& mix : (*deviations)[i].mixtures) {
      for (std::size_t k = 0; k < size && k < mix.size(); ++k) {
        if (mix[k] != 0.0) reachable[i][k] = true;
      }
    }
  }
  std::vector<std::size_t> cells;
  for (std::size_t c = 0; c < game.num_cells(); ++c) {
    const auto profile = game.CellProfile(c);
    int outside = 0;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      if (candidate[i][profile[i]] == 0.0) {
        ++outside;
        ok = ok && reachable[i][profile[i]];
      }
    }
    if (outside == 0 || (outside == 1 && ok)) cells.push_back(c);
  }
  return cells;
}

RegretReport ComputeRegret(std::vector<std::vector<Strategy>> strategy_sets,
                           const MixedStrategyProfile& candidate,
                           const EnvFactory& factory,
                           const CellEvalOptions& options,
                           const std::vector<std::string>& role_names,
                           const std::vector<DeviationSet>* deviations,
                           EmpiricalGame* evaluated) {
  EmpiricalGame game(static_cast<int>(strategy_sets.size()));
  game.AddStrategies(std::move(strategy_sets));
  const auto cells = DeviationCells(game, candidate, deviations);
  EvaluateCells(game, factory, cells, options);
  RegretReport report =
      RegretFromGame(game, candidate, role_names, deviations);
  if (evaluated != nullptr) *evaluated = std::move(game);
  return report;
}

std::string FormatRegretCell(double absolute,
                             const std::optional<double>& percentage) {
  return Fixed(absolute) + " (" +
         (percentage ? Fixed(*percentage) + "%" : std::string("undefined")) +
         ")";
}

std::string FormatRegretTable(
    const std::vector<std::pair<std::string, RegretReport>>& rows) {
  if (rows.empty()) return "";
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header{""};
  for (const auto& name : rows.front().second.role_names) {
    header.push_back(name);
  }
  header.push_back("Total");
  table.push_back(header);
  for (const auto& [label, report] : rows) {
    std::vector<std::string> line{label};
    for (std::size_t i = 0; i < report.absolute.size(); ++i) {
      line.push_back(FormatRegretCell(report.absolute[i],
                                      report.percentage[i]));
    }
    line.push_back(FormatRegretCell(report.total_absolute,
                                    report.total_percentage));
    table.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : table) {
    for (std::size_t k = 0; k < line.size(); ++k) {
      width[k] = std::max(width[k], line[k].size());
    }
  }
  std::ostringstream out;
  for (const auto& line : table) {
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (k > 0) out << " | ";
      out << line[k] << std::string(width[k] - line[k].size(), ' ');
    }
    out << "\n";
  }
  return out.str();
}

void WriteRegretCsv(
    std::ostream& out,
    const std::vector<std::pair<std::string, RegretReport>>& rows) {
  out << "scheme,role,utility,regret,percentage\n";
  out.precision(17);
  for (const auto& [label, report] : rows) {
    for (std::size_t i = 0; i < report.absolute.size(); ++i) {
      out << label << ',' << report.role_names[i] << ',' << report.utility[i]
          << ',' << report.absolute[i] << ',';
      if (report.percentage[i]) {
        out << *report.percentage[i];
      } else {
        out << "undefined";
      }
      out << '\n';
    }
    out << label << ",total," << report.total_utility << ','
        << report.total_absolute << ',';
    if (report.total_percentage) {
      out << *report.total_percentage;
    } else {
      out << "undefined";
    }
    out << '\n';
  }
}

}  // namespace econgame

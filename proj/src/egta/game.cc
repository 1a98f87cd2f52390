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
#include "econgame/egta/game.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "econgame/core/errors.h"

namespace econgame {
namespace {

std::size_t Product(const std::vector<int>& shape) {
  std::size_t n = 1;
  for (int s : shape) n *= static_cast<std::size_t>(s);
  return n;
}

// Calls fn(cell, profile) for every cell in row-major order.
template <typename Fn>
void ForEachCell(const std::vector<int>& shape, Fn fn) {
  const std::size_t cells = Product(shape);
  std::vector<int> profile(shape.size(), 0);
  for (std::size_t c = 0; c < cells; ++c) {
    fn(c, profile);
    for (std::size_t i = shape.size(); i-- > 0;) {
      if (++profile[i] < shape[i]) break;
      profile[i] = 0;
    }
  }
}

}  // namespace

EmpiricalGame::EmpiricalGame(int num_players) {
  if (num_players < 1) {
    throw ContractViolation("EmpiricalGame: need at least one player");
  }
  sets_.resize(num_players);
}

EmpiricalGame EmpiricalGame::FromPayoffs(const std::vector<int>& shape,
                                         std::span<const double> utilities) {
  EmpiricalGame game(static_cast<int>(shape.size()));
  std::vector<std::vector<Strategy>> sets(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] < 1) throw ContractViolation("FromPayoffs: empty set");
    for (int k = 0; k < shape[i]; ++k) {
      sets[i].push_back({"s" + std::to_string(k), {}});
    }
  }
  game.AddStrategies(std::move(sets));
  const std::size_t n = shape.size();
  if (utilities.size() != game.num_cells() * n) {
    throw ContractViolation("FromPayoffs: expected " +
                            std::to_string(game.num_cells() * n) +
                            " utilities, got " +
                            std::to_string(utilities.size()));
  }
  for (std::size_t c = 0; c < game.num_cells(); ++c) {
    game.SetUtilities(c, utilities.subspan(c * n, n));
  }
  return game;
}

std::vector<int> EmpiricalGame::shape() const {
  std::vector<int> s;
  for (const auto& set : sets_) s.push_back(static_cast<int>(set.size()));
  return s;
}

std::size_t EmpiricalGame::CellIndex(std::span<const int> profile) const {
  if (profile.size() != sets_.size()) {
    throw ContractViolation("CellIndex: profile length mismatch");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    const int size = static_cast<int>(sets_[i].size());
    if (profile[i] < 0 || profile[i] >= size) {
      throw ContractViolation("CellIndex: strategy index out of range");
    }
    index = index * static_cast<std::size_t>(size) +
            static_cast<std::size_t>(profile[i]);
  }
  return index;
}

std::vector<int> EmpiricalGame::CellProfile(std::size_t cell) const {
  std::vector<int> profile(sets_.size());
  for (std::size_t i = sets_.size(); i-- > 0;) {
    const std::size_t size = sets_[i].size();
    profile[i] = static_cast<int>(cell % size);
    cell /= size;
  }
  return profile;
}

void EmpiricalGame::AddStrategies(
    std::vector<std::vector<Strategy>> new_strategies) {
  if (new_strategies.size() != sets_.size()) {
    throw ContractViolation("AddStrategies: one list per player required");
  }
  const std::vector<int> old_shape = shape();
  const std::size_t n = sets_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& s : new_strategies[i]) sets_[i].push_back(std::move(s));
  }
  const std::vector<int> new_shape = shape();
  if (new_shape == old_shape) return;

  const bool had_cells = Product(old_shape) > 0 && !status_.empty();
  std::vector<double> utilities(Product(new_shape) * n, 0.0);
  std::vector<CellStatus> status(Product(new_shape), CellStatus::kPending);
  std::vector<int> counts(Product(new_shape), 0);
  if (had_cells) {
    ForEachCell(old_shape, [&](std::size_t old_cell,
                               const std::vector<int>& profile) {
      const std::size_t cell = CellIndex(profile);
      std::copy_n(utilities_.begin() + old_cell * n, n,
                  utilities.begin() + cell * n);
      status[cell] = status_[old_cell];
      counts[cell] = counts_[old_cell];
    });
  }
  utilities_ = std::move(utilities);
  status_ = std::move(status);
  counts_ = std::move(counts);
}

std::vector<std::size_t> EmpiricalGame::PendingCells() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < status_.size(); ++c) {
    if (status_[c] == CellStatus::kPending) out.push_back(c);
  }
  return out;
}

bool EmpiricalGame::complete() const {
  return std::all_of(status_.begin(), status_.end(), [](CellStatus s) {
    return s == CellStatus::kEvaluated;
  });
}

std::span<const double> EmpiricalGame::utilities(std::size_t cell) const {
  return std::span<const double>(utilities_).subspan(cell * sets_.size(),
                                                     sets_.size());
}

void EmpiricalGame::SetUtilities(std::size_t cell,
                                 std::span<const double> values) {
  if (cell >= status_.size()) {
    throw ContractViolation("SetUtilities: cell out of range");
  }
  if (values.size() != sets_.size()) {
    throw ContractViolation("SetUtilities: expected one utility per player");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw ContractViolation("SetUtilities: non-finite utility in cell " +
                              std::to_string(cell));
    }
  }
  std::copy(values.begin(), values.end(),
            utilities_.begin() + cell * sets_.size());
  status_[cell] = CellStatus::kEvaluated;
  ++counts_[cell];
}

long EmpiricalGame::total_evaluations() const {
  long total = 0;
  for (int c : counts_) total += c;
  return total;
}

void ValidateProfile(const MixedStrategyProfile& profile,
                     const std::vector<int>& shape) {
  if (profile.size() != shape.size()) {
    throw ContractViolation("profile has " + std::to_string(profile.size()) +
                            " players, game has " +
                            std::to_string(shape.size()));
  }
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (static_cast<int>(profile[i].size()) != shape[i]) {
      throw ContractViolation("profile of player " + std::to_string(i) +
                              " has wrong length");
    }
    double sum = 0.0;
    for (double p : profile[i]) {
      if (!(p >= 0.0)) {
        throw ContractViolation("profile of player " + std::to_string(i) +
                                " has a negative entry");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw ContractViolation("profile of player " + std::to_string(i) +
                              " sums to " + std::to_string(sum));
    }
  }
}

MixedStrategyProfile PureProfile(const std::vector<int>& shape,
                                 std::span<const int> pure) {
  MixedStrategyProfile p(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    p[i].assign(shape[i], 0.0);
    p[i].at(pure[i]) = 1.0;
  }
  return p;
}

MixedStrategyProfile UniformProfile(const std::vector<int>& shape) {
  MixedStrategyProfile p(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    p[i].assign(shape[i], 1.0 / shape[i]);
  }
  return p;
}

double ExpectedUtility(const EmpiricalGame& game,
                       const MixedStrategyProfile& profile, int player) {
  const std::vector<int> shape = game.shape();
  ValidateProfile(profile, shape);
  double total = 0.0;
  ForEachCell(shape, [&](std::size_t cell, const std::vector<int>& s) {
    double w = 1.0;
    for (std::size_t i = 0; i < s.size() && w != 0.0; ++i) {
      w *= profile[i][s[i]];
    }
    if (w == 0.0) return;
    if (game.status(cell) != CellStatus::kEvaluated) {
      throw ContractViolation("ExpectedUtility: profile reaches pending cell " +
                              std::to_string(cell));
    }
    total += w * game.utilities(cell)[player];
  });
  return total;
}

std::vector<std::vector<double>> DeviationPayoffs(
    const EmpiricalGame& game, const MixedStrategyProfile& profile) {
  const std::vector<int> shape = game.shape();
  ValidateProfile(profile, shape);
  const std::size_t n = shape.size();
  std::vector<std::vector<double>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(shape[i], 0.0);
  std::vector<double> prefix(n + 1), suffix(n + 1);
  ForEachCell(shape, [&](std::size_t cell, const std::vector<int>& s) {
    prefix[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      prefix[i + 1] = prefix[i] * profile[i][s[i]];
    }
    suffix[n] = 1.0;
    for (std::size_t i = n; i-- > 0;) {
      suffix[i] = suffix[i + 1] * profile[i][s[i]];
    }
    const bool evaluated = game.status(cell) == CellStatus::kEvaluated;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = prefix[i] * suffix[i + 1];
      if (w == 0.0) continue;
      if (!evaluated) {
        // Deviations outside the support may be left unsimulated; their
        // payoff is then unavailable rather than wrong.
        if (profile[i][s[i]] == 0.0) {
          out[i][s[i]] = std::numeric_limits<double>::quiet_NaN();
          continue;
        }
        throw ContractViolation(
            "DeviationPayoffs: profile reaches pending cell " +
            std::to_string(cell));
      }
      out[i][s[i]] += w * game.utilities(cell)[i];
    }
  });
  return out;
}

std::vector<double> PlayerRegrets(const EmpiricalGame& game,
                                  const MixedStrategyProfile& profile) {
  const auto dev = DeviationPayoffs(game, profile);
  std::vector<double> regrets(dev.size());
  for (std::size_t i = 0; i < dev.size(); ++i) {
    double value = 0.0;
    for (std::size_t k = 0; k < dev[i].size(); ++k) {
      if (profile[i][k] != 0.0) value += profile[i][k] * dev[i][k];
    }
    for (double d : dev[i]) {
      if (std::isnan(d)) {
        throw ContractViolation("PlayerRegrets: game has pending cells");
      }
    }
    const double best = *std::max_element(dev[i].begin(), dev[i].end());
    regrets[i] = std::max(0.0, best - value);
  }
  return regrets;
}

double MaxRegret(const EmpiricalGame& game,
                 const MixedStrategyProfile& profile) {
  const auto r = PlayerRegrets(game, profile);
  return *std::max_element(r.begin(), r.end());
}

}  // namespace econgame

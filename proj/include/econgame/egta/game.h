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
#ifndef ECONGAME_EGTA_GAME_H_
#define ECONGAME_EGTA_GAME_H_

// Normal-form empirical game over per-player pure-strategy sets, stored as a
// dense row-major tensor of utility vectors.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "econgame/policy/policy.h"

namespace econgame {

struct Strategy {
  std::string name;
  PolicyParams params;  // may be empty for payoff-only games
};

enum class CellStatus : std::uint8_t { kPending, kEvaluated };

// sigma[i][k] = probability that player i plays its k-th pure strategy.
using MixedStrategyProfile = std::vector<std::vector<double>>;

class EmpiricalGame {
 public:
  explicit EmpiricalGame(int num_players);

  // Payoff-only game; utilities[cell * n + player].
  static EmpiricalGame FromPayoffs(const std::vector<int>& shape,
                                   std::span<const double> utilities);

  int num_players() const { return static_cast<int>(sets_.size()); }
  const std::vector<Strategy>& strategies(int player) const {
    return sets_[player];
  }
  std::vector<int> shape() const;
  std::size_t num_cells() const { return status_.size(); }

  std::size_t CellIndex(std::span<const int> profile) const;
  std::vector<int> CellProfile(std::size_t cell) const;

  // Appends new_strategies[i] to player i's set. Old cells keep their
  // utilities and counters; cells touching a new strategy become pending.
  void AddStrategies(std::vector<std::vector<Strategy>> new_strategies);

  CellStatus status(std::size_t cell) const { return status_[cell]; }
  std::vector<std::size_t> PendingCells() const;
  bool complete() const;
  std::span<const double> utilities(std::size_t cell) const;
  // Throws ContractViolation on non-finite values or wrong length.
  void SetUtilities(std::size_t cell, std::span<const double> values);
  // Number of times SetUtilities was called for this cell.
  int evaluation_count(std::size_t cell) const { return counts_[cell]; }
  long total_evaluations() const;

  int runs_per_cell = 0;

 private:
  std::vector<std::vector<Strategy>> sets_;
  std::vector<double> utilities_;  // [cell][player]
  std::vector<CellStatus> status_;
  std::vector<int> counts_;
};

// Throws ContractViolation unless every distribution matches the game shape,
// is nonnegative, and sums to one within 1e-9.
void ValidateProfile(const MixedStrategyProfile& profile,
                     const std::vector<int>& shape);

MixedStrategyProfile PureProfile(const std::vector<int>& shape,
                                 std::span<const int> pure);
MixedStrategyProfile UniformProfile(const std::vector<int>& shape);

// Sum over joint pure profiles of (product of probabilities) * utility.
// Cells with zero weight are skipped, so they may be pending; a pending cell
// with positive weight raises ContractViolation.
double ExpectedUtility(const EmpiricalGame& game,
                       const MixedStrategyProfile& profile, int player);

// out[i][k] = U_i(k, sigma_{-i}) for every player and pure strategy.
// Entries for strategies outside the support whose cells are still pending
// are NaN; a pending cell inside the support raises ContractViolation.
std::vector<std::vector<double>> DeviationPayoffs(
    const EmpiricalGame& game, const MixedStrategyProfile& profile);

// Per-player max_k U_i(k, sigma_{-i}) - U_i(sigma), clamped at zero.
std::vector<double> PlayerRegrets(const EmpiricalGame& game,
                                  const MixedStrategyProfile& profile);
double MaxRegret(const EmpiricalGame& game,
                 const MixedStrategyProfile& profile);

}  // namespace econgame

#endif  // ECONGAME_EGTA_GAME_H_

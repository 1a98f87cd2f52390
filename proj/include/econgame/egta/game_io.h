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
#ifndef ECONGAME_EGTA_GAME_IO_H_
#define ECONGAME_EGTA_GAME_IO_H_

// Empirical-game persistence. A game directory holds game.json (strategy
// manifests with checkpoint paths and hashes, the utility tensor, and an
// optional meta-strategy) and a checkpoints/ subdirectory.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "econgame/egta/game.h"

namespace econgame {

struct StoredGame {
  EmpiricalGame game{1};
  std::vector<std::string> role_names;
  std::optional<MixedStrategyProfile> profile;
};

// Checkpoints are written only for strategies with parameters and only if
// the file is missing or its content hash differs.
void SaveGame(const std::filesystem::path& dir, const EmpiricalGame& game,
              const std::vector<std::string>& role_names,
              const MixedStrategyProfile* profile);

// Verifies every checkpoint against its recorded hash (ChecksumError on
// mismatch) and restores the tensor, statuses and counters.
StoredGame LoadGame(const std::filesystem::path& dir);

// Long form: cell,profile,role,strategy,utility,status,evaluations with one
// row per cell per player. "profile" joins strategy indices with '-'.
void WriteUtilityCsv(std::ostream& out, const EmpiricalGame& game,
                     const std::vector<std::string>& role_names);

}  // namespace econgame

#endif  // ECONGAME_EGTA_GAME_IO_H_

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
#include "econgame/egta/game_io.h"

#include <fstream>

#include "econgame/core/errors.h"
#include "econgame/policy/checkpoint.h"
#include "json.hpp"

namespace econgame {

namespace fs = std::filesystem;
using nlohmann::json;

void SaveGame(const fs::path& dir, const EmpiricalGame& game,
              const std::vector<std::string>& role_names,
              const MixedStrategyProfile* profile) {
  fs::create_directories(dir / "checkpoints");
  json doc;
  doc["format"] = "econgame-game 1";
  doc["runs_per_cell"] = game.runs_per_cell;
  doc["shape"] = game.shape();
  json players = json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    json strategies = json::array();
    for (std::size_t k = 0; k < game.strategies(i).size(); ++k) {
      const Strategy& s = game.strategies(i)[k];
      json entry{{"name", s.name}};
      if (!s.params.values.empty()) {
        // Strategy names need not be unique across roles.
        const std::string rel = "checkpoints/" + role_names.at(i) + "_" +
                                std::to_string(k) + ".ckpt";
        const std::string hash = PolicyHash(s.params);
        bool write = true;
        if (fs::exists(dir / rel)) {
          try {
            write = PolicyHash(LoadPolicy(dir / rel)) != hash;
          } catch (const std::exception&) {
            write = true;
          }
        }
        if (write) SavePolicy(s.params, dir / rel);
        entry["checkpoint"] = rel;
        entry["hash"] = hash;
      }
      strategies.push_back(entry);
    }
    players.push_back({{"role", role_names.at(i)},
                       {"strategies", strategies}});
  }
  doc["players"] = players;
  json cells = json::array();
  for (std::size_t c = 0; c < game.num_cells(); ++c) {
    const auto u = game.utilities(c);
    cells.push_back({{"profile", game.CellProfile(c)},
                     {"status", game.status(c) == CellStatus::kEvaluated
                                    ? "evaluated" : "pending"},
                     {"evaluations", game.evaluation_count(c)},
                     {"utilities", std::vector<double>(u.begin(), u.end())}});
  }
  doc["cells"] = cells;
  if (profile != nullptr) doc["profile"] = *profile;
  const fs::path tmp = dir / "game.json.tmp";
  {
    std::ofstream out(tmp);
    out << doc.dump(1) << "\n";
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, dir / "game.json");
}

StoredGame LoadGame(const fs::path& dir) {
  std::ifstream in(dir / "game.json");
  if (!in) {
    throw std::runtime_error("cannot read " + (dir / "game.json").string());
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ChecksumError("game.json: " + std::string(e.what()));
  }
  if (doc.value("format", "") != "econgame-game 1") {
    throw ConsistencyError("game.json: unknown format");
  }
  const auto& players = doc.at("players");
  StoredGame stored;
  stored.game = EmpiricalGame(static_cast<int>(players.size()));
  std::vector<std::vector<Strategy>> sets;
  for (const auto& p : players) {
    stored.role_names.push_back(p.at("role").get<std::string>());
    std::vector<Strategy> set;
    for (const auto& s : p.at("strategies")) {
      Strategy strategy{s.at("name").get<std::string>(), {}};
      if (s.contains("checkpoint")) {
        strategy.params =
            LoadPolicy(dir / s.at("checkpoint").get<std::string>());
        if (PolicyHash(strategy.params) != s.at("hash").get<std::string>()) {
          throw ChecksumError("checkpoint " +
                              s.at("checkpoint").get<std::string>() +
                              " does not match its recorded hash");
        }
      }
      set.push_back(std::move(strategy));
    }
    sets.push_back(std::move(set));
  }
  stored.game.AddStrategies(std::move(sets));
  stored.game.runs_per_cell = doc.at("runs_per_cell").get<int>();
  const auto& cells = doc.at("cells");
  if (cells.size() != stored.game.num_cells()) {
    throw ConsistencyError("game.json: cell count does not match shape");
  }
  for (const auto& cell : cells) {
    const auto profile = cell.at("profile").get<std::vector<int>>();
    const std::size_t index = stored.game.CellIndex(profile);
    if (cell.at("status").get<std::string>() != "evaluated") continue;
    const auto u = cell.at("utilities").get<std::vector<double>>();
    const int evaluations = cell.at("evaluations").get<int>();
    for (int k = 0; k < std::max(evaluations, 1); ++k) {
      stored.game.SetUtilities(index, u);
    }
  }
  if (doc.contains("profile")) {
    stored.profile = doc.at("profile").get<MixedStrategyProfile>();
    ValidateProfile(*stored.profile, stored.game.shape());
  }
  return stored;
}

void WriteUtilityCsv(std::ostream& out, const EmpiricalGame& game,
                     const std::vector<std::string>& role_names) {
  out << "cell,profile,role,strategy,utility,status,evaluations\n";
  out.precision(17);
  for (std::size_t c = 0; c < game.num_cells(); ++c) {
    const auto profile = game.CellProfile(c);
    std::string key;
    for (std::size_t i = 0; i < profile.size(); ++i) {
      if (i > 0) key += '-';
      key += std::to_string(profile[i]);
    }
    const bool evaluated = game.status(c) == CellStatus::kEvaluated;
    for (int i = 0; i < game.num_players(); ++i) {
      out << c << ',' << key << ',' << role_names.at(i) << ','
          << game.strategies(i)[profile[i]].name << ',';
      if (evaluated) out << game.utilities(c)[i];
      out << ',' << (evaluated ? "evaluated" : "pending") << ','
          << game.evaluation_count(c) << '\n';
    }
  }
}

}  // namespace econgame

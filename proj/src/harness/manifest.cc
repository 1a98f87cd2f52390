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
#include "econgame/harness/manifest.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <set>

#include "econgame/core/errors.h"
#include "econgame/core/hash.h"
#include "json.hpp"

namespace econgame {

namespace fs = std::filesystem;

std::string FileHash(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  Fnv1a64 h;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    h.Update(buf, static_cast<std::size_t>(in.gcount()));
  }
  return h.hex();
}

std::string UtcNow() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

std::vector<std::string> ListFiles(const fs::path& dir) {
  std::vector<std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string rel = fs::relative(entry.path(), dir).generic_string();
    if (rel != kManifestName) files.push_back(rel);
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

void WriteManifest(const fs::path& dir, const RunManifest& manifest) {
  nlohmann::json doc;
  doc["tool"] = "econgame";
  doc["version"] = kToolVersion;
  doc["command"] = manifest.command;
  doc["config_hash"] = manifest.config_hash;
  doc["seed"] = manifest.seed;
  doc["started"] = manifest.started;
  doc["finished"] = manifest.finished;
  doc["inputs"] = manifest.inputs;
  nlohmann::json files = nlohmann::json::array();
  for (const std::string& rel : ListFiles(dir)) {
    files.push_back({{"path", rel},
                     {"hash", FileHash(dir / rel)},
                     {"bytes", fs::file_size(dir / rel)}});
  }
  doc["files"] = files;
  std::ofstream out(dir / kManifestName);
  out << doc.dump(2) << "\n";
  if (!out) throw std::runtime_error("cannot write manifest in " + dir.string());
}

std::vector<std::string> VerifyManifest(const fs::path& dir) {
  std::ifstream in(dir / kManifestName);
  if (!in) throw ConsistencyError("no manifest in " + dir.string());
  const auto doc = nlohmann::json::parse(in);
  std::vector<std::string> problems;
  std::set<std::string> listed;
  for (const auto& f : doc.at("files")) {
    const std::string rel = f.at("path").get<std::string>();
    listed.insert(rel);
    if (!fs::exists(dir / rel) ||
        FileHash(dir / rel) != f.at("hash").get<std::string>()) {
      problems.push_back(rel);
    }
  }
  for (const std::string& rel : ListFiles(dir)) {
    if (!listed.count(rel)) problems.push_back(rel);
  }
  return problems;
}

}  // namespace econgame

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
#ifndef ECONGAME_HARNESS_MANIFEST_H_
#define ECONGAME_HARNESS_MANIFEST_H_

// manifest.json: what produced an output directory and a content hash of
// every file in it.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace econgame {

inline constexpr char kToolVersion[] = "0.1.0";
inline constexpr char kManifestName[] = "manifest.json";

struct RunManifest {
  std::string command;
  std::string config_hash;
  std::uint64_t seed = 0;
  std::string started;   // UTC, ISO 8601
  std::string finished;
  std::vector<std::string> inputs;  // input directories, as given
};

std::string FileHash(const std::filesystem::path& path);
std::string UtcNow();

// Lists every regular file under `dir` (except the manifest itself) with
// its hash and size, then writes dir/manifest.json.
void WriteManifest(const std::filesystem::path& dir,
                   const RunManifest& manifest);

// Relative paths whose content no longer matches, plus files present on disk
// but missing from the manifest.
std::vector<std::string> VerifyManifest(const std::filesystem::path& dir);

}  // namespace econgame

#endif  // ECONGAME_HARNESS_MANIFEST_H_

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
#ifndef ECONGAME_POLICY_CHECKPOINT_H_
#define ECONGAME_POLICY_CHECKPOINT_H_

// Policy checkpoint files: a text header echoing the spec and shape table,
// terminated by "end\n", followed by the parameters as little-endian IEEE-754
// doubles in shape-table order. The header carries an FNV-1a checksum of the
// payload.
//
//   econgame-policy 1
//   agent_type household
//   obs_dim 8
//   hetero_dim 5
//   action_dims 5 5 5 5
//   hidden 64 64
//   activation tanh
//   layer hidden0.weight 64 12
//   ...
//   count 5829
//   checksum 1f3a...
//   end

#include <filesystem>
#include <string>

#include "econgame/policy/policy.h"

namespace econgame {

void SavePolicy(const PolicyParams& params, const std::filesystem::path& path);

// Throws ChecksumError for truncated or corrupted files and ShapeError
// (naming the first offending layer) when `expected` is given and differs
// from the stored spec.
PolicyParams LoadPolicy(const std::filesystem::path& path,
                        const PolicySpec* expected = nullptr);

// Content hash of the parameter vector (same digest as the file checksum).
std::string PolicyHash(const PolicyParams& params);

}  // namespace econgame

#endif  // ECONGAME_POLICY_CHECKPOINT_H_

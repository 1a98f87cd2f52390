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
#ifndef ECONGAME_HARNESS_CLI_H_
#define ECONGAME_HARNESS_CLI_H_

// The econgame command line: train-imarl, train-psro, evaluate, regret,
// facts, export-game. Exit status 0 on success, 2 on usage or configuration
// errors, 1 otherwise; failures print one line "error: <kind>: <message>".

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "econgame/egta/game_io.h"
#include "econgame/harness/config.h"
#include "econgame/rl/oracle.h"

namespace econgame {

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

// Output of train-imarl: one policy per role, in role order.
struct ImarlOutput {
  std::vector<std::string> role_names;
  std::vector<PolicyParams> policies;
};
ImarlOutput LoadImarlOutput(const std::filesystem::path& dir);

// Output of train-psro: the final game and its meta-strategy.
StoredGame LoadPsroOutput(const std::filesystem::path& dir);

// "# econgame training_curve v1" followed by
// scheme,epoch,episode,agent_id,agent_type,discounted_return,moving_avg.
void WriteTrainingCurve(std::ostream& out,
                        const std::vector<CurvePoint>& curve);

// Display name used in tables, e.g. central_bank -> "Central Bank".
std::string RoleDisplayName(const std::string& role);

}  // namespace econgame

#endif  // ECONGAME_HARNESS_CLI_H_

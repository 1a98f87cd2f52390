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
#ifndef ECONGAME_HARNESS_CONFIG_H_
#define ECONGAME_HARNESS_CONFIG_H_

// Experiment configuration files (JSON). Top-level sections: seed, scenario,
// training (PPO settings shared by both schemes), imarl, psro, evaluation.
// Every section is optional and overrides the built-in defaults; unknown
// keys are errors.

#include <cstdint>
#include <filesystem>
#include <string>

#include "econgame/egta/psro.h"
#include "econgame/env/scenario.h"
#include "econgame/rl/ppo.h"

namespace econgame {

struct EvaluationConfig {
  int episodes = 500;
  bool deterministic = false;
};

struct ExperimentConfig {
  std::uint64_t seed = 0;
  ScenarioConfig scenario;
  TrainConfig imarl;
  PsroConfig psro;
  EvaluationConfig evaluation;
};

// Heterogeneous-skills scenario, IMARL for 4000 episodes, PSRO with N=8 and
// M=100.
ExperimentConfig DefaultExperimentConfig();

// Throws ConfigError naming the offending key ("psro.epochs", ...).
ExperimentConfig ParseExperimentConfig(const std::string& text);
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);

// Canonical JSON of the full resolved configuration; parsing it back yields
// the same configuration.
std::string DumpExperimentConfig(const ExperimentConfig& config);

// Propagates one global seed to every component.
void SetSeed(ExperimentConfig& config, std::uint64_t seed);

}  // namespace econgame

#endif  // ECONGAME_HARNESS_CONFIG_H_

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
#include "econgame/harness/config.h"

#include <fstream>
#include <set>
#include <sstream>

#include "econgame/core/errors.h"
#include "json.hpp"

namespace econgame {

using nlohmann::json;

namespace {

// Reads keys from one JSON object and rejects any it did not consume.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_, "expected an object");
  }
  ~Section() = default;

  bool has(const std::string& key) const { return j_.contains(key); }
  std::string field(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  template <typename T>
  void Read(const std::string& key, T& out) {
    if (!j_.contains(key)) return;
    used_.insert(key);
    try {
      out = j_.at(key).get<T>();
    } catch (const json::exception&) {
      throw ConfigError(field(key), "wrong type");
    }
  }
  template <typename T>
  void Require(const std::string& key, T& out) {
    if (!j_.contains(key)) throw ConfigError(field(key), "missing");
    Read(key, out);
  }
  const json& Child(const std::string& key) {
    used_.insert(key);
    return j_.at(key);
  }
  void Finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!used_.count(key)) throw ConfigError(field(key), "unknown key");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> used_;
};

void ReadHousehold(const json& j, const std::string& path, HouseholdParams& h) {
  Section s(j, path);
  s.Require("skills", h.skills);
  s.Require("gamma", h.gamma);
  s.Require("nu", h.nu);
  s.Require("mu", h.mu);
  s.Require("discount", h.discount);
  s.Finish();
}

void ReadFirm(const json& j, const std::string& path, FirmParams& f) {
  Section s(j, path);
  s.Require("rho", f.rho);
  s.Require("shock_mean", f.shock_mean);
  s.Require("shock_std", f.shock_std);
  s.Require("alpha", f.alpha);
  s.Require("inventory_risk", f.inventory_risk);
  s.Require("discount", f.discount);
  s.Finish();
}

void ReadScenario(const json& j, ScenarioConfig& c) {
  Section s(j, "scenario");
  s.Read("horizon", c.horizon);
  s.Read("normalized_rewards", c.normalized_rewards);
  if (s.has("households")) {
    const json& list = s.Child("households");
    if (!list.is_array()) throw ConfigError("scenario.households", "expected a list");
    c.households.assign(list.size(), HouseholdParams{});
    for (std::size_t i = 0; i < list.size(); ++i) {
      ReadHousehold(list[i], "scenario.households[" + std::to_string(i) + "]",
                    c.households[i]);
    }
  }
  if (s.has("firms")) {
    const json& list = s.Child("firms");
    if (!list.is_array()) throw ConfigError("scenario.firms", "expected a list");
    c.firms.assign(list.size(), FirmParams{});
    for (std::size_t i = 0; i < list.size(); ++i) {
      ReadFirm(list[i], "scenario.firms[" + std::to_string(i) + "]",
               c.firms[i]);
    }
  }
  if (s.has("central_bank")) {
    Section cb(s.Child("central_bank"), "scenario.central_bank");
    cb.Read("target_inflation", c.central_bank.target_inflation);
    cb.Read("production_weight", c.central_bank.production_weight);
    cb.Read("discount", c.central_bank.discount);
    cb.Finish();
  }
  if (s.has("government")) {
    Section g(s.Child("government"), "scenario.government");
    g.Read("redistribution_fraction", c.government.redistribution_fraction);
    g.Read("weight_slope", c.government.weight_slope);
    g.Read("weight_intercept", c.government.weight_intercept);
    g.Read("weight_floor", c.government.weight_floor);
    g.Read("weight_cap", c.government.weight_cap);
    g.Read("discount", c.government.discount);
    g.Finish();
  }
  if (s.has("action_grids")) {
    Section a(s.Child("action_grids"), "scenario.action_grids");
    a.Read("labor_hours", c.action_grids.labor_hours);
    a.Read("consumption_units", c.action_grids.consumption_units);
    a.Read("wages", c.action_grids.wages);
    a.Read("prices", c.action_grids.prices);
    a.Read("rates", c.action_grids.rates);
    a.Read("tax_rates", c.action_grids.tax_rates);
    a.Read("fraction_raw", c.action_grids.fraction_raw);
    a.Finish();
  }
  s.Finish();
}

void ReadTraining(const json& j, TrainConfig& t) {
  Section s(j, "training");
  s.Read("clip_epsilon", t.clip_epsilon);
  s.Read("gae_lambda", t.gae_lambda);
  s.Read("epochs_per_batch", t.epochs_per_batch);
  s.Read("minibatch_size", t.minibatch_size);
  s.Read("entropy_coef", t.entropy_coef);
  s.Read("value_coef", t.value_coef);
  s.Read("episodes_per_batch", t.episodes_per_batch);
  s.Read("normalize_advantages", t.normalize_advantages);
  s.Read("hidden", t.hidden);
  s.Read("moving_average_window", t.moving_average_window);
  std::string optimizer = t.optimizer == OptimizerKind::kAdam ? "adam" : "sgd";
  s.Read("optimizer", optimizer);
  if (optimizer == "adam") {
    t.optimizer = OptimizerKind::kAdam;
  } else if (optimizer == "sgd") {
    t.optimizer = OptimizerKind::kSgd;
  } else {
    throw ConfigError("training.optimizer", "expected adam or sgd");
  }
  s.Finish();
}

void CopyPpoSettings(const TrainConfig& from, TrainConfig& to) {
  const auto rates = to.learning_rates;
  const int episodes = to.episodes;
  const auto seed = to.seed;
  to = from;
  to.learning_rates = rates;
  to.episodes = episodes;
  to.seed = seed;
}

json TrainingJson(const TrainConfig& t) {
  return {{"clip_epsilon", t.clip_epsilon},
          {"gae_lambda", t.gae_lambda},
          {"epochs_per_batch", t.epochs_per_batch},
          {"minibatch_size", t.minibatch_size},
          {"entropy_coef", t.entropy_coef},
          {"value_coef", t.value_coef},
          {"episodes_per_batch", t.episodes_per_batch},
          {"normalize_advantages", t.normalize_advantages},
          {"hidden", t.hidden},
          {"moving_average_window", t.moving_average_window},
          {"optimizer", t.optimizer == OptimizerKind::kAdam ? "adam" : "sgd"}};
}

}  // namespace

ExperimentConfig DefaultExperimentConfig() {
  ExperimentConfig c;
  c.scenario = HeterogeneousSkillsScenario();
  c.imarl.learning_rates = ImarlLearningRates();
  c.imarl.episodes = 4000;
  c.psro = DefaultPsroConfig();
  SetSeed(c, 0);
  return c;
}

void SetSeed(ExperimentConfig& config, std::uint64_t seed) {
  config.seed = seed;
  config.scenario.seed = seed;
  config.imarl.seed = seed;
  config.psro.seed = seed;
  config.psro.train.seed = seed;
  config.psro.meta_solver.seed = seed;
}

ExperimentConfig ParseExperimentConfig(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError("config", std::string("parse error: ") + e.what());
  }
  ExperimentConfig c = DefaultExperimentConfig();
  Section top(doc, "");
  std::uint64_t seed = 0;
  top.Read("seed", seed);
  if (top.has("scenario")) ReadScenario(top.Child("scenario"), c.scenario);
  if (top.has("training")) {
    TrainConfig shared = c.imarl;
    ReadTraining(top.Child("training"), shared);
    CopyPpoSettings(shared, c.imarl);
    CopyPpoSettings(shared, c.psro.train);
  }
  if (top.has("imarl")) {
    Section s(top.Child("imarl"), "imarl");
    s.Read("episodes", c.imarl.episodes);
    s.Read("learning_rates", c.imarl.learning_rates);
    s.Finish();
  }
  if (top.has("psro")) {
    Section s(top.Child("psro"), "psro");
    s.Read("epochs", c.psro.epochs);
    s.Read("episodes_per_oracle", c.psro.episodes_per_oracle);
    s.Read("runs_per_cell", c.psro.runs_per_cell);
    s.Read("final_eval_runs", c.psro.final_eval_runs);
    s.Read("learning_rates", c.psro.train.learning_rates);
    if (s.has("meta_solver")) {
      Section m(s.Child("meta_solver"), "psro.meta_solver");
      m.Read("iterations", c.psro.meta_solver.iterations);
      m.Read("step_size", c.psro.meta_solver.step_size);
      m.Read("restarts", c.psro.meta_solver.restarts);
      m.Read("tolerance", c.psro.meta_solver.tolerance);
      m.Finish();
    }
    s.Finish();
  }
  if (top.has("evaluation")) {
    Section s(top.Child("evaluation"), "evaluation");
    s.Read("episodes", c.evaluation.episodes);
    s.Read("deterministic", c.evaluation.deterministic);
    s.Finish();
  }
  top.Finish();
  SetSeed(c, seed);

  Validate(c.scenario);
  try {
    Validate(c.imarl);
  } catch (const ConfigError& e) {
    throw ConfigError("imarl." + e.field(), e.what());
  }
  Validate(c.psro);
  const std::size_t roles = 4;
  if (c.imarl.learning_rates.size() != roles) {
    throw ConfigError("imarl.learning_rates", "need one rate per agent type");
  }
  if (c.psro.train.learning_rates.size() != roles) {
    throw ConfigError("psro.learning_rates", "need one rate per agent type");
  }
  if (c.evaluation.episodes < 1) {
    throw ConfigError("evaluation.episodes", "must be >= 1");
  }
  return c;
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ParseExperimentConfig(text.str());
}

std::string DumpExperimentConfig(const ExperimentConfig& c) {
  json households = json::array();
  for (const auto& h : c.scenario.households) {
    households.push_back({{"skills", h.skills},
                          {"gamma", h.gamma},
                          {"nu", h.nu},
                          {"mu", h.mu},
                          {"discount", h.discount}});
  }
  json firms = json::array();
  for (const auto& f : c.scenario.firms) {
    firms.push_back({{"rho", f.rho},
                     {"shock_mean", f.shock_mean},
                     {"shock_std", f.shock_std},
                     {"alpha", f.alpha},
                     {"inventory_risk", f.inventory_risk},
                     {"discount", f.discount}});
  }
  const auto& cb = c.scenario.central_bank;
  const auto& g = c.scenario.government;
  const auto& a = c.scenario.action_grids;
  json doc;
  doc["seed"] = c.seed;
  doc["scenario"] = {
      {"horizon", c.scenario.horizon},
      {"normalized_rewards", c.scenario.normalized_rewards},
      {"households", households},
      {"firms", firms},
      {"central_bank",
       {{"target_inflation", cb.target_inflation},
        {"production_weight", cb.production_weight},
        {"discount", cb.discount}}},
      {"government",
       {{"redistribution_fraction", g.redistribution_fraction},
        {"weight_slope", g.weight_slope},
        {"weight_intercept", g.weight_intercept},
        {"weight_floor", g.weight_floor},
        {"weight_cap", g.weight_cap},
        {"discount", g.discount}}},
      {"action_grids",
       {{"labor_hours", a.labor_hours},
        {"consumption_units", a.consumption_units},
        {"wages", a.wages},
        {"prices", a.prices},
        {"rates", a.rates},
        {"tax_rates", a.tax_rates},
        {"fraction_raw", a.fraction_raw}}}};
  doc["training"] = TrainingJson(c.imarl);
  doc["imarl"] = {{"episodes", c.imarl.episodes},
                  {"learning_rates", c.imarl.learning_rates}};
  const auto& m = c.psro.meta_solver;
  doc["psro"] = {{"epochs", c.psro.epochs},
                 {"episodes_per_oracle", c.psro.episodes_per_oracle},
                 {"runs_per_cell", c.psro.runs_per_cell},
                 {"final_eval_runs", c.psro.final_eval_runs},
                 {"learning_rates", c.psro.train.learning_rates},
                 {"meta_solver",
                  {{"iterations", m.iterations},
                   {"step_size", m.step_size},
                   {"restarts", m.restarts},
                   {"tolerance", m.tolerance}}}};
  doc["evaluation"] = {{"episodes", c.evaluation.episodes},
                       {"deterministic", c.evaluation.deterministic}};
  return doc.dump(2) + "\n";
}

}  // namespace econgame

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
#include "econgame/harness/cli.h"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "econgame/core/errors.h"
#include "econgame/core/hash.h"
#include "econgame/core/rng.h"
#include "econgame/egta/psro.h"
#include "econgame/egta/regret.h"
#include "econgame/harness/episode_log.h"
#include "econgame/harness/facts.h"
#include "econgame/harness/manifest.h"
#include "econgame/policy/checkpoint.h"
#include "econgame/rl/econ_env.h"
#include "json.hpp"

namespace econgame {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void WriteText(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<int> episodes;
  std::optional<int> runs;
  std::optional<int> epochs;
  bool deterministic = false;
  int jobs = 0;
  bool resume = false;
  std::string input;
  std::string imarl;
  std::string psro;
};

// Config precedence: --config, then config.json of the input directory,
// then built-in defaults. --seed overrides the file.
ExperimentConfig ResolveConfig(const Flags& f, bool required,
                               const std::string& input_dir) {
  ExperimentConfig config;
  if (!f.config.empty()) {
    if (!fs::exists(f.config)) {
      throw ConfigError("--config", "no such file: " + f.config);
    }
    config = LoadExperimentConfig(f.config);
  } else if (required) {
    throw UsageError("--config is required");
  } else if (!input_dir.empty() && fs::exists(fs::path(input_dir) /
                                              "config.json")) {
    config = LoadExperimentConfig(fs::path(input_dir) / "config.json");
  } else {
    config = DefaultExperimentConfig();
  }
  if (f.seed) SetSeed(config, *f.seed);
  return config;
}

fs::path OutDir(const Flags& f) {
  if (!f.out.empty()) return f.out;
  if (const char* env = std::getenv("OUT_DIR")) return env;
  throw UsageError("--out is required");
}

RunManifest StartManifest(const std::string& command,
                          const ExperimentConfig& config) {
  RunManifest m;
  m.command = command;
  m.config_hash = HashHex(DumpExperimentConfig(config));
  m.seed = config.seed;
  m.started = UtcNow();
  return m;
}

void Finish(const fs::path& dir, RunManifest m) {
  m.finished = UtcNow();
  WriteManifest(dir, m);
}

std::string CurveCsv(const std::vector<CurvePoint>& curve) {
  std::ostringstream s;
  WriteTrainingCurve(s, curve);
  return s.str();
}

json CurveJson(const std::vector<CurvePoint>& curve) {
  json rows = json::array();
  for (const CurvePoint& p : curve) {
    rows.push_back({p.scheme, p.epoch, p.episode, p.agent_id, p.agent_type,
                    p.discounted_return, p.moving_avg});
  }
  return rows;
}

std::vector<CurvePoint> CurveFromJson(const json& rows) {
  std::vector<CurvePoint> curve;
  for (const auto& r : rows) {
    curve.push_back({r[0].get<std::string>(), r[1].get<int>(),
                     r[2].get<int>(), r[3].get<int>(),
                     r[4].get<std::string>(), r[5].get<double>(),
                     r[6].get<double>()});
  }
  return curve;
}

json DiagnosticsJson(const std::vector<PsroEpochDiagnostics>& diagnostics) {
  json rows = json::array();
  for (const auto& d : diagnostics) {
    rows.push_back({{"epoch", d.epoch},
                    {"set_sizes", d.set_sizes},
                    {"new_cells", d.new_cells},
                    {"total_cells", d.total_cells},
                    {"solver_regret", d.solver_regret},
                    {"approximate", d.approximate},
                    {"solver_method", d.solver_method},
                    {"profile", d.profile}});
  }
  return rows;
}

std::vector<PsroEpochDiagnostics> DiagnosticsFromJson(const json& rows) {
  std::vector<PsroEpochDiagnostics> out;
  for (const auto& r : rows) {
    PsroEpochDiagnostics d;
    d.epoch = r.at("epoch").get<int>();
    d.set_sizes = r.at("set_sizes").get<std::vector<int>>();
    d.new_cells = r.at("new_cells").get<int>();
    d.total_cells = r.at("total_cells").get<long>();
    d.solver_regret = r.at("solver_regret").get<double>();
    d.approximate = r.at("approximate").get<bool>();
    d.solver_method = r.at("solver_method").get<std::string>();
    d.profile = r.at("profile").get<MixedStrategyProfile>();
    out.push_back(std::move(d));
  }
  return out;
}

std::string DiagnosticsCsv(const std::vector<PsroEpochDiagnostics>& rows) {
  std::ostringstream s;
  s << "# econgame psro_diagnostics v1\n"
    << "epoch,set_sizes,new_cells,total_cells,solver_regret,approximate,"
       "solver_method,profile\n";
  for (const auto& d : rows) {
    std::string sizes, profile;
    for (std::size_t i = 0; i < d.set_sizes.size(); ++i) {
      if (i > 0) sizes += '-';
      sizes += std::to_string(d.set_sizes[i]);
    }
    for (std::size_t i = 0; i < d.profile.size(); ++i) {
      if (i > 0) profile += '|';
      for (std::size_t k = 0; k < d.profile[i].size(); ++k) {
        if (k > 0) profile += ';';
        profile += Num(d.profile[i][k]);
      }
    }
    s << d.epoch << ',' << sizes << ',' << d.new_cells << ','
      << d.total_cells << ',' << Num(d.solver_regret) << ','
      << (d.approximate ? 1 : 0) << ',' << d.solver_method << ',' << profile
      << '\n';
  }
  return s.str();
}

std::vector<std::string> RoleNames(const ExperimentConfig& config) {
  std::vector<std::string> names;
  for (const RoleSpec& r : EconRoles(config.scenario, config.imarl.hidden)) {
    names.push_back(r.name);
  }
  return names;
}

int TrainImarlCommand(const Flags& f, std::ostream& out) {
  ExperimentConfig config = ResolveConfig(f, true, "");
  if (f.episodes) config.imarl.episodes = *f.episodes;
  Validate(config.imarl);
  const fs::path dir = OutDir(f);
  fs::create_directories(dir);
  RunManifest manifest = StartManifest("train-imarl", config);
  WriteText(dir / "config.json", DumpExperimentConfig(config));
  const auto factory = MakeEconEnvFactory(config.scenario, config.imarl.hidden);
  const ImarlResult result = TrainImarl(factory, config.imarl, true);
  const auto names = RoleNames(config);
  fs::create_directories(dir / "policies");
  json index = json::array();
  for (std::size_t r = 0; r < result.policies.size(); ++r) {
    const std::string rel = "policies/" + names[r] + ".ckpt";
    SavePolicy(result.policies[r], dir / rel);
    index.push_back({{"role", names[r]},
                     {"checkpoint", rel},
                     {"hash", PolicyHash(result.policies[r])}});
  }
  WriteText(dir / "policies.json", index.dump(2) + "\n");
  WriteText(dir / "training_curve.csv", CurveCsv(result.curve));
  Finish(dir, manifest);
  out << "train-imarl: " << config.imarl.episodes << " episodes, outputs in "
      << dir.string() << "\n";
  return 0;
}

void SavePsroState(const fs::path& dir, const PsroState& state,
                   const std::vector<std::string>& names) {
  SaveGame(dir / "game", state.game, names, &state.profile);
  json doc{{"diagnostics", DiagnosticsJson(state.diagnostics)},
           {"curve", CurveJson(state.curve)}};
  WriteText(dir / "psro_state.json.tmp", doc.dump() + "\n");
  fs::rename(dir / "psro_state.json.tmp", dir / "psro_state.json");
}

int TrainPsroCommand(const Flags& f, std::ostream& out) {
  ExperimentConfig config = ResolveConfig(f, true, "");
  if (f.episodes) config.psro.episodes_per_oracle = *f.episodes;
  if (f.runs) config.psro.runs_per_cell = *f.runs;
  if (f.epochs) config.psro.epochs = *f.epochs;
  Validate(config.psro);
  const fs::path dir = OutDir(f);
  fs::create_directories(dir);
  RunManifest manifest = StartManifest("train-psro", config);
  const auto names = RoleNames(config);
  std::optional<PsroState> resume;
  if (f.resume && fs::exists(dir / "psro_state.json")) {
    // Only the epoch count may change between runs.
    ExperimentConfig saved = LoadExperimentConfig(dir / "config.json");
    saved.psro.epochs = config.psro.epochs;
    if (DumpExperimentConfig(saved) != DumpExperimentConfig(config)) {
      throw ConsistencyError("cannot resume: configuration differs");
    }
    StoredGame stored = LoadGame(dir / "game");
    const json doc = json::parse(ReadText(dir / "psro_state.json"));
    resume.emplace();
    resume->game = std::move(stored.game);
    resume->profile = stored.profile.value();
    resume->diagnostics = DiagnosticsFromJson(doc.at("diagnostics"));
    resume->curve = CurveFromJson(doc.at("curve"));
    out << "train-psro: resuming after epoch "
        << resume->completed_epochs() << "\n";
  }
  WriteText(dir / "config.json", DumpExperimentConfig(config));
  const auto factory =
      MakeEconEnvFactory(config.scenario, config.psro.train.hidden);
  const PsroState state = RunPsro(
      factory, config.psro,
      [&](const PsroState& s) { SavePsroState(dir, s, names); },
      resume ? &*resume : nullptr);
  WriteText(dir / "training_curve.csv", CurveCsv(state.curve));
  WriteText(dir / "psro_diagnostics.csv", DiagnosticsCsv(state.diagnostics));
  std::ostringstream utilities;
  WriteUtilityCsv(utilities, state.game, names);
  WriteText(dir / "utilities.csv", utilities.str());
  Finish(dir, manifest);
  const auto& last = state.diagnostics.back();
  out << "train-psro: " << state.completed_epochs() << " epochs, "
      << state.game.num_cells() << " cells, solver regret "
      << Num(last.solver_regret) << (last.approximate ? " (approximate)" : "")
      << ", outputs in " << dir.string() << "\n";
  return 0;
}

bool IsPsroDir(const fs::path& dir) {
  return fs::exists(dir / "game" / "game.json");
}

int EvaluateCommand(const Flags& f, std::ostream& out) {
  if (f.input.empty()) throw UsageError("--input is required");
  ExperimentConfig config = ResolveConfig(f, false, f.input);
  if (f.episodes) config.evaluation.episodes = *f.episodes;
  if (f.deterministic) config.evaluation.deterministic = true;
  const fs::path dir = OutDir(f);
  fs::create_directories(dir);
  RunManifest manifest = StartManifest("evaluate", config);
  manifest.inputs = {f.input};

  EvaluationOptions options;
  options.episodes = config.evaluation.episodes;
  options.seed = config.seed;
  options.deterministic = config.evaluation.deterministic;
  std::vector<EpisodeLogRow> rows;
  if (IsPsroDir(f.input)) {
    const StoredGame stored = LoadPsroOutput(f.input);
    std::vector<std::vector<const PolicyParams*>> sets;
    for (int i = 0; i < stored.game.num_players(); ++i) {
      sets.emplace_back();
      for (const Strategy& s : stored.game.strategies(i)) {
        sets.back().push_back(&s.params);
      }
    }
    options.scheme = "psro";
    rows = EvaluateEpisodes(config.scenario,
                            OpponentSampler(sets, *stored.profile), options);
  } else {
    const ImarlOutput imarl = LoadImarlOutput(f.input);
    std::vector<const PolicyParams*> policies;
    for (const auto& p : imarl.policies) policies.push_back(&p);
    options.scheme = "imarl";
    rows = EvaluateEpisodes(config.scenario, policies, options);
  }
  std::ostringstream log;
  WriteEpisodeLog(log, rows);
  WriteText(dir / "episode_log.csv", log.str());
  Finish(dir, manifest);
  out << "evaluate: " << options.episodes << " episodes of " << options.scheme
      << " policies, " << rows.size() << " rows\n";
  return 0;
}

int RegretCommand(const Flags& f, std::ostream& out) {
  if (f.imarl.empty() || f.psro.empty()) {
    throw UsageError("--imarl and --psro are required");
  }
  ExperimentConfig config = ResolveConfig(f, false, f.psro);
  const int runs = f.runs.value_or(config.psro.final_eval_runs);
  const fs::path dir = OutDir(f);
  fs::create_directories(dir);
  RunManifest manifest = StartManifest("regret", config);
  manifest.inputs = {f.imarl, f.psro};

  const ImarlOutput imarl = LoadImarlOutput(f.imarl);
  const StoredGame psro = LoadPsroOutput(f.psro);
  const int n = psro.game.num_players();
  if (static_cast<int>(imarl.policies.size()) != n) {
    throw ConsistencyError("IMARL and PSRO outputs have different roles");
  }
  // Strategy k = 0 is the IMARL policy, k >= 1 the PSRO strategies.
  std::vector<std::vector<Strategy>> sets(n);
  MixedStrategyProfile sigma_imarl(n), sigma_psro(n);
  std::vector<DeviationSet> deviations(n);
  for (int i = 0; i < n; ++i) {
    sets[i].push_back({"imarl", imarl.policies[i]});
    for (const Strategy& s : psro.game.strategies(i)) sets[i].push_back(s);
    const std::size_t size = sets[i].size();
    sigma_imarl[i].assign(size, 0.0);
    sigma_imarl[i][0] = 1.0;
    sigma_psro[i].assign(1, 0.0);
    sigma_psro[i].insert(sigma_psro[i].end(), (*psro.profile)[i].begin(),
                         (*psro.profile)[i].end());
    deviations[i].names = {"IMARL", "PSRO"};
    deviations[i].mixtures = {sigma_imarl[i], sigma_psro[i]};
  }
  std::vector<std::string> labels;
  for (const auto& name : psro.role_names) {
    labels.push_back(RoleDisplayName(name));
  }
  const auto factory = MakeEconEnvFactory(config.scenario,
                                          config.psro.train.hidden);
  CellEvalOptions options{.runs = runs,
                          .seed = MixKey({config.seed, 0x72656772ULL}),
                          .parallel = true,
                          .deterministic = false};
  std::vector<std::pair<std::string, RegretReport>> rows;
  rows.emplace_back("IMARL", ComputeRegret(sets, sigma_imarl, factory, options,
                                           labels, &deviations));
  rows.emplace_back("PSRO", ComputeRegret(sets, sigma_psro, factory, options,
                                          labels, &deviations));
  std::ostringstream csv;
  WriteRegretCsv(csv, rows);
  WriteText(dir / "regret.csv", csv.str());
  const std::string table = FormatRegretTable(rows);
  WriteText(dir / "regret_table.txt", table);
  std::ostringstream dev;
  dev << "candidate,role,deviation,utility\n";
  for (const auto& [label, report] : rows) {
    for (int i = 0; i < n; ++i) {
      for (std::size_t d = 0; d < report.deviation_names[i].size(); ++d) {
        dev << label << ',' << psro.role_names[i] << ','
            << report.deviation_names[i][d] << ','
            << Num(report.deviation_utilities[i][d]) << '\n';
      }
    }
  }
  WriteText(dir / "deviation_utilities.csv", dev.str());
  Finish(dir, manifest);
  out << table;
  return 0;
}

int FactsCommand(const Flags& f, std::ostream& out) {
  if (f.input.empty()) throw UsageError("--input is required");
  const fs::path log_path = fs::is_directory(f.input)
                                ? fs::path(f.input) / "episode_log.csv"
                                : fs::path(f.input);
  ExperimentConfig config = ResolveConfig(f, false, "");
  const fs::path dir = OutDir(f);
  fs::create_directories(dir);
  RunManifest manifest = StartManifest("facts", config);
  manifest.inputs = {f.input};
  std::ifstream in(log_path);
  if (!in) throw std::runtime_error("cannot read " + log_path.string());
  const auto rows = ReadEpisodeLog(in);
  const auto demand = CheckLawOfDemand(rows);
  const auto rates = CheckRateInflationRelation(
      rows, config.scenario.central_bank.target_inflation);
  const json doc{
      {"law_of_demand",
       {{"verdict", VerdictName(demand.verdict)},
        {"mean_price", demand.mean_price},
        {"mean_consumption", demand.mean_consumption},
        {"rank_correlation", demand.rank_correlation},
        {"pooled_rank_correlation", demand.pooled_rank_correlation},
        {"detail", demand.detail}}},
      {"rate_inflation",
       {{"verdict", VerdictName(rates.verdict)},
        {"quarters_above", rates.above},
        {"quarters_below", rates.below},
        {"mean_rate_above", rates.mean_rate_above},
        {"mean_rate_below", rates.mean_rate_below},
        {"gap", rates.gap},
        {"detail", rates.detail}}}};
  WriteText(dir / "facts.json", doc.dump(2) + "\n");
  Finish(dir, manifest);
  out << "law_of_demand: " << VerdictName(demand.verdict) << " ("
      << demand.detail << ")\n"
      << "rate_inflation: " << VerdictName(rates.verdict) << " ("
      << rates.detail << ")\n";
  return 0;
}

int ExportGameCommand(const Flags& f, std::ostream& out) {
  if (f.input.empty()) throw UsageError("--input is required");
  ExperimentConfig config = ResolveConfig(f, false, f.input);
  const fs::path dir = OutDir(f);
  fs::create_directories(dir);
  RunManifest manifest = StartManifest("export-game", config);
  manifest.inputs = {f.input};
  const StoredGame stored = LoadPsroOutput(f.input);
  SaveGame(dir / "game", stored.game, stored.role_names,
           stored.profile ? &*stored.profile : nullptr);
  std::ostringstream csv;
  WriteUtilityCsv(csv, stored.game, stored.role_names);
  WriteText(dir / "utilities.csv", csv.str());
  Finish(dir, manifest);
  out << "export-game: " << stored.game.num_cells() << " cells\n";
  return 0;
}

const char* ErrorKind(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return "config";
  if (dynamic_cast<const DecodeError*>(&e)) return "decode";
  if (dynamic_cast<const ChecksumError*>(&e)) return "checksum";
  if (dynamic_cast<const ShapeError*>(&e)) return "shape";
  if (dynamic_cast<const ConsistencyError*>(&e)) return "consistency";
  if (dynamic_cast<const TrainingError*>(&e)) return "training";
  if (dynamic_cast<const ContractViolation*>(&e)) return "contract";
  if (dynamic_cast<const json::exception*>(&e)) return "format";
  return "runtime";
}

std::string OneLine(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

std::string RoleDisplayName(const std::string& role) {
  std::string out;
  bool upper = true;
  for (char c : role) {
    if (c == '_') {
      out += ' ';
      upper = true;
    } else {
      out += upper ? static_cast<char>(std::toupper(c)) : c;
      upper = false;
    }
  }
  return out;
}

void WriteTrainingCurve(std::ostream& out,
                        const std::vector<CurvePoint>& curve) {
  out << "# econgame training_curve v1\n"
      << "scheme,epoch,episode,agent_id,agent_type,discounted_return,"
         "moving_avg\n";
  for (const CurvePoint& p : curve) {
    out << p.scheme << ',' << p.epoch << ',' << p.episode << ','
        << p.agent_id << ',' << p.agent_type << ','
        << Num(p.discounted_return) << ',' << Num(p.moving_avg) << '\n';
  }
}

ImarlOutput LoadImarlOutput(const fs::path& dir) {
  const json index = json::parse(ReadText(dir / "policies.json"));
  ImarlOutput out;
  for (const auto& entry : index) {
    out.role_names.push_back(entry.at("role").get<std::string>());
    const std::string rel = entry.at("checkpoint").get<std::string>();
    PolicyParams p = LoadPolicy(dir / rel);
    if (PolicyHash(p) != entry.at("hash").get<std::string>()) {
      throw ChecksumError("checkpoint " + rel +
                          " does not match its recorded hash");
    }
    out.policies.push_back(std::move(p));
  }
  return out;
}

StoredGame LoadPsroOutput(const fs::path& dir) {
  StoredGame stored = LoadGame(dir / "game");
  if (!stored.profile) {
    throw ConsistencyError("PSRO output has no meta-strategy");
  }
  return stored;
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"econgame: multi-agent economy, IMARL and PSRO"};
  app.require_subcommand(1);
  Flags f;
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", f.config, "experiment config (JSON)");
    sub->add_option("--seed", f.seed, "global seed");
    sub->add_option("--out", f.out, "output directory");
    sub->add_option("--jobs", f.jobs, "worker threads (0 = all)");
  };
  auto* imarl = app.add_subcommand("train-imarl", "independent training");
  common(imarl);
  imarl->add_option("--episodes", f.episodes, "training episodes");
  auto* psro = app.add_subcommand("train-psro", "PSRO training");
  common(psro);
  psro->add_option("--episodes", f.episodes, "episodes per oracle (M)");
  psro->add_option("--runs", f.runs, "runs per cell");
  psro->add_option("--epochs", f.epochs, "PSRO epochs (N)");
  psro->add_flag("--resume", f.resume, "continue from saved epochs");
  auto* evaluate = app.add_subcommand("evaluate", "test episodes");
  common(evaluate);
  evaluate->add_option("--input", f.input, "train-imarl or train-psro output");
  evaluate->add_option("--episodes", f.episodes, "test episodes");
  evaluate->add_flag("--deterministic", f.deterministic, "argmax actions");
  auto* regret = app.add_subcommand("regret", "IMARL vs PSRO regret");
  common(regret);
  regret->add_option("--imarl", f.imarl, "train-imarl output");
  regret->add_option("--psro", f.psro, "train-psro output");
  regret->add_option("--runs", f.runs, "episodes per joint profile");
  auto* facts = app.add_subcommand("facts", "stylized-fact checks");
  common(facts);
  facts->add_option("--input", f.input, "evaluate output or episode log");
  auto* exp = app.add_subcommand("export-game", "export the empirical game");
  common(exp);
  exp->add_option("--input", f.input, "train-psro output");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      throw UsageError(e.what());
    }
    if (f.jobs < 0) throw UsageError("--jobs must be >= 0");
    if (f.jobs > 0) omp_set_num_threads(f.jobs);
    if (imarl->parsed()) return TrainImarlCommand(f, out);
    if (psro->parsed()) return TrainPsroCommand(f, out);
    if (evaluate->parsed()) return EvaluateCommand(f, out);
    if (regret->parsed()) return RegretCommand(f, out);
    if (facts->parsed()) return FactsCommand(f, out);
    return ExportGameCommand(f, out);
  } catch (const UsageError& e) {
    err << "error: usage: " << OneLine(e.what()) << "\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "error: config: " << OneLine(e.what()) << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << ErrorKind(e) << ": " << OneLine(e.what()) << "\n";
    return 1;
  }
}

}  // namespace econgame

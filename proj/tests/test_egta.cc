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
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "econgame/core/errors.h"
#include "econgame/core/rng.h"
#include "econgame/egta/cell_eval.h"
#include "econgame/egta/game.h"
#include "econgame/egta/game_io.h"
#include "econgame/egta/nash.h"
#include "econgame/egta/psro.h"
#include "econgame/egta/regret.h"
#include "econgame/policy/checkpoint.h"
#include "econgame/rl/stub_envs.h"
#include "oracles/game_oracle.h"

using namespace econgame;
using doctest::Approx;

namespace {

oracle::Tensor RandomTensor(const std::vector<int>& shape,
                            std::uint64_t seed) {
  SplitMixStream rng(seed);
  oracle::Tensor t{shape, {}};
  std::size_t cells = 1;
  for (int s : shape) cells *= s;
  for (std::size_t k = 0; k < cells * shape.size(); ++k) {
    t.utilities.push_back(4 * rng.Uniform() - 2);
  }
  return t;
}

MixedStrategyProfile RandomProfile(const std::vector<int>& shape,
                                   SplitMixStream& rng, bool sparse) {
  MixedStrategyProfile p;
  for (int s : shape) {
    std::vector<double> d(s);
    double sum = 0;
    for (double& x : d) {
      x = (sparse && rng.Uniform() < 0.3) ? 0.0 : rng.Uniform();
      sum += x;
    }
    if (sum == 0.0) {
      d[0] = sum = 1.0;
    }
    for (double& x : d) x /= sum;
    p.push_back(d);
  }
  return p;
}

EmpiricalGame Bimatrix(const std::vector<std::vector<double>>& a,
                       const std::vector<std::vector<double>>& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  std::vector<double> u;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      u.push_back(a[r][c]);
      u.push_back(b[r][c]);
    }
  }
  return EmpiricalGame::FromPayoffs({rows, cols}, u);
}

EnvFactory ConstantFactory(int roles) {
  return [roles] {
    return std::make_unique<ConstantRewardEnv>(roles, 40, 1.0, 0.99);
  };
}

std::vector<std::vector<Strategy>> RandomStrategies(const EnvFactory& f,
                                                    int per_role,
                                                    std::uint64_t seed) {
  const auto env = f();
  std::vector<std::vector<Strategy>> sets(env->roles().size());
  for (std::size_t r = 0; r < sets.size(); ++r) {
    for (int k = 0; k < per_role; ++k) {
      sets[r].push_back({"s" + std::to_string(k),
                         InitPolicy(env->roles()[r].policy,
                                    MixKey({seed, r, static_cast<std::uint64_t>(
                                                         k)}))});
    }
  }
  return sets;
}

}  // namespace

TEST_CASE("cell indexing is row-major and invertible") {
  const auto t = RandomTensor({2, 3, 2}, 1);
  const EmpiricalGame g = EmpiricalGame::FromPayoffs(t.shape, t.utilities);
  CHECK(g.num_cells() == 12);
  oracle::Enumerate(t.shape, [&](std::size_t cell, const std::vector<int>& s) {
    CHECK(g.CellIndex(s) == cell);
    CHECK(g.CellProfile(cell) == s);
    for (int i = 0; i < 3; ++i) CHECK(g.utilities(cell)[i] == t.utilities[cell * 3 + i]);
  });
}

TEST_CASE("expected utility examples") {
  const EmpiricalGame g = Bimatrix({{1, 2}, {3, 4}}, {{5, 6}, {7, 8}});
  CHECK(ExpectedUtility(g, PureProfile({2, 2}, std::vector<int>{1, 0}), 0) == 3);
  CHECK(ExpectedUtility(g, UniformProfile({2, 2}), 0) == 2.5);
  CHECK(ExpectedUtility(g, UniformProfile({2, 2}), 1) == 6.5);
  CHECK_THROWS_AS(ExpectedUtility(g, {{0.5, 0.6}, {0.5, 0.5}}, 0),
                  ContractViolation);
}

TEST_CASE("expected utility matches enumeration") {
  SplitMixStream rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> shape;
    const int players = 2 + trial % 3;
    for (int i = 0; i < players; ++i) shape.push_back(1 + rng() % 3);
    if (trial % 5 == 0) shape = {3, 3, 3, 3};
    const auto t = RandomTensor(shape, trial);
    const EmpiricalGame g = EmpiricalGame::FromPayoffs(shape, t.utilities);
    const auto sigma = RandomProfile(shape, rng, trial % 2 == 0);
    const auto dev = DeviationPayoffs(g, sigma);
    for (int i = 0; i < players; ++i) {
      CHECK(std::abs(ExpectedUtility(g, sigma, i) -
                     oracle::Expected(t, sigma, i)) <= 1e-12);
      for (int k = 0; k < shape[i]; ++k) {
        auto pure = sigma;
        std::fill(pure[i].begin(), pure[i].end(), 0.0);
        pure[i][k] = 1.0;
        CHECK(std::abs(dev[i][k] - oracle::Expected(t, pure, i)) <= 1e-12);
      }
    }
    CHECK(std::abs(MaxRegret(g, sigma) - oracle::Regret(t, sigma)) <= 1e-12);
  }
}

TEST_CASE("expected utility is affine in each player's mixture") {
  SplitMixStream rng(4);
  const std::vector<int> shape{3, 2, 3};
  const auto t = RandomTensor(shape, 9);
  const EmpiricalGame g = EmpiricalGame::FromPayoffs(shape, t.utilities);
  for (int point = 0; point < 3; ++point) {
    const auto base = RandomProfile(shape, rng, false);
    const auto other = RandomProfile(shape, rng, false);
    for (int i = 0; i < 3; ++i) {
      const double lambda = rng.Uniform();
      auto a = base, b = base, mix = base;
      b[i] = other[i];
      for (int k = 0; k < shape[i]; ++k) {
        mix[i][k] = lambda * a[i][k] + (1 - lambda) * b[i][k];
      }
      for (int p = 0; p < 3; ++p) {
        CHECK(ExpectedUtility(g, mix, p) ==
              Approx(lambda * ExpectedUtility(g, a, p) +
                     (1 - lambda) * ExpectedUtility(g, b, p))
                  .epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("pending cells") {
  EmpiricalGame g(2);
  g.AddStrategies({{{"a", {}}}, {{"x", {}}, {"y", {}}}});
  CHECK(g.num_cells() == 2);
  CHECK(g.PendingCells().size() == 2);
  g.SetUtilities(0, std::vector<double>{1, 2});
  CHECK(ExpectedUtility(g, {{1.0}, {1.0, 0.0}}, 0) == 1.0);
  CHECK_THROWS_AS(ExpectedUtility(g, {{1.0}, {0.5, 0.5}}, 0),
                  ContractViolation);
  CHECK_THROWS_AS(SolveNash(g, NashConfig{}), ContractViolation);
  CHECK_THROWS_AS(g.SetUtilities(1, std::vector<double>{std::nan(""), 0}),
                  ContractViolation);
  CHECK_THROWS_AS(g.SetUtilities(1, std::vector<double>{1}), ContractViolation);
}

TEST_CASE("adding strategies keeps old cells") {
  const auto t = RandomTensor({2, 2}, 5);
  EmpiricalGame g = EmpiricalGame::FromPayoffs({2, 2}, t.utilities);
  g.AddStrategies({{{"new", {}}}, {}});
  CHECK(g.shape() == std::vector<int>{3, 2});
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const std::vector<int> s{r, c};
      const auto cell = g.CellIndex(s);
      CHECK(g.status(cell) == CellStatus::kEvaluated);
      CHECK(g.utilities(cell)[0] == t.utilities[(2 * r + c) * 2]);
      CHECK(g.evaluation_count(cell) == 1);
    }
  }
  CHECK(g.PendingCells().size() == 2);
}

TEST_CASE("nash: matching pennies") {
  const EmpiricalGame g = Bimatrix({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}});
  const NashResult r = SolveNash(g, NashConfig{});
  for (const auto& d : r.profile) {
    CHECK(std::abs(d[0] - 0.5) <= 1e-3);
    CHECK(std::abs(d[1] - 0.5) <= 1e-3);
  }
  CHECK_FALSE(r.approximate);
}

TEST_CASE("nash: prisoner's dilemma") {
  const EmpiricalGame g = Bimatrix({{3, 0}, {5, 1}}, {{3, 5}, {0, 1}});
  const NashResult r = SolveNash(g, NashConfig{});
  CHECK(r.profile[0] == std::vector<double>{0.0, 1.0});
  CHECK(r.profile[1] == std::vector<double>{0.0, 1.0});
  CHECK(r.regret == 0.0);
  CHECK(r.method == "pure");
}

TEST_CASE("nash: single strategies") {
  const EmpiricalGame g =
      EmpiricalGame::FromPayoffs({1, 1, 1, 1}, std::vector<double>{1, 2, 3, 4});
  const NashResult r = SolveNash(g, NashConfig{});
  for (const auto& d : r.profile) CHECK(d == std::vector<double>{1.0});
  CHECK(r.regret == 0.0);
}

TEST_CASE("nash: random four-player games") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = RandomTensor({2, 2, 2, 2}, 1000 + trial);
    const EmpiricalGame g = EmpiricalGame::FromPayoffs(t.shape, t.utilities);
    NashConfig cfg;
    cfg.seed = trial;
    const NashResult r = SolveNash(g, cfg);
    ValidateProfile(r.profile, t.shape);
    const double verified = oracle::Regret(t, r.profile);
    INFO("trial " << trial << " method " << r.method);
    CHECK(verified <= 1e-3);
    CHECK(std::abs(verified - r.regret) <= 1e-9);
  }
}

TEST_CASE("nash: three-strategy games") {
  // Rock-paper-scissors has a unique interior equilibrium.
  const EmpiricalGame g =
      Bimatrix({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}},
               {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
  const NashResult r = SolveNash(g, NashConfig{});
  for (const auto& d : r.profile) {
    for (double x : d) CHECK(std::abs(x - 1.0 / 3) <= 1e-3);
  }
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = RandomTensor({3, 3, 3}, 50 + trial);
    const EmpiricalGame h = EmpiricalGame::FromPayoffs(t.shape, t.utilities);
    const NashResult s = SolveNash(h, NashConfig{});
    CHECK(oracle::Regret(t, s.profile) <= 1e-3);
  }
}

TEST_CASE("constant-reward utility is the geometric sum") {
  const EnvFactory f = ConstantFactory(2);
  const auto sets = RandomStrategies(f, 1, 1);
  const std::vector<const PolicyParams*> policies{&sets[0][0].params,
                                                  &sets[1][0].params};
  const std::vector<int> cell{0, 0};
  CellEvalOptions opt;
  opt.runs = 3;
  const auto u = EstimateUtilities(f, policies, cell, opt);
  const double expected = (1 - std::pow(0.99, 40)) / 0.01;
  CHECK(u[0] == Approx(expected).epsilon(1e-12));
  CHECK(u[1] == Approx(33.1029).epsilon(1e-5));
  CHECK(EstimateUtilities(f, policies, cell, opt) == u);
}

TEST_CASE("cell evaluation does not depend on the schedule") {
  const EnvFactory f = [] {
    return std::make_unique<BimatrixEnv>(
        std::vector<std::vector<double>>{{3, 0}, {5, 1}},
        std::vector<std::vector<double>>{{3, 5}, {0, 1}});
  };
  const auto sets = RandomStrategies(f, 3, 2);
  EmpiricalGame serial(2), parallel(2);
  serial.AddStrategies(sets);
  parallel.AddStrategies(sets);
  CellEvalOptions opt;
  opt.runs = 7;
  opt.parallel = false;
  const auto cells = serial.PendingCells();
  EvaluateCells(serial, f, cells, opt);
  opt.parallel = true;
  EvaluateCells(parallel, f, cells, opt);
  for (std::size_t c = 0; c < serial.num_cells(); ++c) {
    CHECK(std::equal(serial.utilities(c).begin(), serial.utilities(c).end(),
                     parallel.utilities(c).begin()));
  }
  CHECK(serial.runs_per_cell == 7);
}

TEST_CASE("expansion evaluates exactly the new cells") {
  const EnvFactory f = ConstantFactory(4);
  const auto pool = RandomStrategies(f, 4, 3);
  EmpiricalGame g(4);
  CellEvalOptions opt;
  opt.runs = 1;
  std::vector<std::vector<Strategy>> first(4);
  for (int r = 0; r < 4; ++r) first[r].push_back(pool[r][0]);
  CHECK(ExpandEmpiricalGame(g, first, f, opt) == 1);
  for (int e = 1; e <= 3; ++e) {
    std::vector<std::vector<Strategy>> next(4);
    for (int r = 0; r < 4; ++r) next[r].push_back(pool[r][e]);
    const long before = g.total_evaluations();
    const int evaluated = ExpandEmpiricalGame(g, next, f, opt);
    const int expected = static_cast<int>(std::pow(e + 1, 4) - std::pow(e, 4));
    CHECK(evaluated == expected);
    CHECK(g.total_evaluations() - before == expected);
    for (std::size_t c = 0; c < g.num_cells(); ++c) {
      CHECK(g.evaluation_count(c) == 1);
    }
  }
  CHECK(ExpandEmpiricalGame(g, std::vector<std::vector<Strategy>>(4), f, opt) ==
        0);
}

TEST_CASE("psro: one epoch, one episode") {
  PsroConfig cfg = DefaultPsroConfig();
  cfg.epochs = 1;
  cfg.episodes_per_oracle = 1;
  cfg.runs_per_cell = 1;
  cfg.train.learning_rates = {1e-3, 1e-3, 1e-3, 1e-3};
  cfg.train.hidden = {4};
  int calls = 0;
  const PsroState s =
      RunPsro(ConstantFactory(4), cfg, [&](const PsroState&) { ++calls; });
  CHECK(s.game.shape() == std::vector<int>{2, 2, 2, 2});
  CHECK(s.game.num_cells() == 16);
  CHECK(s.game.complete());
  CHECK(s.completed_epochs() == 1);
  CHECK(s.diagnostics[1].new_cells == 15);
  CHECK(calls == 2);
  for (const auto& d : s.profile) {
    double sum = 0;
    for (double x : d) {
      CHECK(x >= 0.0);
      sum += x;
    }
    CHECK(std::abs(sum - 1) <= 1e-9);
  }
}

TEST_CASE("psro on a bimatrix stub") {
  const EnvFactory f = [] {
    return std::make_unique<BimatrixEnv>(
        std::vector<std::vector<double>>{{3, 0}, {5, 1}},
        std::vector<std::vector<double>>{{3, 5}, {0, 1}});
  };
  PsroConfig cfg;
  cfg.epochs = 3;
  cfg.episodes_per_oracle = 40;
  cfg.runs_per_cell = 5;
  cfg.train.learning_rates = {2e-2, 2e-2};
  cfg.train.hidden = {8};
  cfg.seed = 5;
  const PsroState s = RunPsro(f, cfg);
  REQUIRE(s.completed_epochs() == 3);
  for (int e = 1; e <= 3; ++e) {
    const auto& d = s.diagnostics[e];
    CHECK(d.new_cells == (e + 1) * (e + 1) - e * e);
    CHECK(d.set_sizes == std::vector<int>{e + 1, e + 1});
  }
  oracle::Tensor t{s.game.shape(), {}};
  for (std::size_t c = 0; c < s.game.num_cells(); ++c) {
    for (double u : s.game.utilities(c)) t.utilities.push_back(u);
  }
  CHECK(oracle::Regret(t, s.profile) <= 0.01);

  // Rerun and resume reproduce the same game.
  const PsroState again = RunPsro(f, cfg);
  CHECK(again.profile == s.profile);
  PsroConfig shorter = cfg;
  shorter.epochs = 1;
  PsroState partial = RunPsro(f, shorter);
  const PsroState resumed = RunPsro(f, cfg, {}, &partial);
  CHECK(resumed.profile == s.profile);
  for (std::size_t c = 0; c < s.game.num_cells(); ++c) {
    CHECK(std::equal(resumed.game.utilities(c).begin(),
                     resumed.game.utilities(c).end(),
                     s.game.utilities(c).begin()));
  }
}

TEST_CASE("regret fixture") {
  // Player 0 gains exactly 0.5 by switching; player 1 has nothing to gain.
  const EmpiricalGame g =
      EmpiricalGame::FromPayoffs({2, 1}, std::vector<double>{1.0, 2.0, 1.5, 2.0});
  const RegretReport r =
      RegretFromGame(g, {{1.0, 0.0}, {1.0}}, {"a", "b"});
  CHECK(r.absolute[0] == 0.5);
  CHECK(r.absolute[1] == 0.0);
  CHECK(*r.percentage[0] == Approx(50.0));
  CHECK(r.total_absolute == 0.5);
  CHECK(*r.total_percentage == Approx(100.0 * 0.5 / 3.0));
  // Restricting the deviation set to the candidate itself removes the gain.
  std::vector<DeviationSet> own(2);
  own[0] = {{"self"}, {{1.0, 0.0}}};
  own[1] = {{"self"}, {{1.0}}};
  CHECK(RegretFromGame(g, {{1.0, 0.0}, {1.0}}, {"a", "b"}, &own)
            .total_absolute == 0.0);
}

TEST_CASE("regret of a nash profile over its own game is within tolerance") {
  SplitMixStream rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    const auto t = RandomTensor({2, 3, 2}, 300 + trial);
    const EmpiricalGame g = EmpiricalGame::FromPayoffs(t.shape, t.utilities);
    const NashResult n = SolveNash(g, NashConfig{});
    const RegretReport r = RegretFromGame(g, n.profile, {"a", "b", "c"});
    for (double x : r.absolute) {
      CHECK(x >= 0.0);
      CHECK(x <= 1e-3);
    }
  }
}

TEST_CASE("deviation cells and partial regret") {
  const EnvFactory f = ConstantFactory(2);
  const auto sets = RandomStrategies(f, 3, 4);
  std::vector<DeviationSet> devs(2);
  devs[0] = {{"first"}, {{1.0, 0.0, 0.0}}};
  devs[1] = {{"second"}, {{0.0, 1.0, 0.0}}};
  const MixedStrategyProfile candidate{{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
  EmpiricalGame evaluated(1);
  CellEvalOptions opt;
  opt.runs = 2;
  const RegretReport r = ComputeRegret(sets, candidate, f, opt, {"a", "b"},
                                       &devs, &evaluated);
  // The candidate cell plus player 1 deviating to its second strategy.
  CHECK(evaluated.total_evaluations() == 2);
  CHECK(r.absolute == std::vector<double>{0.0, 0.0});
  CHECK(r.deviation_names[1] == std::vector<std::string>{"second"});
}

TEST_CASE("regret formatting") {
  CHECK(FormatRegretCell(3.8249, 5.3312) == "3.82 (5.33%)");
  CHECK(FormatRegretCell(0.0, 0.0) == "0.00 (0.00%)");
  CHECK(FormatRegretCell(1.0, std::nullopt) == "1.00 (undefined)");
  const EmpiricalGame g = EmpiricalGame::FromPayoffs({1}, std::vector<double>{0.0});
  const RegretReport r = RegretFromGame(g, {{1.0}}, {"x"});
  CHECK_FALSE(r.percentage[0].has_value());
}

TEST_CASE("game persistence round trip") {
  const EnvFactory f = ConstantFactory(2);
  EmpiricalGame g(2);
  CellEvalOptions opt;
  opt.runs = 1;
  ExpandEmpiricalGame(g, RandomStrategies(f, 2, 8), f, opt);
  const auto dir = std::filesystem::temp_directory_path() / "econgame_game_io";
  std::filesystem::remove_all(dir);
  const MixedStrategyProfile sigma{{0.25, 0.75}, {1.0, 0.0}};
  SaveGame(dir, g, {"a", "b"}, &sigma);
  const StoredGame s = LoadGame(dir);
  CHECK(s.role_names == std::vector<std::string>{"a", "b"});
  CHECK(s.profile == sigma);
  CHECK(s.game.shape() == g.shape());
  for (std::size_t c = 0; c < g.num_cells(); ++c) {
    CHECK(std::equal(g.utilities(c).begin(), g.utilities(c).end(),
                     s.game.utilities(c).begin()));
    CHECK(s.game.evaluation_count(c) == g.evaluation_count(c));
  }
  CHECK(s.game.strategies(1)[1].params.values ==
        g.strategies(1)[1].params.values);

  std::ostringstream csv;
  WriteUtilityCsv(csv, g, {"a", "b"});
  CHECK(csv.str().rfind("cell,profile,role,strategy,utility,status,evaluations\n",
                        0) == 0);

  // Tamper with one checkpoint.
  for (const auto& entry :
       std::filesystem::directory_iterator(dir / "checkpoints")) {
    SavePolicy(InitPolicy(g.strategies(0)[0].params.spec, 999), entry.path());
    break;
  }
  CHECK_THROWS_AS(LoadGame(dir), ChecksumError);
}

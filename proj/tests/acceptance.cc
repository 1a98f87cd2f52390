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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "econgame/core/dynamics.h"
#include "econgame/core/errors.h"
#include "econgame/core/rng.h"
#include "econgame/egta/cell_eval.h"
#include "econgame/egta/game.h"
#include "econgame/egta/nash.h"
#include "econgame/egta/psro.h"
#include "econgame/egta/regret.h"
#include "econgame/env/economy.h"
#include "econgame/env/scenario.h"
#include "econgame/harness/episode_log.h"
#include "econgame/harness/facts.h"
#include "econgame/rl/econ_env.h"
#include "econgame/rl/oracle.h"
#include "econgame/rl/rollout.h"
#include "econgame/rl/stub_envs.h"
#include "oracles/econ_oracle.h"
#include "oracles/game_oracle.h"
#include "oracles/grad_check.h"
#include "oracles/ppo_fixture.h"

using namespace econgame;

namespace {

// Collects failed checks of one criterion.
class Ledger {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += !ok;
  }
  void Close(double a, double b, double rel, const std::string& what) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    std::ostringstream s;
    s.precision(12);
    s << what << ": " << a << " vs " << b;
    Expect(std::abs(a - b) <= rel * scale, s.str());
  }
  void Note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failed_ == 0; }
  long checks() const { return checks_; }
  std::string Summary() const {
    std::string s;
    for (const auto& n : notes_) s += "; " + n;
    if (failed_ > 0) {
      s += "; " + std::to_string(failed_) + " failed, first: " + failures_[0];
    }
    return s;
  }

 private:
  long checks_ = 0;
  long failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

constexpr double kRel = 1e-9;

// ---------------------------------------------------------------- [1]

void EquationOracles(Ledger& L) {
  const NormalizationDefaults norm{};
  HouseholdParams h;
  h.skills = {1.0};
  h.gamma = 0.33;
  h.nu = 0.5;
  h.mu = 1.0;

  // Listed examples.
  L.Close(AllocateConsumption(std::vector<double>{10, 20}, 15)[1], 10, kRel,
          "allocate pro rata");
  L.Close(AllocateConsumption(std::vector<double>{5, 5}, 20)[0], 5, kRel,
          "allocate surplus");
  L.Expect(AllocateConsumption(std::vector<double>{0, 0}, 7)[0] == 0,
           "allocate nothing requested");
  L.Close(UpdateSavings(0, 0.03, std::vector<double>{480 * 32.06},
                        std::vector<double>{12 * 322}, 0.235, 0),
          7908.432, kRel, "savings example");
  L.Close(UpdateSavings(100, 0, std::vector<double>{0}, std::vector<double>{0},
                        0.1, 0),
          100, kRel, "savings idle");
  L.Close(UpdateSavings(-100, 0.03, std::vector<double>{0},
                        std::vector<double>{0}, 0, 5),
          -98, kRel, "savings debt");
  L.Close(HouseholdUtility(1, 0, 0, h), 1 / 0.67, kRel, "utility c=1");
  L.Close(HouseholdUtility(0, 1, -1, h), -0.5 - 1 / 0.67, kRel,
          "utility debt");
  HouseholdParams h2 = h;
  h2.skills = {1, 1};
  L.Close(HouseholdReward(std::vector<double>{1, 1}, std::vector<double>{0, 0},
                          0, h2, RewardScale::kRaw, norm, {}),
          2 / 0.67, kRel, "household reward two firms");
  L.Close(EvolveProductionFactor(1, 0.97, 0.1), std::exp(0.1), kRel,
          "factor shock");
  L.Close(EvolveProductionFactor(2, 0.5, 0), std::sqrt(2.0), kRel,
          "factor decay");
  L.Close(Produce(1, 480, 2.0 / 3.0), std::cbrt(480.0 * 480.0), kRel,
          "cobb-douglas");
  L.Close(Produce(1, 960, 1), 960, kRel, "linear technology");
  L.Close(UpdateInventory(10, 5, 8), 7, kRel, "inventory");
  FirmParams f;
  L.Close(FirmReward(322, 32.06, 12, 480, 0, f, RewardScale::kRaw, norm, 1),
          -11524.8, kRel, "firm reward");
  L.Close(FirmReward(322, 0, 0, 0, 10, f, RewardScale::kRaw, norm, 2), -322,
          kRel, "firm holding cost");
  L.Close(ComputeInflation(std::vector<double>{600, 1, 1, 1, 612}), 1.02, kRel,
          "inflation");
  L.Close(ComputeInflation(std::vector<double>{644, 1, 1, 1, 322}), 0.5, kRel,
          "deflation");
  CentralBankParams cb;
  const std::vector<double> alphas{2.0 / 3.0, 1.0};
  L.Close(CentralBankReward(1.02, 2, cb, RewardScale::kRaw, alphas, 2, norm),
          1.0, kRel, "bank reward at target");
  L.Close(CentralBankReward(1.12, 0, cb, RewardScale::kRaw, alphas, 2, norm),
          -0.01, kRel, "bank reward off target");
  GovernmentParams g;
  L.Close(WelfareWeight(0, g), 1.2, kRel, "weight at zero");
  L.Close(WelfareWeight(10, g), 0.001, kRel, "weight floor");
  L.Close(WelfareWeight(-1, g), 3.2, kRel, "weight cap");
  const auto credits =
      ComputeTaxCredits(std::vector<double>{0.25, 0.75}, 400, 0.1);
  L.Close(credits[1], 30, kRel, "credits");
  L.Close(GovernmentReward(std::vector<double>{1.2, 3.2},
                           std::vector<double>{1, -1}),
          -2, kRel, "government reward");

  // Randomized comparisons, 1000 per operation.
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> z(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int I = 1 + trial % 4;
    const int J = 1 + (trial / 4) % 3;

    std::vector<double> req(I);
    for (double& r : req) r = trial % 9 == 0 ? 0.0 : 24 * u(rng);
    const double stock = 60 * u(rng);
    const auto got = AllocateConsumption(req, stock);
    const auto want = oracle::Allocate(req, stock);
    for (int i = 0; i < I; ++i) L.Close(got[i], want[i], kRel, "allocate");

    std::vector<double> hours(J), skill(J), wage(J), units(J), price(J);
    std::vector<double> income(J), cost(J);
    for (int j = 0; j < J; ++j) {
      hours[j] = 960 * u(rng);
      skill[j] = 3 * u(rng);
      wage[j] = 60 * u(rng);
      units[j] = 24 * u(rng);
      price[j] = 500 * u(rng);
      income[j] = hours[j] * skill[j] * wage[j];
      cost[j] = units[j] * price[j];
    }
    const double m = 4e4 * (u(rng) - 0.5), r = 0.06 * u(rng);
    const double tau = 0.5 * u(rng), kappa = 200 * u(rng);
    L.Close(UpdateSavings(m, r, income, cost, tau, kappa),
            oracle::Savings(m, r, hours, skill, wage, units, price, tau, kappa),
            kRel, "savings");

    HouseholdParams hp;
    hp.skills.assign(J, 1.0);
    hp.gamma = 0.05 + 0.9 * u(rng);
    hp.nu = u(rng);
    hp.mu = 2 * u(rng);
    const double c1 = 24 * u(rng), n1 = u(rng), m1 = 4 * (u(rng) - 0.5);
    L.Close(HouseholdUtility(c1, n1, m1, hp),
            oracle::Utility(c1, n1, m1, hp.gamma, hp.nu, hp.mu), kRel,
            "utility");
    for (bool normalized : {false, true}) {
      L.Close(HouseholdReward(units, hours, m, hp,
                              normalized ? RewardScale::kNormalized
                                         : RewardScale::kRaw,
                              norm, price),
              oracle::HouseholdReward(units, hours, m, hp.gamma, hp.nu, hp.mu,
                                      normalized, price),
              kRel, "household reward");
    }

    const double prev = std::exp(2 * z(rng)), rho = u(rng), e = z(rng);
    const double factor = EvolveProductionFactor(prev, rho, e);
    L.Close(factor, oracle::Factor(prev, rho, e), kRel, "factor");
    const double labor = trial % 13 == 0 ? 0.0 : 3000 * u(rng);
    const double alpha = 0.05 + 0.95 * u(rng);
    L.Close(Produce(factor, labor, alpha), oracle::Output(factor, labor, alpha),
            kRel, "output");

    const double inv = 100 * u(rng), made = 100 * u(rng);
    const double sold = (inv + made) * u(rng);
    L.Close(UpdateInventory(inv, made, sold), inv + made - sold, kRel,
            "inventory");

    FirmParams fp;
    fp.inventory_risk = u(rng);
    fp.shock_mean = u(rng) - 0.5;
    fp.shock_std = 0.3 * u(rng);
    const double p = 500 * u(rng), w = 60 * u(rng), sales = 50 * u(rng);
    const double skilled = 3000 * u(rng), stock_left = 200 * u(rng);
    for (bool normalized : {false, true}) {
      L.Close(FirmReward(p, w, sales, skilled, stock_left, fp,
                         normalized ? RewardScale::kNormalized
                                    : RewardScale::kRaw,
                         norm, I),
              oracle::FirmReward(p, w, sales, skilled, stock_left,
                                 fp.inventory_risk, fp.shock_mean, fp.shock_std,
                                 normalized, I),
              kRel, "firm reward");
    }

    std::vector<double> window(5);
    for (double& x : window) x = 100 + 1000 * u(rng);
    L.Close(ComputeInflation(window), oracle::Inflation(window), kRel,
            "inflation");

    CentralBankParams cbp;
    cbp.target_inflation = 1 + 0.05 * u(rng);
    cbp.production_weight = 0.01 + u(rng);
    std::vector<double> a(J);
    for (double& x : a) x = 0.1 + 0.9 * u(rng);
    const double pi = 0.5 + u(rng), y = 4000 * u(rng);
    for (bool normalized : {false, true}) {
      L.Close(CentralBankReward(pi, y, cbp,
                                normalized ? RewardScale::kNormalized
                                           : RewardScale::kRaw,
                                a, I, norm),
              oracle::BankReward(pi, y, cbp.target_inflation,
                                 cbp.production_weight, normalized, a, I),
              kRel, "bank reward");
    }

    GovernmentParams gp;
    gp.weight_slope = 0.1 + 2 * u(rng);
    gp.weight_intercept = 0.5 + u(rng);
    const double mm = 6 * (u(rng) - 0.5);
    L.Close(WelfareWeight(mm, gp),
            oracle::Weight(mm, gp.weight_slope, gp.weight_intercept,
                           gp.weight_floor, gp.weight_cap),
            kRel, "welfare weight");

    std::vector<double> frac(I), weights(I), rewards(I);
    double total = 0;
    for (double& x : frac) total += (x = u(rng) + 1e-3);
    for (double& x : frac) x /= total;
    const double collected = 1e4 * u(rng), xi = u(rng);
    const auto k = ComputeTaxCredits(frac, collected, xi);
    for (int i = 0; i < I; ++i) {
      L.Close(k[i], xi * frac[i] * collected, kRel, "credits");
      weights[i] = 3 * u(rng);
      rewards[i] = 10 * z(rng);
    }
    L.Close(GovernmentReward(weights, rewards),
            oracle::GovernmentReward(weights, rewards), kRel,
            "government reward");
  }
}

// ---------------------------------------------------------------- [2]

JointAction RandomAction(const Economy& econ, SplitMixStream& rng) {
  const auto pick = [&] { return static_cast<int>(rng() % 5); };
  JointAction a;
  for (int i = 0; i < econ.config().n_households(); ++i) {
    HouseholdAction h;
    for (int j = 0; j < econ.config().n_firms(); ++j) h.labor.push_back(pick());
    for (int j = 0; j < econ.config().n_firms(); ++j) {
      h.consumption.push_back(pick());
    }
    a.households.push_back(h);
    a.fractions.push_back(pick());
  }
  for (int j = 0; j < econ.config().n_firms(); ++j) {
    a.firms.push_back({pick(), pick()});
  }
  a.rate = pick();
  a.tax = pick();
  return a;
}

void EnvironmentBookkeeping(Ledger& L) {
  const ScenarioConfig c = HeterogeneousSkillsScenario();
  for (int episode = 0; episode < 100; ++episode) {
    std::vector<std::vector<double>> trace[2];
    for (int replay = 0; replay < 2; ++replay) {
      Economy econ(c);
      econ.Reset(1000 + episode);
      SplitMixStream rng(episode);
      std::vector<double> total_price;
      while (!econ.done()) {
        const JointObservation pre = econ.Observe();
        const StepResult r = econ.Step(RandomAction(econ, rng));
        const StepInfo& s = r.info;
        trace[replay].push_back(r.rewards);
        trace[replay].push_back(s.savings_after);
        trace[replay].push_back(s.inventory_after);
        if (replay == 1) continue;
        total_price.push_back(s.total_price);
        if (s.step >= 4) {
          L.Expect(pre.central_bank[0] == total_price[s.step - 4],
                   "inflation window at step " + std::to_string(s.step));
        }
        for (int j = 0; j < c.n_firms(); ++j) {
          L.Expect(s.inventory_after[j] >= 0.0, "inventory nonnegative");
          for (int i = 0; i < c.n_households(); ++i) {
            L.Expect(s.realized_consumption[i][j] <=
                         s.actions.consumption[i][j],
                     "consumption within request");
          }
        }
        for (int i = 0; i < c.n_households(); ++i) {
          std::vector<double> hours, skill, units;
          for (int j = 0; j < c.n_firms(); ++j) {
            hours.push_back(s.actions.labor[i][j]);
            skill.push_back(c.households[i].skills[j]);
            units.push_back(s.realized_consumption[i][j]);
          }
          L.Close(s.savings_after[i],
                  oracle::Savings(s.savings_before[i], s.rate, hours, skill,
                                  s.wages, units, s.prices, s.tax_rate,
                                  s.credits[i]),
                  kRel, "savings identity");
        }
      }
    }
    L.Expect(trace[0] == trace[1], "seed replay episode " +
                                       std::to_string(episode));
  }
}

// ---------------------------------------------------------------- [3]

void GradientCorrectness(Ledger& L) {
  const PolicySpec spec = oracle::TinySpec();
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    PolicyParams p = InitPolicy(spec, seed);
    for (double& v : p.values) v *= 3.0;
    const RolloutBatch batch = oracle::RandomBatch(p, 8, 100 + seed);
    SplitMixStream rng(seed);
    std::vector<double> wl(8), we(8), wv(8);
    for (int b = 0; b < 8; ++b) {
      wl[b] = rng.Uniform() - 0.5;
      we[b] = rng.Uniform() - 0.5;
      wv[b] = rng.Uniform() - 0.5;
    }
    const BatchCotangents cot{wl, we, wv};
    std::vector<double> grad;
    EvaluateBatch(p, batch.inputs, batch.actions, &cot, &grad);
    const auto policy_cmp = oracle::CompareGradient(
        p.values, grad, [&](const std::vector<double>& v) {
          const BatchEvaluation e =
              EvaluateBatch({spec, v}, batch.inputs, batch.actions);
          double s = 0;
          for (int b = 0; b < 8; ++b) {
            s += wl[b] * e.log_probs[b] + we[b] * e.entropies[b] +
                 wv[b] * e.values[b];
          }
          return s;
        });
    L.Expect(policy_cmp.max_relative_error <= 1e-4,
             "policy gradient rel error " +
                 std::to_string(policy_cmp.max_relative_error));

    std::vector<std::size_t> rows(batch.size());
    for (std::size_t k = 0; k < rows.size(); ++k) rows[k] = k;
    const PpoCoefficients coef{0.2, 0.5, 0.01};
    PpoLoss(p, batch, rows, coef, &grad);
    const auto ppo_cmp = oracle::CompareGradient(
        p.values, grad, [&](const std::vector<double>& v) {
          return PpoLoss({spec, v}, batch, rows, coef, nullptr).total;
        });
    L.Expect(ppo_cmp.max_relative_error <= 1e-4,
             "ppo gradient rel error " +
                 std::to_string(ppo_cmp.max_relative_error));
    if (seed == 0) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "max rel err policy %.1e, ppo %.1e",
                    policy_cmp.max_relative_error, ppo_cmp.max_relative_error);
      L.Note(buf);
    }
  }
}

// ---------------------------------------------------------------- [4]

oracle::Tensor TensorOf(const EmpiricalGame& g) {
  oracle::Tensor t{g.shape(), {}};
  for (std::size_t c = 0; c < g.num_cells(); ++c) {
    for (double u : g.utilities(c)) t.utilities.push_back(u);
  }
  return t;
}

EmpiricalGame Bimatrix(const std::vector<double>& row,
                       const std::vector<double>& col) {
  std::vector<double> u;
  for (std::size_t k = 0; k < 4; ++k) {
    u.push_back(row[k]);
    u.push_back(col[k]);
  }
  return EmpiricalGame::FromPayoffs({2, 2}, u);
}

void NashSolver(Ledger& L) {
  const NashConfig cfg;
  const EmpiricalGame pennies = Bimatrix({1, -1, -1, 1}, {-1, 1, 1, -1});
  const NashResult mp = SolveNash(pennies, cfg);
  for (const auto& d : mp.profile) {
    L.Expect(std::abs(d[0] - 0.5) <= 1e-3 && std::abs(d[1] - 0.5) <= 1e-3,
             "matching pennies not uniform");
  }
  const EmpiricalGame pd = Bimatrix({3, 0, 5, 1}, {3, 5, 0, 1});
  const NashResult dd = SolveNash(pd, cfg);
  L.Expect(dd.profile[0][1] == 1.0 && dd.profile[1][1] == 1.0,
           "prisoner's dilemma not defect/defect");
  L.Expect(oracle::Regret(TensorOf(pd), dd.profile) == 0.0,
           "prisoner's dilemma regret nonzero");
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    SplitMixStream rng(7000 + trial);
    std::vector<double> u;
    for (int k = 0; k < 16 * 4; ++k) u.push_back(2 * rng.Uniform() - 1);
    const EmpiricalGame g = EmpiricalGame::FromPayoffs({2, 2, 2, 2}, u);
    NashConfig c = cfg;
    c.seed = trial;
    const NashResult r = SolveNash(g, c);
    const double verified = oracle::Regret(TensorOf(g), r.profile);
    worst = std::max(worst, verified);
    L.Expect(verified <= 1e-3, "random game " + std::to_string(trial) +
                                   " regret " + std::to_string(verified));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "worst random-game regret %.1e", worst);
  L.Note(buf);
}

// ---------------------------------------------------------------- [5]

void PsroStructure(Ledger& L) {
  const EnvFactory f = [] {
    return std::make_unique<BimatrixEnv>(
        std::vector<std::vector<double>>{{3, 0}, {5, 1}},
        std::vector<std::vector<double>>{{3, 5}, {0, 1}});
  };
  PsroConfig cfg;
  cfg.epochs = 3;
  cfg.episodes_per_oracle = 100;
  cfg.runs_per_cell = 10;
  cfg.train.learning_rates = {2e-2, 2e-2};
  cfg.train.hidden = {8};
  cfg.seed = 11;
  long last_total = -1;
  const PsroState s = RunPsro(f, cfg, [&](const PsroState& st) {
    last_total = st.game.total_evaluations();
  });
  const int k = 2;
  for (int e = 1; e <= cfg.epochs; ++e) {
    const auto& d = s.diagnostics.at(e);
    const int expected =
        static_cast<int>(std::pow(e + 1, k) - std::pow(e, k));
    L.Expect(d.new_cells == expected,
             "epoch " + std::to_string(e) + " evaluated " +
                 std::to_string(d.new_cells) + " cells");
  }
  L.Expect(last_total == static_cast<long>(s.game.num_cells()),
           "cells re-simulated");
  for (std::size_t c = 0; c < s.game.num_cells(); ++c) {
    L.Expect(s.game.evaluation_count(c) == 1, "cell evaluated twice");
  }
  const double regret = oracle::Regret(TensorOf(s.game), s.profile);
  L.Expect(regret <= 0.01, "profile regret " + std::to_string(regret));
  char buf[64];
  std::snprintf(buf, sizeof(buf), "enumerated regret %.1e", regret);
  L.Note(buf);
}

// ---------------------------------------------------------------- [6], [7]

struct TypeStats {
  double mean = 0.0;
  double variance = 0.0;  // sample variance
  int n = 0;
};

TypeStats Stats(const std::vector<double>& x) {
  TypeStats s;
  s.n = static_cast<int>(x.size());
  for (double v : x) s.mean += v / s.n;
  for (double v : x) s.variance += (v - s.mean) * (v - s.mean) / (s.n - 1);
  return s;
}

// Per-episode return of each agent type: mean over that type's agents.
std::vector<std::vector<double>> TypeReturns(
    const std::vector<EpisodeRecord>& episodes,
    const std::vector<AgentSlot>& agents, int n_roles) {
  std::vector<std::vector<double>> out(n_roles);
  for (const EpisodeRecord& e : episodes) {
    const auto u = RoleUtilities(e, agents, n_roles);
    for (int r = 0; r < n_roles; ++r) out[r].push_back(u[r]);
  }
  return out;
}

struct SmokeResult {
  ImarlResult imarl;
  ScenarioConfig scenario;
  TrainConfig config;
};

void LearningSmoke(Ledger& L, SmokeResult& smoke) {
  smoke.scenario = HeterogeneousSkillsScenario();
  TrainConfig& cfg = smoke.config;
  cfg.learning_rates = ImarlLearningRates();
  cfg.episodes = 200;
  cfg.seed = 2026;
  const EnvFactory factory = MakeEconEnvFactory(smoke.scenario, cfg.hidden);
  smoke.imarl = TrainImarl(factory, cfg);

  // Random-policy baseline: 100 episodes of the untrained initial policies.
  const auto probe = factory();
  const auto& agents = probe->agents();
  const auto& roles = probe->roles();
  const int n_roles = static_cast<int>(roles.size());
  std::vector<EpisodeJob> jobs;
  for (int e = 0; e < 100; ++e) {
    EpisodeJob job{MixKey({cfg.seed, static_cast<std::uint64_t>(e), 0xBA5EULL}),
                   {}};
    for (int r = 0; r < n_roles; ++r) {
      job.role_policies.push_back(&smoke.imarl.initial[r]);
    }
    jobs.push_back(job);
  }
  RolloutOptions opt;
  opt.record = false;
  const auto baseline =
      TypeReturns(CollectEpisodesParallel(factory, jobs, opt), agents,
                  n_roles);

  // Moving average over the last window of training episodes, per type.
  const int window = cfg.moving_average_window;
  std::vector<std::map<int, std::vector<double>>> by_episode(n_roles);
  for (const CurvePoint& c : smoke.imarl.curve) {
    int role = 0;
    while (roles[role].name != c.agent_type) ++role;
    by_episode[role][c.episode].push_back(c.discounted_return);
  }
  for (int r = 0; r < n_roles; ++r) {
    std::vector<double> late;
    for (const auto& [episode, values] : by_episode[r]) {
      if (episode < cfg.episodes - window) continue;
      double m = 0;
      for (double v : values) m += v / values.size();
      late.push_back(m);
    }
    const TypeStats a = Stats(late), b = Stats(baseline[r]);
    const double se = std::sqrt(a.variance / a.n + b.variance / b.n);
    const double z = (a.mean - b.mean) / se;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s %.3f vs %.3f (%.1f SE)",
                  roles[r].name.c_str(), a.mean, b.mean, z);
    L.Note(buf);
    L.Expect(a.mean - b.mean >= se, std::string(buf));
  }

  // Regret properties on a small economy PSRO run.
  PsroConfig psro = DefaultPsroConfig();
  psro.epochs = 2;
  psro.episodes_per_oracle = 20;
  psro.runs_per_cell = 4;
  psro.seed = 7;
  const PsroState s = RunPsro(factory, psro);
  std::vector<std::vector<Strategy>> sets;
  for (int i = 0; i < s.game.num_players(); ++i) {
    sets.push_back(s.game.strategies(i));
  }
  CellEvalOptions eval;
  eval.runs = psro.runs_per_cell;
  eval.seed = psro.seed;
  std::vector<std::string> names;
  for (const auto& r : roles) names.push_back(r.name);
  const RegretReport own =
      ComputeRegret(sets, s.profile, factory, eval, names);
  double worst = 0.0;
  for (double x : own.absolute) {
    L.Expect(x >= 0.0, "negative regret");
    worst = std::max(worst, x);
  }
  L.Expect(worst <= psro.meta_solver.tolerance,
           "own-set regret " + std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof(buf), "psro own-set regret %.1e", worst);
  L.Note(buf);

  // Hand-built fixture for the regret table layout.
  // Strategy 0 is the candidate, strategy 1 the best deviation.
  const std::vector<double> base{1000.0, 71.67, 191.97, 650.0};
  const std::vector<double> gain{-1.0, 3.82, -1.0, 0.39};
  std::vector<double> u;
  const EmpiricalGame shape_only =
      EmpiricalGame::FromPayoffs({2, 2, 2, 2}, std::vector<double>(64, 0.0));
  for (std::size_t c = 0; c < 16; ++c) {
    const auto prof = shape_only.CellProfile(c);
    int deviators = 0;
    for (int p : prof) deviators += p;
    for (int i = 0; i < 4; ++i) {
      double v = base[i];
      if (deviators == 1 && prof[i] == 1) v += gain[i];
      u.push_back(v);
    }
  }
  const EmpiricalGame fixture = EmpiricalGame::FromPayoffs({2, 2, 2, 2}, u);
  const RegretReport table_row =
      RegretFromGame(fixture, PureProfile({2, 2, 2, 2}, std::vector<int>{0, 0, 0, 0}),
                     {"Household", "Firm", "Central Bank", "Government"});
  const std::string table = FormatRegretTable({{"IMARL", table_row}});
  std::istringstream lines(table);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  const auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t bar = s.find(" | ", start);
      std::string cell = s.substr(start, bar - start);
      while (!cell.empty() && cell.back() == ' ') cell.pop_back();
      cells.push_back(cell);
      if (bar == std::string::npos) break;
      start = bar + 3;
    }
    return cells;
  };
  const std::vector<std::string> want_header{
      "", "Household", "Firm", "Central Bank", "Government", "Total"};
  const std::vector<std::string> want_row{
      "IMARL",         "0.00 (0.00%)", "3.82 (5.33%)",
      "0.00 (0.00%)",  "0.39 (0.06%)", "4.21 (0.22%)"};
  L.Expect(split(header) == want_header, "table header: " + header);
  L.Expect(split(row) == want_row, "table row: " + row);
}

void StylizedFacts(Ledger& L, const SmokeResult& smoke) {
  const auto& p = smoke.imarl.policies;
  EvaluationOptions opt;
  opt.scheme = "imarl";
  opt.episodes = 100;
  opt.seed = smoke.config.seed;
  opt.hidden = smoke.config.hidden;
  const auto rows =
      EvaluateEpisodes(smoke.scenario, {&p[0], &p[1], &p[2], &p[3]}, opt);
  const LawOfDemandResult demand = CheckLawOfDemand(rows);
  const RateInflationResult rates = CheckRateInflationRelation(
      rows, smoke.scenario.central_bank.target_inflation);
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "demand %s (prices %.1f/%.1f, consumption %.1f/%.1f)",
                VerdictName(demand.verdict), demand.mean_price.at(0),
                demand.mean_price.at(1), demand.mean_consumption.at(0),
                demand.mean_consumption.at(1));
  L.Note(buf);
  std::snprintf(buf, sizeof(buf), "rate gap %.2e (%d above, %d below, %s)",
                rates.gap, rates.above, rates.below,
                VerdictName(rates.verdict));
  L.Note(buf);
  L.Expect(demand.verdict == Verdict::kPass,
           std::string("law of demand ") + VerdictName(demand.verdict));
  L.Expect(rates.verdict != Verdict::kInconclusive && rates.gap >= 0.0,
           "rate gap " + std::to_string(rates.gap));
}

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<void(Ledger&)> run;
};

}  // namespace

int main() {
  SmokeResult smoke;
  double smoke_seconds = 0.0;
  const std::vector<Criterion> criteria{
      {"Equation oracles", 60, EquationOracles},
      {"Environment bookkeeping", 60, EnvironmentBookkeeping},
      {"Gradient correctness", 60, GradientCorrectness},
      {"Nash solver", 120, NashSolver},
      {"PSRO structural check", 300, PsroStructure},
      {"Desk-scale learning smoke", 1800,
       [&](Ledger& L) { LearningSmoke(L, smoke); }},
      {"Stylized facts", 1800,
       [&](Ledger& L) {
         if (smoke.imarl.policies.empty()) {
           L.Expect(false, "no smoke policies");
           return;
         }
         StylizedFacts(L, smoke);
       }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Criterion& c = criteria[k];
    Ledger L;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(L);
    } catch (const std::exception& e) {
      L.Expect(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    // The facts share the smoke budget.
    if (k == 5) smoke_seconds = seconds;
    if (k == 6) seconds += smoke_seconds;
    L.Expect(seconds <= c.budget_seconds, "over time budget");
    const bool ok = L.ok();
    failed += !ok;
    std::printf("%s [%zu] %s: %ld checks, %.1f s%s\n", ok ? "PASS" : "FAIL",
                k + 1, c.name.c_str(), L.checks(), seconds,
                L.Summary().c_str());
    std::fflush(stdout);
  }
  return failed;
}

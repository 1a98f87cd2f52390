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
#include <random>
#include <vector>

#include "doctest.h"
#include "econgame/core/dynamics.h"
#include "econgame/core/errors.h"
#include "econgame/core/params.h"
#include "oracles/econ_oracle.h"

using namespace econgame;
using doctest::Approx;

namespace {

HouseholdParams Household(double gamma, double nu, double mu) {
  HouseholdParams h;
  h.skills = {1.0};
  h.gamma = gamma;
  h.nu = nu;
  h.mu = mu;
  return h;
}

const NormalizationDefaults kNorm{};

bool Close(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("allocation examples") {
  CHECK(AllocateConsumption(std::vector<double>{10, 20}, 15) ==
        std::vector<double>{5, 10});
  CHECK(AllocateConsumption(std::vector<double>{5, 5}, 20) ==
        std::vector<double>{5, 5});
  CHECK(AllocateConsumption(std::vector<double>{0, 0}, 7) ==
        std::vector<double>{0, 0});
  CHECK_THROWS_AS(AllocateConsumption(std::vector<double>{-1, 2}, 3),
                  ContractViolation);
  CHECK_THROWS_AS(AllocateConsumption(std::vector<double>{1, 2}, -3),
                  ContractViolation);
}

TEST_CASE("allocation is feasible and exact when stock suffices") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 30.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> req(1 + trial % 4);
    double demand = 0.0;
    for (double& r : req) {
      r = (trial % 7 == 0) ? 0.0 : u(rng);
      demand += r;
    }
    const double stock = u(rng) * 2.0;
    const auto got = AllocateConsumption(req, stock);
    double total = 0.0;
    for (std::size_t i = 0; i < req.size(); ++i) {
      CHECK(got[i] <= req[i]);
      total += got[i];
    }
    CHECK(total <= stock + 1e-9);
    if (stock >= demand) {
      for (std::size_t i = 0; i < req.size(); ++i) CHECK(got[i] == req[i]);
    }
    const auto ref = oracle::Allocate(req, stock);
    for (std::size_t i = 0; i < req.size(); ++i) {
      CHECK(Close(got[i], ref[i]));
    }
  }
}

TEST_CASE("savings examples") {
  CHECK(UpdateSavings(0, 0.03, std::vector<double>{480 * 1 * 32.06},
                      std::vector<double>{12 * 322}, 0.235, 0) ==
        Approx(7908.432).epsilon(1e-12));
  CHECK(UpdateSavings(100, 0, std::vector<double>{0}, std::vector<double>{0},
                      0.1, 0) == 100);
  CHECK(UpdateSavings(-100, 0.03, std::vector<double>{0},
                      std::vector<double>{0}, 0, 5) ==
        Approx(-98).epsilon(1e-12));
}

TEST_CASE("savings identity against term-by-term recomputation") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int J = 1 + trial % 3;
    std::vector<double> hours(J), skill(J), wage(J), units(J), price(J);
    std::vector<double> income(J), cost(J);
    for (int j = 0; j < J; ++j) {
      hours[j] = 960 * u(rng);
      skill[j] = 0.5 + 2 * u(rng);
      wage[j] = 7 + 50 * u(rng);
      units[j] = 24 * u(rng);
      price[j] = 188 + 268 * u(rng);
      income[j] = hours[j] * skill[j] * wage[j];
      cost[j] = units[j] * price[j];
    }
    const double m = 2e4 * (u(rng) - 0.5), r = 0.06 * u(rng);
    const double tau = 0.4 * u(rng), kappa = 100 * u(rng);
    CHECK(Close(UpdateSavings(m, r, income, cost, tau, kappa),
                oracle::Savings(m, r, hours, skill, wage, units, price, tau,
                                kappa),
                1e-12));
  }
}

TEST_CASE("utility examples") {
  CHECK(HouseholdUtility(1, 0, 0, Household(0.33, 0.5, 1)) ==
        Approx(1.4925373134).epsilon(1e-9));
  CHECK(HouseholdUtility(0, 0, 0, Household(0.33, 0.5, 1)) == 0.0);
  CHECK(HouseholdUtility(0, 1, -1, Household(0.33, 0.5, 1)) ==
        Approx(-1.9925373134).epsilon(1e-9));
}

TEST_CASE("household reward examples") {
  HouseholdParams h = Household(0.33, 0.5, 1);
  h.skills = {1, 1};
  CHECK(HouseholdReward(std::vector<double>{1, 1}, std::vector<double>{0, 0},
                        0, h, RewardScale::kRaw, kNorm, {}) ==
        Approx(2.9850746269).epsilon(1e-9));
  CHECK(HouseholdReward(std::vector<double>{0, 0}, std::vector<double>{0, 0},
                        0, h, RewardScale::kRaw, kNorm, {}) == 0.0);
  // Normalized, one firm, every quantity at its default: u(1, 1, 1).
  h.skills = {1};
  const double m = 480 * 32.06 * 322;
  CHECK(HouseholdReward(std::vector<double>{1}, std::vector<double>{480}, m,
                        h, RewardScale::kNormalized, kNorm,
                        std::vector<double>{322}) ==
        Approx(2.4850746269).epsilon(1e-9));
}

TEST_CASE("household reward against oracle") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int J = 1 + trial % 3;
    HouseholdParams h = Household(0.05 + 0.9 * u(rng), u(rng), 2 * u(rng));
    h.skills.assign(J, 1.0);
    std::vector<double> c(J), n(J), p(J);
    for (int j = 0; j < J; ++j) {
      c[j] = 24 * u(rng);
      n[j] = 960 * u(rng);
      p[j] = 188 + 268 * u(rng);
    }
    const double m = 1e5 * (u(rng) - 0.5);
    for (bool normalized : {false, true}) {
      const double got = HouseholdReward(
          c, n, m, h, normalized ? RewardScale::kNormalized : RewardScale::kRaw,
          kNorm, p);
      CHECK(Close(got, oracle::HouseholdReward(c, n, m, h.gamma, h.nu, h.mu,
                                               normalized, p)));
    }
  }
}

TEST_CASE("production factor and output") {
  CHECK(EvolveProductionFactor(1, 0.97, 0) == 1.0);
  CHECK(EvolveProductionFactor(1, 0.97, 0.1) == Approx(1.1051709181));
  CHECK(EvolveProductionFactor(2, 0.5, 0) == Approx(1.4142135624));
  CHECK_THROWS_AS(EvolveProductionFactor(0, 0.5, 0), ContractViolation);
  CHECK(Produce(1, 480, 2.0 / 3.0) == Approx(61.3047546).epsilon(1e-9));
  CHECK(Produce(1, 0, 2.0 / 3.0) == 0.0);
  CHECK(Produce(1, 960, 1) == 960.0);

  std::mt19937_64 rng(4);
  std::normal_distribution<double> shock(0.0, 3.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double factor = 1.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double rho = u(rng), e = shock(rng);
    const double next = EvolveProductionFactor(factor, rho, e);
    CHECK(next > 0.0);
    CHECK(Close(next, oracle::Factor(factor, rho, e)));
    const double labor = 2000 * u(rng), alpha = 0.01 + 0.99 * u(rng);
    CHECK(Close(Produce(next, labor, alpha),
                oracle::Output(next, labor, alpha)));
    factor = std::min(std::max(next, 1e-3), 1e3);
  }
}

TEST_CASE("inventory") {
  CHECK(UpdateInventory(10, 5, 8) == 7);
  CHECK(UpdateInventory(0, 0, 0) == 0);
  CHECK(UpdateInventory(3, 0, 3) == 0);
  CHECK(UpdateInventory(3, 0, 3 + 1e-12) == 0);
  CHECK_THROWS_AS(UpdateInventory(3, 0, 4), ConsistencyError);
}

TEST_CASE("firm reward") {
  FirmParams f;
  CHECK(FirmReward(322, 32.06, 12, 480, 0, f, RewardScale::kRaw, kNorm, 1) ==
        Approx(-11524.8).epsilon(1e-12));
  CHECK(FirmReward(0, 0, 0, 0, 0, f, RewardScale::kRaw, kNorm, 2) == 0.0);
  CHECK(FirmReward(322, 0, 0, 0, 10, f, RewardScale::kRaw, kNorm, 2) ==
        Approx(-322).epsilon(1e-12));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    f.inventory_risk = u(rng);
    f.shock_mean = u(rng) - 0.5;
    f.shock_std = 0.3 * u(rng);
    const int I = 1 + trial % 4;
    const double p = 500 * u(rng), w = 60 * u(rng), c = 50 * u(rng);
    const double n = 2000 * u(rng), y = 100 * u(rng);
    for (bool normalized : {false, true}) {
      CHECK(Close(FirmReward(p, w, c, n, y, f,
                             normalized ? RewardScale::kNormalized
                                        : RewardScale::kRaw,
                             kNorm, I),
                  oracle::FirmReward(p, w, c, n, y, f.inventory_risk,
                                     f.shock_mean, f.shock_std, normalized,
                                     I)));
    }
  }
}

TEST_CASE("inflation") {
  CHECK(ComputeInflation(std::vector<double>{644, 644, 644, 644, 644}) == 1.0);
  CHECK(ComputeInflation(std::vector<double>{600, 1, 1, 1, 612}) ==
        Approx(1.02).epsilon(1e-12));
  CHECK(ComputeInflation(std::vector<double>{644, 1, 1, 1, 322}) == 0.5);
  CHECK_THROWS_AS(ComputeInflation(std::vector<double>{0, 1, 1, 1, 1}),
                  ContractViolation);
  CHECK_THROWS_AS(ComputeInflation(std::vector<double>{1, 1, 1, 1}),
                  ContractViolation);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(100.0, 1000.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double p = u(rng);
    CHECK(ComputeInflation(std::vector<double>(5, p)) == 1.0);
  }
}

TEST_CASE("central bank reward") {
  CentralBankParams cb;
  const std::vector<double> alphas{2.0 / 3.0, 1.0};
  CHECK(CentralBankReward(1.02, 0, cb, RewardScale::kRaw, alphas, 2, kNorm) ==
        0.0);
  CHECK(CentralBankReward(1.02, 2, cb, RewardScale::kRaw, alphas, 2, kNorm) ==
        Approx(1.0).epsilon(1e-12));
  CHECK(CentralBankReward(1.12, 0, cb, RewardScale::kRaw, alphas, 2, kNorm) ==
        Approx(-0.01).epsilon(1e-9));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    cb.target_inflation = 1 + 0.05 * u(rng);
    cb.production_weight = 0.01 + u(rng);
    std::vector<double> a(1 + trial % 3);
    for (double& x : a) x = 0.1 + 0.9 * u(rng);
    const int I = 1 + trial % 4;
    const double pi = 0.5 + u(rng), y = 3000 * u(rng);
    for (bool normalized : {false, true}) {
      CHECK(Close(CentralBankReward(pi, y, cb,
                                    normalized ? RewardScale::kNormalized
                                               : RewardScale::kRaw,
                                    a, I, kNorm),
                  oracle::BankReward(pi, y, cb.target_inflation,
                                     cb.production_weight, normalized, a, I)));
    }
  }
}

TEST_CASE("welfare weights") {
  GovernmentParams g;
  CHECK(WelfareWeight(0, g) == Approx(1.2));
  CHECK(WelfareWeight(10, g) == Approx(0.001));
  CHECK(WelfareWeight(-1, g) == Approx(3.2));
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double m = u(rng), dm = std::abs(u(rng)) * 0.1;
    const double l = WelfareWeight(m, g);
    CHECK(l >= g.weight_floor);
    CHECK(l <= g.weight_cap);
    CHECK(Close(l, oracle::Weight(m, g.weight_slope, g.weight_intercept,
                                  g.weight_floor, g.weight_cap)));
    // Nonincreasing on each branch.
    if ((m > 0) == (m + dm > 0)) CHECK(WelfareWeight(m + dm, g) <= l);
  }
}

TEST_CASE("tax credits") {
  CHECK(ComputeTaxCredits(std::vector<double>{0.5, 0.5}, 200, 0.1) ==
        std::vector<double>{10, 10});
  CHECK(ComputeTaxCredits(std::vector<double>{1.0}, 0, 0.1) ==
        std::vector<double>{0});
  const auto c = ComputeTaxCredits(std::vector<double>{0.25, 0.75}, 400, 0.1);
  CHECK(c[0] == Approx(10));
  CHECK(c[1] == Approx(30));
  CHECK_THROWS_AS(ComputeTaxCredits(std::vector<double>{0.5, 0.6}, 1, 0.1),
                  ContractViolation);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> f(1 + trial % 5);
    double s = 0;
    for (double& x : f) s += (x = u(rng));
    for (double& x : f) x /= s;
    const double total = 1e4 * u(rng), xi = u(rng);
    const auto k = ComputeTaxCredits(f, total, xi);
    double sum = 0;
    for (double x : k) sum += x;
    CHECK(Close(sum, xi * total, 1e-12));
  }
}

TEST_CASE("government reward") {
  CHECK(GovernmentReward(std::vector<double>{1, 1},
                         std::vector<double>{2, 3}) == 5);
  CHECK(GovernmentReward(std::vector<double>{0, 0},
                         std::vector<double>{2, 3}) == 0);
  CHECK(GovernmentReward(std::vector<double>{1.2, 3.2},
                         std::vector<double>{1, -1}) == Approx(-2.0));
}

TEST_CASE("normalized rewards at defaults equal unit-scaled raw rewards") {
  // Household: c = 1 unit, n = n-bar, m = n-bar * w-bar * p-bar.
  HouseholdParams h = Household(0.33, 0.5, 1.0);
  const double norm_h = HouseholdReward(
      std::vector<double>{1}, std::vector<double>{480}, 480 * 32.06 * 322, h,
      RewardScale::kNormalized, kNorm, std::vector<double>{322});
  CHECK(norm_h == Approx(HouseholdUtility(1, 1, 1, h)).epsilon(1e-12));
  // Firm with one household: every term at its default scales to 1.
  FirmParams f;
  f.shock_mean = 0;
  f.shock_std = 0;
  f.inventory_risk = 1;
  const double firm = FirmReward(322, 32.06, 12, 480, 480, f,
                                 RewardScale::kNormalized, kNorm, 1);
  CHECK(firm == Approx(1 - 1 - 1).epsilon(1e-12));
  // Central bank: production at its reference level is 1.
  CentralBankParams cb;
  const std::vector<double> alphas{2.0 / 3.0, 1.0};
  const double y = std::pow(960.0, 2.0 / 3.0) + 960.0;
  CHECK(CentralBankReward(1.02, y, cb, RewardScale::kNormalized, alphas, 2,
                          kNorm) == Approx(0.25).epsilon(1e-12));
}

TEST_CASE("parameter validation names the field") {
  HouseholdParams h = Household(1.0, 0.5, 1);
  try {
    Validate(h, "scenario.households[0]");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "scenario.households[0].gamma");
  }
  GovernmentParams g;
  g.weight_cap = 1e-4;
  CHECK_THROWS_AS(Validate(g, "scenario.government"), ConfigError);
}

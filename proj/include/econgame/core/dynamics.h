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
#ifndef ECONGAME_CORE_DYNAMICS_H_
#define ECONGAME_CORE_DYNAMICS_H_

// Pure transition, reward and normalization functions of the economy.
// Households are indexed by i, firms by j. Every function is stateless and
// safe to call concurrently.

#include <span>
#include <vector>

#include "econgame/core/params.h"

namespace econgame {

enum class RewardScale { kRaw, kNormalized };

// Splits a firm's stock among requesters in proportion to their requests.
// result_i = min(req_i, inventory * req_i / sum(req)); all zero when no one
// asks for anything.
std::vector<double> AllocateConsumption(std::span<const double> requests,
                                        double inventory);

// Savings after one quarter: interest on the balance (debt accrues too),
// labor income net of consumption spending, minus income tax, plus credit.
double UpdateSavings(double savings, double rate,
                     std::span<const double> labor_income_per_firm,
                     std::span<const double> consumption_cost_per_firm,
                     double tax_rate, double credit);

// Isoelastic in consumption and savings, quadratic disutility of labor.
// Savings may be negative; the savings term is odd in m.
double HouseholdUtility(double consumption, double labor, double savings,
                        const HouseholdParams& params);

// Sum over firms of HouseholdUtility with the shared next-quarter savings.
// The normalized form divides labor by the default labor and savings by
// (default labor * sum of default wages) * (mean current price).
double HouseholdReward(std::span<const double> realized_consumption,
                       std::span<const double> labor, double next_savings,
                       const HouseholdParams& params, RewardScale scale,
                       const NormalizationDefaults& norm,
                       std::span<const double> current_prices);

// Log-AR(1) production factor: prev^rho * exp(shock).
double EvolveProductionFactor(double prev, double rho, double shock);

// Cobb-Douglas output from skilled labor hours.
double Produce(double factor, double skilled_labor, double alpha);

// Next-quarter stock. Throws ConsistencyError if more was consumed than was
// available (beyond rounding).
double UpdateInventory(double inventory, double produced, double consumed);

// Revenue minus wage bill minus inventory holding risk. The normalized form
// scales each term by its default-level counterpart.
double FirmReward(double price, double wage, double total_consumption,
                  double skilled_labor, double next_inventory,
                  const FirmParams& params, RewardScale scale,
                  const NormalizationDefaults& norm, int n_households);

// Ratio of the newest to the oldest entry of a five-quarter total-price
// window (annual inflation as a gross rate).
double ComputeInflation(std::span<const double> price_history);

double CentralBankReward(double inflation, double total_production,
                         const CentralBankParams& params, RewardScale scale,
                         std::span<const double> firm_alphas, int n_households,
                         const NormalizationDefaults& norm);

// Social-welfare weight of a household given its savings; always within
// [weight_floor, weight_cap].
double WelfareWeight(double savings, const GovernmentParams& params);

// kappa_i = xi * f_i * total_tax. Fractions must sum to one.
std::vector<double> ComputeTaxCredits(std::span<const double> fractions,
                                      double total_tax_collected, double xi);

double GovernmentReward(std::span<const double> weights,
                        std::span<const double> household_rewards);

}  // namespace econgame

#endif  // ECONGAME_CORE_DYNAMICS_H_

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
#include "econgame/core/dynamics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "econgame/core/errors.h"

namespace econgame {
namespace {

constexpr double kInventoryTolerance = 1e-9;
constexpr double kFractionTolerance = 1e-9;

double Isoelastic(double x, double gamma) {
  return std::pow(x, 1.0 - gamma) / (1.0 - gamma);
}

void CheckAligned(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw ContractViolation(std::string(what) + ": length mismatch (" +
                            std::to_string(a) + " vs " + std::to_string(b) +
                            ")");
  }
}

}  // namespace

std::vector<double> AllocateConsumption(std::span<const double> requests,
                                        double inventory) {
  if (!(inventory >= 0.0)) {
    throw ContractViolation("AllocateConsumption: negative inventory");
  }
  double total = 0.0;
  for (double r : requests) {
    if (!(r >= 0.0)) {
      throw ContractViolation("AllocateConsumption: negative request");
    }
    total += r;
  }
  std::vector<double> out(requests.size(), 0.0);
  if (total == 0.0) return out;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    out[i] = std::min(requests[i], inventory * (requests[i] / total));
  }
  return out;
}

double UpdateSavings(double savings, double rate,
                     std::span<const double> labor_income_per_firm,
                     std::span<const double> consumption_cost_per_firm,
                     double tax_rate, double credit) {
  CheckAligned(labor_income_per_firm.size(), consumption_cost_per_firm.size(),
               "UpdateSavings");
  if (!(rate >= 0.0)) throw ContractViolation("UpdateSavings: rate < 0");
  if (!(tax_rate >= 0.0 && tax_rate <= 1.0)) {
    throw ContractViolation("UpdateSavings: tax rate outside [0, 1]");
  }
  double net = 0.0;
  double income = 0.0;
  for (std::size_t j = 0; j < labor_income_per_firm.size(); ++j) {
    net += labor_income_per_firm[j] - consumption_cost_per_firm[j];
    income += labor_income_per_firm[j];
  }
  return (1.0 + rate) * savings + net - tax_rate * income + credit;
}

double HouseholdUtility(double consumption, double labor, double savings,
                        const HouseholdParams& params) {
  if (!(consumption >= 0.0) || !(labor >= 0.0)) {
    throw ContractViolation("HouseholdUtility: negative consumption or labor");
  }
  if (!(params.gamma > 0.0 && params.gamma < 1.0)) {
    throw ContractViolation("HouseholdUtility: gamma must lie in (0, 1)");
  }
  const double sign = savings > 0.0 ? 1.0 : (savings < 0.0 ? -1.0 : 0.0);
  return Isoelastic(consumption, params.gamma) - params.nu * labor * labor +
         params.mu * sign * Isoelastic(std::abs(savings), params.gamma);
}

double HouseholdReward(std::span<const double> realized_consumption,
                       std::span<const double> labor, double next_savings,
                       const HouseholdParams& params, RewardScale scale,
                       const NormalizationDefaults& norm,
                       std::span<const double> current_prices) {
  CheckAligned(realized_consumption.size(), labor.size(), "HouseholdReward");
  double labor_scale = 1.0;
  double savings = next_savings;
  if (scale == RewardScale::kNormalized) {
    CheckAligned(current_prices.size(), labor.size(), "HouseholdReward");
    const double n_firms = static_cast<double>(current_prices.size());
    const double mean_price =
        std::accumulate(current_prices.begin(), current_prices.end(), 0.0) /
        n_firms;
    labor_scale = norm.default_labor;
    savings = next_savings /
              ((norm.default_labor * n_firms * norm.default_wage) * mean_price);
  }
  double total = 0.0;
  for (std::size_t j = 0; j < labor.size(); ++j) {
    total += HouseholdUtility(realized_consumption[j], labor[j] / labor_scale,
                              savings, params);
  }
  return total;
}

double EvolveProductionFactor(double prev, double rho, double shock) {
  if (!(prev > 0.0)) {
    throw ContractViolation("EvolveProductionFactor: factor must be > 0");
  }
  return std::pow(prev, rho) * std::exp(shock);
}

double Produce(double factor, double skilled_labor, double alpha) {
  if (!(factor > 0.0) || !(skilled_labor >= 0.0)) {
    throw ContractViolation("Produce: factor must be > 0, labor >= 0");
  }
  if (skilled_labor == 0.0) return 0.0;
  return factor * std::pow(skilled_labor, alpha);
}

double UpdateInventory(double inventory, double produced, double consumed) {
  const double next = inventory + produced - consumed;
  if (next < 0.0) {
    const double scale = std::max(1.0, inventory + produced);
    if (next < -kInventoryTolerance * scale) {
      throw ConsistencyError("UpdateInventory: consumed " +
                             std::to_string(consumed) + " exceeds available " +
                             std::to_string(inventory + produced));
    }
    return 0.0;
  }
  return next;
}

double FirmReward(double price, double wage, double total_consumption,
                  double skilled_labor, double next_inventory,
                  const FirmParams& params, RewardScale scale,
                  const NormalizationDefaults& norm, int n_households) {
  double revenue = price * total_consumption;
  double wage_bill = wage * skilled_labor;
  double holding = params.inventory_risk * price * next_inventory;
  if (scale == RewardScale::kNormalized) {
    const double hh = static_cast<double>(n_households);
    revenue /= norm.default_price * hh * norm.default_consumption;
    wage_bill /= norm.default_wage * hh * norm.default_labor;
    holding /= norm.default_price *
               std::exp(params.shock_mean + 10.0 * params.shock_std) * hh *
               norm.default_labor;
  }
  return revenue - wage_bill - holding;
}

double ComputeInflation(std::span<const double> price_history) {
  if (price_history.size() != 5) {
    throw ContractViolation("ComputeInflation: need exactly 5 quarters");
  }
  for (double p : price_history) {
    if (!(p > 0.0)) {
      throw ContractViolation("ComputeInflation: non-positive total price");
    }
  }
  return price_history.back() / price_history.front();
}

double CentralBankReward(double inflation, double total_production,
                         const CentralBankParams& params, RewardScale scale,
                         std::span<const double> firm_alphas, int n_households,
                         const NormalizationDefaults& norm) {
  if (!(total_production >= 0.0)) {
    throw ContractViolation("CentralBankReward: negative production");
  }
  double production = total_production;
  if (scale == RewardScale::kNormalized) {
    const double labor = n_households * norm.default_labor;
    double reference = 0.0;
    for (double alpha : firm_alphas) reference += std::pow(labor, alpha);
    production /= reference;
  }
  const double gap = inflation - params.target_inflation;
  return -gap * gap + params.production_weight * production * production;
}

double WelfareWeight(double savings, const GovernmentParams& params) {
  if (savings > 0.0) {
    return std::max(params.weight_floor,
                    -params.weight_slope * savings + params.weight_intercept);
  }
  return std::min(params.weight_cap,
                  -2.0 * params.weight_slope * savings +
                      params.weight_intercept);
}

std::vector<double> ComputeTaxCredits(std::span<const double> fractions,
                                      double total_tax_collected, double xi) {
  double sum = 0.0;
  for (double f : fractions) {
    if (!(f >= 0.0)) {
      throw ContractViolation("ComputeTaxCredits: negative fraction");
    }
    sum += f;
  }
  if (std::abs(sum - 1.0) > kFractionTolerance) {
    throw ContractViolation("ComputeTaxCredits: fractions sum to " +
                            std::to_string(sum));
  }
  std::vector<double> credits(fractions.size());
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    credits[i] = xi * fractions[i] * total_tax_collected;
  }
  return credits;
}

double GovernmentReward(std::span<const double> weights,
                        std::span<const double> household_rewards) {
  CheckAligned(weights.size(), household_rewards.size(), "GovernmentReward");
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    total += weights[i] * household_rewards[i];
  }
  return total;
}

}  // namespace econgame

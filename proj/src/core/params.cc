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
#include "econgame/core/params.h"

#include <cmath>

#include "econgame/core/errors.h"

namespace econgame {
namespace {

void Require(bool ok, const std::string& where, const char* field,
             const char* what) {
  if (!ok) throw ConfigError(where + "." + field, what);
}

bool InUnitOpen(double x) { return x > 0.0 && x < 1.0; }
bool IsDiscount(double x) { return x >= 0.0 && x < 1.0; }

}  // namespace

void Validate(const HouseholdParams& p, const std::string& where) {
  Require(!p.skills.empty(), where, "skills", "must list one skill per firm");
  for (double s : p.skills) {
    Require(std::isfinite(s) && s > 0.0, where, "skills",
            "must be strictly positive");
  }
  Require(InUnitOpen(p.gamma), where, "gamma", "must lie in (0, 1)");
  Require(p.nu >= 0.0, where, "nu", "must be >= 0");
  Require(p.mu >= 0.0, where, "mu", "must be >= 0");
  Require(IsDiscount(p.discount), where, "discount", "must lie in [0, 1)");
}

void Validate(const FirmParams& p, const std::string& where) {
  Require(p.rho >= 0.0 && p.rho <= 1.0, where, "rho", "must lie in [0, 1]");
  Require(std::isfinite(p.shock_mean), where, "shock_mean", "must be finite");
  Require(p.shock_std >= 0.0, where, "shock_std", "must be >= 0");
  Require(p.alpha > 0.0 && p.alpha <= 1.0, where, "alpha",
          "must lie in (0, 1]");
  Require(p.inventory_risk >= 0.0, where, "inventory_risk", "must be >= 0");
  Require(IsDiscount(p.discount), where, "discount", "must lie in [0, 1)");
}

void Validate(const CentralBankParams& p, const std::string& where) {
  Require(std::isfinite(p.target_inflation), where, "target_inflation",
          "must be finite");
  Require(p.production_weight > 0.0, where, "production_weight",
          "must be > 0");
  Require(IsDiscount(p.discount), where, "discount", "must lie in [0, 1)");
}

void Validate(const GovernmentParams& p, const std::string& where) {
  Require(p.redistribution_fraction >= 0.0 && p.redistribution_fraction <= 1.0,
          where, "redistribution_fraction", "must lie in [0, 1]");
  Require(p.weight_slope > 0.0, where, "weight_slope", "must be > 0");
  Require(p.weight_intercept > 0.0, where, "weight_intercept", "must be > 0");
  Require(p.weight_floor > 0.0, where, "weight_floor", "must be > 0");
  Require(p.weight_cap > p.weight_floor, where, "weight_cap",
          "must exceed weight_floor");
  Require(IsDiscount(p.discount), where, "discount", "must lie in [0, 1)");
}

void Validate(const NormalizationDefaults& p, const std::string& where) {
  Require(p.default_labor > 0.0, where, "default_labor", "must be > 0");
  Require(p.default_consumption > 0.0, where, "default_consumption",
          "must be > 0");
  Require(p.default_price > 0.0, where, "default_price", "must be > 0");
  Require(p.default_wage > 0.0, where, "default_wage", "must be > 0");
}

}  // namespace econgame

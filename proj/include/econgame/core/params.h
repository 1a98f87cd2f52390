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
#ifndef ECONGAME_CORE_PARAMS_H_
#define ECONGAME_CORE_PARAMS_H_

#include <string>
#include <vector>

namespace econgame {

struct HouseholdParams {
  std::vector<double> skills;  // one per firm
  double gamma = 0.33;
  double nu = 0.5;
  double mu = 0.1;
  double discount = 0.99;
};

struct FirmParams {
  double rho = 0.97;
  double shock_mean = 0.0;
  double shock_std = 0.1;
  double alpha = 2.0 / 3.0;
  double inventory_risk = 0.1;
  double discount = 0.99;
};

struct CentralBankParams {
  double target_inflation = 1.02;
  double production_weight = 0.25;
  double discount = 0.99;
};

struct GovernmentParams {
  double redistribution_fraction = 0.1;
  double weight_slope = 1.0;
  double weight_intercept = 1.2;
  double weight_floor = 1e-3;
  double weight_cap = 3.2;
  double discount = 0.99;
};

// Default (grid-center) quantities used to scale rewards and observations.
struct NormalizationDefaults {
  double default_labor = 480.0;
  double default_consumption = 12.0;
  double default_price = 322.0;
  double default_wage = 32.06;
};

// Each validator throws ConfigError naming the offending field, prefixed by
// `where` (e.g. "households[1]").
void Validate(const HouseholdParams& p, const std::string& where);
void Validate(const FirmParams& p, const std::string& where);
void Validate(const CentralBankParams& p, const std::string& where);
void Validate(const GovernmentParams& p, const std::string& where);
void Validate(const NormalizationDefaults& p, const std::string& where);

}  // namespace econgame

#endif  // ECONGAME_CORE_PARAMS_H_

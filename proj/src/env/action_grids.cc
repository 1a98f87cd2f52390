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
#include "econgame/env/action_grids.h"

#include <string>

#include "econgame/core/errors.h"

namespace econgame {
namespace {

void CheckGrid(const std::vector<double>& grid, const char* name, double lo,
               double hi) {
  const std::string field = std::string("action_grids.") + name;
  if (grid.size() < 2) throw ConfigError(field, "needs at least 2 entries");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] >= lo && grid[k] <= hi)) {
      throw ConfigError(field, "entry " + std::to_string(k) + " out of range");
    }
    if (k > 0 && !(grid[k] > grid[k - 1])) {
      throw ConfigError(field, "must be strictly increasing");
    }
  }
}

}  // namespace

void Validate(const ActionGrids& g) {
  constexpr double kInf = 1e300;
  CheckGrid(g.labor_hours, "labor_hours", 0.0, kInf);
  CheckGrid(g.consumption_units, "consumption_units", 0.0, kInf);
  CheckGrid(g.wages, "wages", 0.0, kInf);
  CheckGrid(g.prices, "prices", 1e-12, kInf);
  CheckGrid(g.rates, "rates", 0.0, kInf);
  CheckGrid(g.tax_rates, "tax_rates", 0.0, 1.0);
  CheckGrid(g.fraction_raw, "fraction_raw", 1e-12, kInf);
  if (!(DefaultValue(g.labor_hours) > 0 && DefaultValue(g.wages) > 0 &&
        DefaultValue(g.consumption_units) > 0)) {
    throw ConfigError("action_grids", "default labor, wage and consumption "
                                      "must be positive");
  }
}

NormalizationDefaults NormalizationFromGrids(const ActionGrids& g) {
  return NormalizationDefaults{
      .default_labor = DefaultValue(g.labor_hours),
      .default_consumption = DefaultValue(g.consumption_units),
      .default_price = DefaultValue(g.prices),
      .default_wage = DefaultValue(g.wages),
  };
}

}  // namespace econgame

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
#ifndef ECONGAME_ENV_ACTION_GRIDS_H_
#define ECONGAME_ENV_ACTION_GRIDS_H_

#include <vector>

#include "econgame/core/params.h"

namespace econgame {

// Discrete action menus. The middle entry of each grid is the default action.
struct ActionGrids {
  std::vector<double> labor_hours{0, 240, 480, 720, 960};
  std::vector<double> consumption_units{0, 6, 12, 18, 24};
  std::vector<double> wages{7.25, 19.65, 32.06, 44.46, 56.87};
  std::vector<double> prices{188, 255, 322, 389, 456};
  std::vector<double> rates{0.0025, 0.01625, 0.03, 0.04375, 0.0575};
  std::vector<double> tax_rates{0.10, 0.1675, 0.235, 0.3025, 0.37};
  std::vector<double> fraction_raw{1, 2, 3, 4, 5};
};

inline int DefaultIndex(const std::vector<double>& grid) {
  return static_cast<int>(grid.size() / 2);
}
inline double DefaultValue(const std::vector<double>& grid) {
  return grid[grid.size() / 2];
}

// Throws ConfigError unless every grid is non-empty and strictly increasing,
// and the grids respect their physical bounds (hours >= 0, tax in [0, 1], ...).
void Validate(const ActionGrids& grids);

// Normalization constants are the grid defaults.
NormalizationDefaults NormalizationFromGrids(const ActionGrids& grids);

}  // namespace econgame

#endif  // ECONGAME_ENV_ACTION_GRIDS_H_

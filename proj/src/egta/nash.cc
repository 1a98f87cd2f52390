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
#include "econgame/egta/nash.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "econgame/core/errors.h"
#include "econgame/core/rng.h"

namespace econgame {
namespace {

// Flat copy of the tensor, with each player's payoffs rescaled to [0, 1]
// for the dynamics. Rescaling does not move equilibria.
struct Tensor {
  std::vector<int> shape;
  std::size_t cells = 0;
  std::vector<double> u;  // [cell][player]
  std::vector<int> profiles;  // [cell][player]

  int n() const { return static_cast<int>(shape.size()); }
};

Tensor Extract(const EmpiricalGame& game, bool rescale) {
  Tensor t;
  t.shape = game.shape();
  t.cells = game.num_cells();
  const int n = t.n();
  t.u.resize(t.cells * n);
  t.profiles.resize(t.cells * n);
  for (std::size_t c = 0; c < t.cells; ++c) {
    if (game.status(c) != CellStatus::kEvaluated) {
      throw ContractViolation("SolveNash: cell " + std::to_string(c) +
                              " is pending");
    }
    const auto u = game.utilities(c);
    const auto p = game.CellProfile(c);
    for (int i = 0; i < n; ++i) {
      t.u[c * n + i] = u[i];
      t.profiles[c * n + i] = p[i];
    }
  }
  if (rescale) {
    for (int i = 0; i < n; ++i) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (std::size_t c = 0; c < t.cells; ++c) {
        lo = std::min(lo, t.u[c * n + i]);
        hi = std::max(hi, t.u[c * n + i]);
      }
      const double range = hi - lo > 0.0 ? hi - lo : 1.0;
      for (std::size_t c = 0; c < t.cells; ++c) {
        t.u[c * n + i] = (t.u[c * n + i] - lo) / range;
      }
    }
  }
  return t;
}

using Profile = MixedStrategyProfile;

std::vector<std::vector<double>> Deviations(const Tensor& t,
                                            const Profile& sigma) {
  const int n = t.n();
  std::vector<std::vector<double>> dev(n);
  for (int i = 0; i < n; ++i) dev[i].assign(t.shape[i], 0.0);
  std::vector<double> prefix(n + 1), suffix(n + 1);
  for (std::size_t c = 0; c < t.cells; ++c) {
    const int* s = &t.profiles[c * n];
    prefix[0] = 1.0;
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * sigma[i][s[i]];
    suffix[n] = 1.0;
    for (int i = n; i-- > 0;) suffix[i] = suffix[i + 1] * sigma[i][s[i]];
    for (int i = 0; i < n; ++i) {
      const double w = prefix[i] * suffix[i + 1];
      if (w != 0.0) dev[i][s[i]] += w * t.u[c * n + i];
    }
  }
  return dev;
}

double Regret(const Tensor& t, const Profile& sigma) {
  const auto dev = Deviations(t, sigma);
  double worst = 0.0;
  for (int i = 0; i < t.n(); ++i) {
    double value = 0.0;
    for (int k = 0; k < t.shape[i]; ++k) value += sigma[i][k] * dev[i][k];
    const double best = *std::max_element(dev[i].begin(), dev[i].end());
    worst = std::max(worst, best - value);
  }
  return worst;
}

// Euclidean projection onto {x : sum x = 1, x >= floor}.
void ProjectSimplex(std::vector<double>& x, double floor) {
  const int k = static_cast<int>(x.size());
  const double mass = 1.0 - floor * k;
  std::vector<double> y(x);
  for (double& v : y) v -= floor;
  std::vector<double> sorted(y);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0, theta = 0.0;
  for (int j = 0; j < k; ++j) {
    cumulative += sorted[j];
    const double candidate = (cumulative - mass) / (j + 1);
    if (sorted[j] - candidate > 0.0) theta = candidate;
  }
  for (int j = 0; j < k; ++j) x[j] = std::max(y[j] - theta, 0.0) + floor;
}

void Renormalize(Profile& sigma) {
  for (auto& s : sigma) {
    double sum = 0.0;
    for (double& p : s) {
      p = std::max(p, 0.0);
      sum += p;
    }
    for (double& p : s) p /= sum;
  }
}

// Newton's method on: U_i(s, sigma_{-i}) = v_i for s in support_i and
// sum of sigma_i over support_i = 1. Returns false if the iterate leaves the
// simplex or the system is singular.
bool SolveSupport(const Tensor& t, const std::vector<std::vector<int>>& support,
                  Profile& sigma) {
  const int n = t.n();
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    offset[i + 1] = offset[i] + static_cast<int>(support[i].size());
  }
  const int m = offset[n] + n;  // probabilities, then one value per player
  std::vector<std::vector<int>> position(n);
  for (int i = 0; i < n; ++i) {
    position[i].assign(t.shape[i], -1);
    for (std::size_t a = 0; a < support[i].size(); ++a) {
      position[i][support[i][a]] = offset[i] + static_cast<int>(a);
    }
    for (int k = 0; k < t.shape[i]; ++k) {
      if (position[i][k] < 0) sigma[i][k] = 0.0;
    }
  }
  Eigen::VectorXd x(m);
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int k : support[i]) sum += sigma[i][k];
    for (std::size_t a = 0; a < support[i].size(); ++a) {
      x(offset[i] + a) = sum > 0.0 ? sigma[i][support[i][a]] / sum
                                   : 1.0 / support[i].size();
    }
  }
  const auto load = [&](const Eigen::VectorXd& v) {
    for (int i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < support[i].size(); ++a) {
        sigma[i][support[i][a]] = v(offset[i] + a);
      }
    }
  };
  load(x);
  {
    const auto dev = Deviations(t, sigma);
    for (int i = 0; i < n; ++i) {
      double v = 0.0;
      for (int k : support[i]) v += sigma[i][k] * dev[i][k];
      x(offset[n] + i) = v;
    }
  }
  for (int iter = 0; iter < 30; ++iter) {
    load(x);
    Eigen::VectorXd f = Eigen::VectorXd::Zero(m);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(m, m);
    // Rows: for each player i, one per support strategy, then the sum row.
    // The sum rows live at offset[n] + i.
    for (std::size_t c = 0; c < t.cells; ++c) {
      const int* s = &t.profiles[c * n];
      bool inside = true;
      for (int i = 0; i < n && inside; ++i) inside = position[i][s[i]] >= 0;
      if (!inside) continue;
      for (int i = 0; i < n; ++i) {
        const int row = position[i][s[i]];
        const double u = t.u[c * n + i];
        double w = 1.0;
        for (int j = 0; j < n; ++j) {
          if (j != i) w *= sigma[j][s[j]];
        }
        f(row) += w * u;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          double wj = 1.0;
          for (int k = 0; k < n; ++k) {
            if (k != i && k != j) wj *= sigma[k][s[k]];
          }
          jac(row, position[j][s[j]]) += wj * u;
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::size_t a = 0; a < support[i].size(); ++a) {
        const int row = offset[i] + static_cast<int>(a);
        f(row) -= x(offset[n] + i);
        jac(row, offset[n] + i) = -1.0;
        jac(offset[n] + i, row) = 1.0;
        sum += x(row);
      }
      f(offset[n] + i) = sum - 1.0;
    }
    if (f.lpNorm<Eigen::Infinity>() < 1e-13) break;
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
    if (!lu.isInvertible()) return false;
    const Eigen::VectorXd dx = lu.solve(-f);
    x += dx;
    if (!x.allFinite()) return false;
    if (dx.lpNorm<Eigen::Infinity>() < 1e-14) break;
  }
  for (int i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < support[i].size(); ++a) {
      if (x(offset[i] + a) < -1e-9) return false;
    }
  }
  load(x);
  Renormalize(sigma);
  return true;
}

std::vector<std::vector<int>> SupportOf(const Profile& sigma,
                                        double threshold) {
  std::vector<std::vector<int>> support(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const double top = *std::max_element(sigma[i].begin(), sigma[i].end());
    for (std::size_t k = 0; k < sigma[i].size(); ++k) {
      if (sigma[i][k] > threshold || sigma[i][k] == top) {
        support[i].push_back(static_cast<int>(k));
      }
    }
  }
  return support;
}

struct Best {
  Profile profile;
  double regret = std::numeric_limits<double>::infinity();
  std::string method;

  void Offer(const Profile& p, double r, const char* how) {
    if (r < regret) {
      profile = p;
      regret = r;
      method = how;
    }
  }
};

Profile RandomProfile(const std::vector<int>& shape, SplitMixStream& rng) {
  Profile p(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    double sum = 0.0;
    for (int k = 0; k < shape[i]; ++k) {
      const double e = -std::log(1.0 - rng.Uniform());
      p[i].push_back(e);
      sum += e;
    }
    for (double& v : p[i]) v /= sum;
  }
  return p;
}

// Subsets of {0..k-1}, smallest first, as index lists.
std::vector<std::vector<int>> Subsets(int k) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> s;
    for (int j = 0; j < k; ++j) {
      if (mask & (1u << j)) s.push_back(j);
    }
    out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size();
  });
  return out;
}

}  // namespace

void Validate(const NashConfig& config) {
  if (config.iterations < 1 || config.restarts < 1 ||
      !(config.step_size > 0.0) || !(config.tolerance >= 0.0)) {
    throw ConfigError("meta_solver",
                      "iterations, restarts and step_size must be positive");
  }
}

NashResult SolveNash(const EmpiricalGame& game, const NashConfig& config) {
  Validate(config);
  const Tensor raw = Extract(game, false);
  const Tensor scaled = Extract(game, true);
  const int n = raw.n();
  Best best;
  const auto finish = [&]() {
    NashResult result{best.profile, best.regret,
                      best.regret > config.tolerance, best.method};
    return result;
  };

  // Pure profiles.
  for (std::size_t c = 0; c < raw.cells; ++c) {
    double worst = 0.0;
    const int* s = &raw.profiles[c * n];
    std::vector<int> alt(s, s + n);
    for (int i = 0; i < n && worst < best.regret; ++i) {
      for (int k = 0; k < raw.shape[i]; ++k) {
        alt[i] = k;
        const std::size_t other = game.CellIndex(alt);
        worst = std::max(worst, raw.u[other * n + i] - raw.u[c * n + i]);
      }
      alt[i] = s[i];
    }
    if (worst < best.regret) {
      best.Offer(PureProfile(raw.shape, alt), worst, "pure");
    }
    if (best.regret == 0.0) break;
  }
  if (best.regret <= config.tolerance) return finish();

  const auto polish = [&](const Profile& candidate) {
    for (double threshold : {1e-3, 1e-5}) {
      Profile p = candidate;
      if (SolveSupport(scaled, SupportOf(candidate, threshold), p)) {
        best.Offer(p, Regret(raw, p), "polished");
      }
    }
  };

  const double floor_mass = 1e-9;
  for (int restart = 0; restart < config.restarts; ++restart) {
    SplitMixStream rng(MixKey({config.seed, static_cast<std::uint64_t>(
                                                restart), 0x6E617368ULL}));
    Profile sigma = restart == 0 ? UniformProfile(raw.shape)
                                 : RandomProfile(raw.shape, rng);
    Profile average = sigma;
    long averaged = 0;
    for (int it = 0; it < config.iterations; ++it) {
      const auto dev = Deviations(scaled, sigma);
      for (int i = 0; i < n; ++i) {
        double value = 0.0;
        for (int k = 0; k < raw.shape[i]; ++k) value += sigma[i][k] * dev[i][k];
        for (int k = 0; k < raw.shape[i]; ++k) {
          sigma[i][k] += config.step_size * sigma[i][k] * (dev[i][k] - value);
        }
        ProjectSimplex(sigma[i], floor_mass);
      }
      if (it >= config.iterations / 2) {
        ++averaged;
        for (int i = 0; i < n; ++i) {
          for (int k = 0; k < raw.shape[i]; ++k) {
            average[i][k] += (sigma[i][k] - average[i][k]) / averaged;
          }
        }
      }
      if ((it + 1) % 500 == 0 && Regret(raw, sigma) <= config.tolerance) {
        break;
      }
    }
    Renormalize(sigma);
    Renormalize(average);
    best.Offer(sigma, Regret(raw, sigma), "replicator");
    if (averaged > 0) best.Offer(average, Regret(raw, average), "replicator");
    polish(sigma);
    if (averaged > 0) polish(average);
    if (best.regret <= config.tolerance) return finish();
  }

  // Support enumeration for small games.
  long combinations = 1;
  for (int k : raw.shape) {
    combinations *= (k >= 20) ? config.max_support_combinations + 1
                              : (1L << k) - 1;
    if (combinations > config.max_support_combinations) break;
  }
  if (combinations <= config.max_support_combinations) {
    std::vector<std::vector<std::vector<int>>> subsets;
    for (int k : raw.shape) subsets.push_back(Subsets(k));
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      std::vector<std::vector<int>> support(n);
      for (int i = 0; i < n; ++i) support[i] = subsets[i][pick[i]];
      Profile p = UniformProfile(raw.shape);
      if (SolveSupport(scaled, support, p)) {
        best.Offer(p, Regret(raw, p), "support");
        if (best.regret <= config.tolerance) break;
      }
      int i = n - 1;
      while (i >= 0 && ++pick[i] == subsets[i].size()) pick[i--] = 0;
      if (i < 0) break;
    }
  }
  return finish();
}

}  // namespace econgame

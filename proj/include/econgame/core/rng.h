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
#ifndef ECONGAME_CORE_RNG_H_
#define ECONGAME_CORE_RNG_H_

// Counter-based randomness. Draws are pure functions of a key, so results do
// not depend on evaluation order or thread count.

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace econgame {

constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Order-sensitive hash of a tuple of integers.
constexpr std::uint64_t MixKey(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6A09E667F3BCC909ULL;
  for (std::uint64_t p : parts) h = SplitMix64(h ^ SplitMix64(p));
  return h;
}

// Uniform in [0, 1) with 53 bits of resolution.
constexpr double UnitFromBits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Box-Muller standard normal keyed on `key`.
inline double StandardNormal(std::uint64_t key) {
  const double u1 = UnitFromBits(SplitMix64(key ^ 0x1ULL));
  const double u2 = UnitFromBits(SplitMix64(key ^ 0x2ULL));
  const double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
  return radius * std::cos(2.0 * std::numbers::pi * u2);
}

// Small sequential generator for policy sampling; satisfies
// UniformRandomBitGenerator so it can also feed std::shuffle.
class SplitMixStream {
 public:
  using result_type = std::uint64_t;
  explicit SplitMixStream(std::uint64_t seed) : state_(seed) {}
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return SplitMix64(state_);
  }
  double Uniform() { return UnitFromBits((*this)()); }

 private:
  std::uint64_t state_;
};

}  // namespace econgame

#endif  // ECONGAME_CORE_RNG_H_

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
#ifndef ECONGAME_CORE_HASH_H_
#define ECONGAME_CORE_HASH_H_

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace econgame {

// 64-bit FNV-1a, used for content hashes and checkpoint checksums.
class Fnv1a64 {
 public:
  void Update(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t k = 0; k < size; ++k) {
      state_ ^= bytes[k];
      state_ *= 0x100000001B3ULL;
    }
  }
  void Update(std::string_view s) { Update(s.data(), s.size()); }
  std::uint64_t digest() const { return state_; }
  std::string hex() const { return ToHex(state_); }

  static std::string ToHex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(v));
    return buf;
  }

 private:
  std::uint64_t state_ = 0xCBF29CE484222325ULL;
};

inline std::string HashHex(std::string_view s) {
  Fnv1a64 h;
  h.Update(s);
  return h.hex();
}

}  // namespace econgame

#endif  // ECONGAME_CORE_HASH_H_

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
#include "econgame/policy/checkpoint.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "econgame/core/errors.h"
#include "econgame/core/hash.h"

namespace econgame {
namespace {

constexpr const char* kMagic = "econgame-policy";
constexpr int kVersion = 1;

std::string EncodePayload(const std::vector<double>& values) {
  std::string bytes(values.size() * 8, '\0');
  for (std::size_t k = 0; k < values.size(); ++k) {
    const auto bits = std::bit_cast<std::uint64_t>(values[k]);
    for (int b = 0; b < 8; ++b) {
      bytes[k * 8 + b] = static_cast<char>((bits >> (8 * b)) & 0xFF);
    }
  }
  return bytes;
}

std::string JoinInts(const std::vector<int>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(v[k]);
  }
  return out;
}

std::vector<int> ParseInts(std::istringstream& in) {
  std::vector<int> v;
  int x;
  while (in >> x) v.push_back(x);
  return v;
}

}  // namespace

std::string PolicyHash(const PolicyParams& params) {
  return HashHex(EncodePayload(params.values));
}

void SavePolicy(const PolicyParams& params,
                const std::filesystem::path& path) {
  const PolicySpec& spec = params.spec;
  if (params.values.size() != ParameterCount(spec)) {
    throw ShapeError("SavePolicy: parameter vector does not match spec");
  }
  const std::string payload = EncodePayload(params.values);
  std::ostringstream header;
  header << kMagic << ' ' << kVersion << '\n'
         << "agent_type " << AgentTypeName(spec.agent_type) << '\n'
         << "obs_dim " << spec.obs_dim << '\n'
         << "hetero_dim " << spec.hetero_dim << '\n'
         << "action_dims " << JoinInts(spec.action_dims) << '\n'
         << "hidden " << JoinInts(spec.hidden) << '\n'
         << "activation tanh\n";
  for (const LayerShape& s : ShapeTable(spec)) {
    header << "layer " << s.name << ' ' << s.rows << ' ' << s.cols << '\n';
  }
  header << "count " << params.values.size() << '\n'
         << "checksum " << HashHex(payload) << '\n'
         << "end\n";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << header.str();
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

PolicyParams LoadPolicy(const std::filesystem::path& path,
                        const PolicySpec* expected) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  PolicySpec spec;
  spec.hidden.clear();
  std::vector<LayerShape> layers;
  std::size_t count = 0;
  std::string checksum;
  bool saw_magic = false, saw_end = false;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string key;
    fields >> key;
    if (!saw_magic) {
      int version = 0;
      fields >> version;
      if (key != kMagic || version != kVersion) {
        throw ChecksumError(path.string() + ": not a policy checkpoint");
      }
      saw_magic = true;
    } else if (key == "agent_type") {
      std::string name;
      fields >> name;
      spec.agent_type = ParseAgentType(name);
    } else if (key == "obs_dim") {
      fields >> spec.obs_dim;
    } else if (key == "hetero_dim") {
      fields >> spec.hetero_dim;
    } else if (key == "action_dims") {
      spec.action_dims = ParseInts(fields);
    } else if (key == "hidden") {
      spec.hidden = ParseInts(fields);
    } else if (key == "activation") {
      std::string act;
      fields >> act;
      if (act != "tanh") throw ShapeError("unsupported activation " + act);
    } else if (key == "layer") {
      LayerShape s;
      fields >> s.name >> s.rows >> s.cols;
      layers.push_back(s);
    } else if (key == "count") {
      fields >> count;
    } else if (key == "checksum") {
      fields >> checksum;
    } else if (key == "end") {
      saw_end = true;
      break;
    } else {
      throw ChecksumError(path.string() + ": unexpected header line '" +
                          line + "'");
    }
  }
  if (!saw_magic || !saw_end) {
    throw ChecksumError(path.string() + ": truncated header");
  }

  const auto table = ShapeTable(spec);
  if (table.size() != layers.size()) {
    throw ChecksumError(path.string() + ": shape table does not match spec");
  }
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k].name != layers[k].name || table[k].rows != layers[k].rows ||
        table[k].cols != layers[k].cols) {
      throw ChecksumError(path.string() + ": inconsistent layer " +
                          layers[k].name);
    }
  }
  if (expected != nullptr) {
    const auto want = ShapeTable(*expected);
    for (std::size_t k = 0; k < std::max(want.size(), table.size()); ++k) {
      if (k >= want.size() || k >= table.size() ||
          want[k].name != table[k].name || want[k].rows != table[k].rows ||
          want[k].cols != table[k].cols) {
        const std::string name =
            k < want.size() ? want[k].name : table[k].name;
        const auto dims = [](const std::vector<LayerShape>& t, std::size_t i) {
          return i < t.size() ? std::to_string(t[i].rows) + "x" +
                                    std::to_string(t[i].cols)
                              : std::string("absent");
        };
        throw ShapeError("layer " + name + ": expected " + dims(want, k) +
                         ", checkpoint has " + dims(table, k));
      }
    }
    if (expected->agent_type != spec.agent_type) {
      throw ShapeError("checkpoint agent type " +
                       std::string(AgentTypeName(spec.agent_type)) +
                       " does not match expected " +
                       std::string(AgentTypeName(expected->agent_type)));
    }
  }
  if (count != ParameterCount(spec)) {
    throw ChecksumError(path.string() + ": parameter count mismatch");
  }

  std::string payload(count * 8, '\0');
  in.read(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (static_cast<std::size_t>(in.gcount()) != payload.size()) {
    throw ChecksumError(path.string() + ": payload truncated");
  }
  if (HashHex(payload) != checksum) {
    throw ChecksumError(path.string() + ": checksum mismatch");
  }
  PolicyParams params{spec, std::vector<double>(count)};
  for (std::size_t k = 0; k < count; ++k) {
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) {
      bits |= static_cast<std::uint64_t>(
                  static_cast<unsigned char>(payload[k * 8 + b]))
              << (8 * b);
    }
    params.values[k] = std::bit_cast<double>(bits);
  }
  return params;
}

}  // namespace econgame

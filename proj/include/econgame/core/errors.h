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
#ifndef ECONGAME_CORE_ERRORS_H_
#define ECONGAME_CORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace econgame {

// A precondition of a pure operation was violated by the caller.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configuration value is out of range. field() names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// An action index fell outside its grid. agent() names the agent.
class DecodeError : public std::out_of_range {
 public:
  DecodeError(std::string agent, const std::string& what)
      : std::out_of_range(agent + ": " + what), agent_(std::move(agent)) {}
  const std::string& agent() const { return agent_; }

 private:
  std::string agent_;
};

// Internal bookkeeping produced an impossible state (e.g. negative stock).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ChecksumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Training diverged (non-finite loss); the message carries a diagnostics dump.
class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace econgame

#endif  // ECONGAME_CORE_ERRORS_H_

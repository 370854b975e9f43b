// Copyright 2026 The fairgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRGAME_ERRORS_H_
#define FAIRGAME_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fairgame {

// Malformed input: a scenario field, table entry or strategy that does not
// fit the game or population it is used with.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A combinatorial enumeration would exceed its configured cap. Never
// raised after partial results have been returned.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, long long required, long long cap)
      : std::runtime_error(what + ": needs " + std::to_string(required) +
                           " items, budget is " + std::to_string(cap)),
        required_(required),
        cap_(cap) {}
  long long required() const { return required_; }
  long long cap() const { return cap_; }

 private:
  long long required_;
  long long cap_;
};

// A construction's hypothesis does not hold for the supplied inputs.
class HypothesisFailure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fairgame

#endif  // FAIRGAME_ERRORS_H_

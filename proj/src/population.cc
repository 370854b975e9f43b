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

#include "fairgame/population.h"

#include <set>

#include "fairgame/errors.h"

namespace fairgame {

void Population::Validate() const {
  if (candidates.empty()) throw ConfigError("population is empty");
  std::set<std::string> ids;
  std::set<std::vector<Rational>> features;
  Rational total;
  for (const auto& c : candidates) {
    if (c.id.empty()) throw ConfigError("candidate with empty id");
    if (!ids.insert(c.id).second) throw ConfigError("duplicate candidate id '" + c.id + "'");
    if (!features.insert(c.features).second) {
      throw ConfigError("candidate '" + c.id +
                        "' repeats another candidate's feature vector");
    }
    if (!c.weight.IsPositive()) {
      throw ConfigError("candidate '" + c.id + "' has non-positive weight");
    }
    total += c.weight;
  }
  if (total != Rational(1)) {
    throw ConfigError("population weights sum to " + total.ToString() + ", not 1");
  }
}

const Candidate& Population::Find(const std::string& id) const {
  for (const auto& c : candidates) {
    if (c.id == id) return c;
  }
  throw ConfigError("unknown candidate '" + id + "'");
}

Population Population::Uniform(std::vector<Candidate> candidates) {
  Population p{std::move(candidates)};
  const Rational w(1, static_cast<std::int64_t>(p.candidates.size()));
  for (auto& c : p.candidates) c.weight = w;
  return p;
}

}  // namespace fairgame

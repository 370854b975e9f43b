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

#ifndef FAIRGAME_POPULATION_H_
#define FAIRGAME_POPULATION_H_

#include <string>
#include <vector>

#include "fairgame/rational.h"

namespace fairgame {

struct Candidate {
  std::string id;
  std::vector<Rational> features;
  std::string sensitive;
  std::string label;
  Rational weight;
};

// Weighted finite population. Ids are unique, feature vectors distinct
// (features identify the candidate) and weights positive, summing to 1.
struct Population {
  std::vector<Candidate> candidates;

  void Validate() const;
  const Candidate& Find(const std::string& id) const;
  std::size_t size() const { return candidates.size(); }
  bool empty() const { return candidates.empty(); }

  // Uniform weights over the given candidates (weights ignored on input).
  static Population Uniform(std::vector<Candidate> candidates);
};

}  // namespace fairgame

#endif  // FAIRGAME_POPULATION_H_

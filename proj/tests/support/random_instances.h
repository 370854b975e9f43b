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

#ifndef FAIRGAME_TESTS_SUPPORT_RANDOM_INSTANCES_H_
#define FAIRGAME_TESTS_SUPPORT_RANDOM_INSTANCES_H_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fairgame/constructors.h"
#include "fairgame/fairness.h"
#include "fairgame/population.h"

namespace fairgame::testing {

inline int Pick(std::mt19937& rng, int n) {
  return static_cast<int>(rng() % static_cast<unsigned>(n));
}

// Weighted population with 2..max_size candidates, up to max_labels labels.
inline Population RandomPopulation(std::mt19937& rng, int max_size, int max_labels) {
  const int n = 2 + Pick(rng, max_size - 1);
  const int labels = 1 + Pick(rng, max_labels);
  std::vector<int> w;
  int total = 0;
  for (int i = 0; i < n; ++i) {
    w.push_back(1 + Pick(rng, 5));
    total += w.back();
  }
  Population pop;
  for (int i = 0; i < n; ++i) {
    pop.candidates.push_back({"x" + std::to_string(i), {Rational(i), Rational(Pick(rng, 3))},
                              std::string(1, static_cast<char>('a' + Pick(rng, 3))),
                              std::to_string(Pick(rng, labels)), Rational(w[i], total)});
  }
  return pop;
}

// Random subset of `grid` of size 2..|grid| that contains `must`.
inline std::vector<Rational> RandomDecisions(std::mt19937& rng, const std::vector<Rational>& grid,
                                             const Rational& must) {
  std::vector<Rational> out{must};
  const int extra = 1 + Pick(rng, static_cast<int>(grid.size()) - 1);
  std::vector<Rational> rest;
  for (const auto& z : grid) {
    if (z != must) rest.push_back(z);
  }
  std::shuffle(rest.begin(), rest.end(), rng);
  for (int i = 0; i < extra && i < static_cast<int>(rest.size()); ++i) out.push_back(rest[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// A table F over D x labels onto `image_size` values that is onto the same
// image for every label, so the attainability hypothesis holds.
inline FeatureMap RandomSurjectiveTable(std::mt19937& rng, const std::vector<Rational>& decisions,
                                        int image_size, int max_label) {
  std::map<std::pair<Rational, std::string>, std::string> t;
  for (int y = 0; y < max_label; ++y) {
    std::vector<int> order(decisions.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int value = i < static_cast<std::size_t>(image_size) ? static_cast<int>(i)
                                                                 : Pick(rng, image_size);
      t[{decisions[order[i]], std::to_string(y)}] = "v" + std::to_string(value);
    }
  }
  return FeatureMap::Table(t);
}

inline FeatureMap RandomTable(std::mt19937& rng, const std::vector<Rational>& decisions,
                              int max_label) {
  std::map<std::pair<Rational, std::string>, std::string> t;
  for (const auto& d : decisions) {
    for (int y = 0; y < max_label; ++y) t[{d, std::to_string(y)}] = "w" + std::to_string(Pick(rng, 3));
  }
  return FeatureMap::Table(t);
}

}  // namespace fairgame::testing

#endif  // FAIRGAME_TESTS_SUPPORT_RANDOM_INSTANCES_H_

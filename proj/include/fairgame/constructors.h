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

#ifndef FAIRGAME_CONSTRUCTORS_H_
#define FAIRGAME_CONSTRUCTORS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairgame/blatant.h"
#include "fairgame/fairness.h"
#include "fairgame/hiring_market.h"
#include "fairgame/population.h"

namespace fairgame {

struct UnfairSeed {
  DecisionDistribution strategy;  // the firm's strategy in the unfair equilibrium
  std::string anchor;             // x0
};

// Image value -> smallest decision (in D's order) mapping onto it.
using RightInverse = std::map<std::string, Rational>;

RightInverse RightInverseTable(const FeatureMap& f, const std::vector<Rational>& decisions,
                               const std::string& label);
// Throws HypothesisFailure when z is outside the image.
Rational ApplyRightInverse(const RightInverse& inverse, const std::string& z,
                           const std::string& label);

// Checks that for every label y of the population and every z in
// F(D, Y(X)) some d in D has F(d, y) = z. Throws HypothesisFailure naming
// the first (y, z) that fails.
void CheckAttainability(const FeatureMap& f, const std::vector<Rational>& decisions,
                        const Population& population);

// g(x0) = seed; every other x gets the seed pushed through F1(., Y(x0)) and
// pulled back through the right inverse at Y(x).
Classifier ConstructGroupFairBlatant(const FeatureMap& f1,
                                     const std::vector<Rational>& decisions,
                                     const Population& population, const UnfairSeed& seed);

enum class SufficiencyCase { kAnchorMatches, kNoMatch, kSwap, kReanchored };
std::string CaseName(SufficiencyCase c);

struct SufficiencyConstruction {
  Classifier classifier;
  SufficiencyCase applied;
  std::map<std::string, std::string> injection;  // label -> F2 value
  std::map<std::string, Rational> label_decision;  // d_y
};

// Labels in canonical order map to the first image values in canonical
// order unless `injection` is given. The seed must be pure.
SufficiencyConstruction ConstructSufficiencyBlatant(
    const FeatureMap& f2, const std::vector<Rational>& decisions,
    const Population& population, const UnfairSeed& seed,
    std::optional<std::map<std::string, std::string>> injection = std::nullopt);

// F2(g(x), Y(x)) equal implies Y(x) equal, for pure classifiers.
bool LabelInjective(const FeatureMap& f2, const Population& population, const Classifier& g);

Classifier ConstructConstant(const Population& population, const DecisionDistribution& seed);

struct SeedEvidence {
  StrategyProfile profile;
  PlayerId flagged_player = 0;
  std::size_t witness = 0;  // member of the set
};

// The seed as the firm's strategy in a blatantly unfair equilibrium of the
// bilateral game. Pure seeds are looked up among flagged members of `set`;
// mixed seeds are paired with each candidate threshold policy and checked
// through the belief space, with witnesses drawn from `set`. Throws
// HypothesisFailure when no such equilibrium exists.
SeedEvidence ValidateUnfairSeed(const HiringGame& bilateral, const EquilibriumSet& set,
                                const DecisionDistribution& seed);

}  // namespace fairgame

#endif  // FAIRGAME_CONSTRUCTORS_H_

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


#ifndef FAIRGAME_SCENARIO_H_
#define FAIRGAME_SCENARIO_H_

#include <optional>
#include <string>
#include <vector>

#include "fairgame/constructors.h"
#include "fairgame/equilibrium.h"
#include "fairgame/fairness.h"
#include "fairgame/hiring_market.h"
#include "fairgame/population.h"
#include "fairgame/scm.h"
#include <nlohmann/json.hpp>

namespace fairgame {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct GameSpec {
  enum class Kind { kBilateral, kSimultaneous, kCapped };
  Kind kind = Kind::kBilateral;
  std::string candidate = "x";  // bilateral only
  int cap = 0;                  // capped only
  std::vector<Rational> allowed_offers{Rational(0), Rational(3, 2)};
};

struct ClassifierSpec {
  enum class Kind { kNone, kConstant, kTable, kConstructed };
  enum class Construction { kGroupFair, kSufficiency, kConstant };
  Kind kind = Kind::kNone;
  Classifier table;  // kConstant and kTable, filled at load time
  Construction construction = Construction::kConstant;
  FeatureMap f;      // F1 for group_fair, F2 for sufficiency
  std::vector<Rational> decisions;
  UnfairSeed seed;
  std::optional<std::map<std::string, std::string>> injection;
};

struct BeliefsSpec {
  enum class Kind { kNone, kProp1, kProp2, kExplicit };
  Kind kind = Kind::kNone;
  OutsideOptionBeliefs explicit_beliefs;
};

// Bilateral profile: the firm's offer and the candidate's acceptance
// threshold (nullopt rejects every offer). The market plays the spec's
// outside options.
struct ProfileSpec {
  Rational offer;
  std::optional<Rational> threshold;
};

struct CheckSpec {
  std::string id;
  std::string type;
  GroupFairnessSpec group;               // group-fairness types
  MetricPair metrics;                    // individual_fairness
  std::optional<CausalModel> scm;        // counterfactual, no_taste_based
  std::optional<GameSpec> game;          // enumerate, detect_blatant
  std::optional<int> jobs;               // detect_blatant filter
  std::optional<SolutionConcept> solution_concept;
};

struct Scenario {
  std::string name;
  MarketSpec market;
  std::string grid_label;  // the step, or "explicit"
  Population population;
  GameSpec game;
  ClassifierSpec classifier;
  BeliefsSpec beliefs;
  std::optional<ProfileSpec> profile;
  SolutionConcept solution_concept = SolutionConcept::kSce;
  long long budget = 1'000'000;
  Rational accept_threshold;  // candidate response used for diagnostics
  std::vector<CheckSpec> checks;
  Json source;                // the validated document
};

// Throws ConfigError naming the offending field.
Scenario ParseScenario(const Json& doc);
Json ReadJsonFile(const std::string& path);
Scenario LoadScenario(const std::string& path);

const std::vector<std::string>& CheckTypes();

// The resolved classifier; runs the construction for kConstructed.
Classifier ResolveClassifier(const Scenario& s);

HiringGame BuildGame(const Scenario& s, const GameSpec& g);

// The canonical six-candidate scenario behind the constant-classifier
// result. A seed shuffles candidate order and group assignment.
Json CorollaryScenario(const Rational& grid_step, int group_count,
                       std::optional<unsigned> seed = std::nullopt);

// JSON helpers shared with the report.
Json ToJson(const Rational& r);
Json ToJson(const DecisionDistribution& d);
Json ToJson(const Classifier& g);

}  // namespace fairgame

#endif  // FAIRGAME_SCENARIO_H_

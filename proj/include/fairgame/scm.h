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

#ifndef FAIRGAME_SCM_H_
#define FAIRGAME_SCM_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairgame/distribution.h"
#include "fairgame/fairness.h"
#include "fairgame/population.h"

namespace fairgame {

using World = std::map<std::string, std::string>;

// Discrete structural causal model. Exogenous nodes carry finite
// distributions; endogenous nodes are deterministic tables of their
// parents; the decision node "D" maps its parents to a distribution over
// offers. One node is the sensitive attribute, an ordered list of nodes are
// the candidate features.
class CausalModel {
 public:
  static constexpr const char* kDecision = "D";

  void AddExogenous(const std::string& name, Distribution<std::string> dist);
  void AddEndogenous(const std::string& name, std::vector<std::string> parents,
                     std::map<std::vector<std::string>, std::string> table);
  void SetDecision(std::vector<std::string> parents,
                   std::map<std::vector<std::string>, DecisionDistribution> table);
  void SetSensitive(const std::string& name) { sensitive_ = name; }
  void SetFeatures(std::vector<std::string> names) { features_ = std::move(names); }

  const std::string& sensitive() const { return sensitive_; }
  const std::vector<std::string>& features() const { return features_; }
  bool HasDecision() const { return decision_.has_value(); }
  const std::vector<std::string>& DecisionParents() const;

  bool HasNode(const std::string& name) const;
  std::vector<std::string> Parents(const std::string& name) const;
  bool HasEdge(const std::string& from, const std::string& to) const;
  int OutDegree(const std::string& name) const;
  // Values the node can take, in canonical order.
  std::vector<std::string> Domain(const std::string& name) const;

  // Structure (names, parents, acyclicity, distributions) and totality of
  // every table on configurations reachable with or without an
  // intervention on the sensitive node. Throws ConfigError.
  void Validate() const;

  // Positive-probability exogenous assignments with their probabilities.
  std::vector<std::pair<World, Rational>> NoiseAssignments() const;
  // Values of all non-decision nodes; `intervention` fixes the sensitive node.
  World Evaluate(const World& noise,
                 const std::optional<std::string>& intervention = std::nullopt) const;
  const DecisionDistribution& DecisionAt(const World& world) const;

  // P(X = x, A = a).
  Rational Probability(const World& x, const std::string& a) const;

  // Abduction on X = x, A = a; intervention A = a'; prediction through D.
  DecisionDistribution CounterfactualOutput(const World& x, const std::string& a,
                                            const std::string& a_prime) const;

 private:
  struct Endogenous {
    std::vector<std::string> parents;
    std::map<std::vector<std::string>, std::string> table;
  };
  struct Decision {
    std::vector<std::string> parents;
    std::map<std::vector<std::string>, DecisionDistribution> table;
  };
  std::vector<std::string> TopologicalOrder() const;

  std::map<std::string, Distribution<std::string>> exogenous_;
  std::map<std::string, Endogenous> endogenous_;
  std::optional<Decision> decision_;
  std::string sensitive_ = "A";
  std::vector<std::string> features_;
};

// Candidate feature vector as a world over the model's feature nodes.
World FeatureWorld(const CausalModel& scm, const Candidate& c);

// Copy of `scm` whose decision node reads the feature nodes and plays the
// classifier's distribution for the matching candidate.
CausalModel AttachClassifier(const CausalModel& scm, const Population& population,
                             const Classifier& g);

struct CounterfactualWitness {
  World x;
  std::string a;
  std::string a_prime;
  Rational decision;
  Rational factual;
  Rational counterfactual;
};

struct CounterfactualVerdict {
  bool holds = true;
  std::optional<CounterfactualWitness> witness;
};

// Over every positive-probability (x, a) of the model.
CounterfactualVerdict CheckCounterfactualFairness(const CausalModel& scm);
// Classifier attached as the decision node; (x, a) ranges over the
// population's feature vectors.
CounterfactualVerdict CheckCounterfactualFairness(const CausalModel& scm,
                                                  const Population& population,
                                                  const Classifier& g);

// True iff there is no edge from the sensitive node to D.
bool CheckNoTasteBased(const CausalModel& scm);

}  // namespace fairgame

#endif  // FAIRGAME_SCM_H_

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

#ifndef FAIRGAME_FAIRNESS_H_
#define FAIRGAME_FAIRNESS_H_

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "fairgame/distribution.h"
#include "fairgame/population.h"
#include "fairgame/rational.h"

namespace fairgame {

using DecisionDistribution = Distribution<Rational>;

// Candidate id -> distribution over offers.
struct Classifier {
  std::map<std::string, DecisionDistribution> decisions;

  const DecisionDistribution& Of(const std::string& id) const;
  // Every candidate covered, every distribution a probability with values
  // in [0,3]. Throws ConfigError.
  void Validate(const Population& population) const;

  static Classifier Constant(const Population& population,
                             const DecisionDistribution& d);
};

// Orders feature values numerically when both parse as rationals, else
// lexicographically. Used for every canonical witness.
struct ValueLess {
  bool operator()(const std::string& a, const std::string& b) const;
};

// A finite function (decision, label) -> value.
struct FeatureMap {
  enum class Kind { kDecision, kLabel, kConstant, kTable };
  Kind kind = Kind::kConstant;
  std::string constant = "*";
  std::map<std::pair<Rational, std::string>, std::string> table;

  std::string Apply(const Rational& d, const std::string& y) const;

  static FeatureMap Decision() { return {Kind::kDecision, "*", {}}; }
  static FeatureMap Label() { return {Kind::kLabel, "*", {}}; }
  static FeatureMap Constant(std::string c = "*") { return {Kind::kConstant, c, {}}; }
  static FeatureMap Table(std::map<std::pair<Rational, std::string>, std::string> t) {
    return {Kind::kTable, "*", std::move(t)};
  }
};

struct GroupFairnessSpec {
  std::string name;
  FeatureMap f1;
  FeatureMap f2;

  static GroupFairnessSpec StatisticalParity();
  static GroupFairnessSpec EqualizedOdds();
  static GroupFairnessSpec Sufficiency();
};

// Atoms keyed (F1 value, F2 value, sensitive value).
using JointKey = std::tuple<std::string, std::string, std::string>;
using JointDistribution = std::map<JointKey, Rational>;

JointDistribution ComputeJointDistribution(const Population& population,
                                           const Classifier& g,
                                           const GroupFairnessSpec& spec);

struct GroupWitness {
  std::string group;      // a
  std::string f2_value;   // v
  std::string f1_value;   // u, with P(u | a, v) > P(u | v)
  Rational in_group;      // P(F1=u | A=a, F2=v)
  Rational overall;       // P(F1=u | F2=v)
};

struct GroupVerdict {
  bool holds = true;
  std::optional<GroupWitness> witness;
};

GroupVerdict CheckGroupFairness(const Population& population,
                                const Classifier& g,
                                const GroupFairnessSpec& spec);
GroupVerdict CheckStatisticalParity(const Population& population,
                                    const Classifier& g);
GroupVerdict CheckEqualizedOdds(const Population& population,
                                const Classifier& g);
GroupVerdict CheckSufficiency(const Population& population,
                              const Classifier& g);

// Canonical text of a decision distribution, e.g. "0:1/2,3/2:1/2".
std::string DistributionKey(const DecisionDistribution& d);

// M: statistical distance between decision distributions.
struct OutputMetric {
  enum class Kind { kTotalVariation, kTable };
  Kind kind = Kind::kTotalVariation;
  // Keyed by DistributionKey pairs.
  std::map<std::pair<std::string, std::string>, Rational> table;

  Rational Distance(const DecisionDistribution& p,
                    const DecisionDistribution& q) const;
  void Validate() const;
};

// m: distance between candidates.
struct CandidateMetric {
  enum class Kind { kScaledL1, kTable };
  Kind kind = Kind::kScaledL1;
  Rational scale{1};
  // Keyed by id pairs; one orientation suffices, diagonal defaults to 0.
  std::map<std::pair<std::string, std::string>, Rational> table;

  Rational Distance(const Candidate& x, const Candidate& y) const;
  // Table kind: nonnegative, symmetric, zero diagonal and triangle
  // inequality over the population.
  void Validate(const Population& population) const;
};

struct MetricPair {
  OutputMetric M;
  CandidateMetric m;
};

struct IndividualWitness {
  std::string x;
  std::string y;
  Rational output_distance;
  Rational candidate_distance;
};

struct IndividualVerdict {
  bool holds = true;
  std::optional<IndividualWitness> witness;
};

IndividualVerdict CheckIndividualFairness(const Population& population,
                                          const Classifier& g,
                                          const MetricPair& metrics);

}  // namespace fairgame

#endif  // FAIRGAME_FAIRNESS_H_

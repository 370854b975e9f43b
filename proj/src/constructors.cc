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

#include "fairgame/constructors.h"

#include <algorithm>
#include <set>

#include "fairgame/errors.h"

namespace fairgame {
namespace {

std::vector<std::string> Labels(const Population& population) {
  std::set<std::string, ValueLess> labels;
  for (const auto& c : population.candidates) labels.insert(c.label);
  return {labels.begin(), labels.end()};
}

std::vector<std::string> Image(const FeatureMap& f, const std::vector<Rational>& decisions,
                               const std::vector<std::string>& labels) {
  std::set<std::string, ValueLess> image;
  for (const auto& y : labels) {
    for (const auto& d : decisions) image.insert(f.Apply(d, y));
  }
  return {image.begin(), image.end()};
}

void CheckDecisions(const std::vector<Rational>& decisions) {
  if (decisions.empty()) throw ConfigError("decision set is empty");
  for (std::size_t i = 1; i < decisions.size(); ++i) {
    if (!(decisions[i - 1] < decisions[i])) {
      throw ConfigError("decision set must be strictly increasing");
    }
  }
}

void CheckSeed(const UnfairSeed& seed, const std::vector<Rational>& decisions,
               const Population& population) {
  population.Find(seed.anchor);
  if (!IsProbability(seed.strategy)) throw ConfigError("seed strategy is not a distribution");
  for (const auto& [d, p] : seed.strategy) {
    if (!std::binary_search(decisions.begin(), decisions.end(), d)) {
      throw ConfigError("seed decision " + d.ToString() + " is not in D");
    }
  }
}

}  // namespace

RightInverse RightInverseTable(const FeatureMap& f, const std::vector<Rational>& decisions,
                               const std::string& label) {
  CheckDecisions(decisions);
  RightInverse inv;
  for (const auto& d : decisions) inv.try_emplace(f.Apply(d, label), d);
  return inv;
}

Rational ApplyRightInverse(const RightInverse& inverse, const std::string& z,
                           const std::string& label) {
  auto it = inverse.find(z);
  if (it == inverse.end()) {
    throw HypothesisFailure("no decision d has F(d, " + label + ") = " + z);
  }
  return it->second;
}

void CheckAttainability(const FeatureMap& f, const std::vector<Rational>& decisions,
                        const Population& population) {
  const auto labels = Labels(population);
  const auto image = Image(f, decisions, labels);
  for (const auto& y : labels) {
    const auto inv = RightInverseTable(f, decisions, y);
    for (const auto& z : image) ApplyRightInverse(inv, z, y);
  }
}

Classifier ConstructGroupFairBlatant(const FeatureMap& f1,
                                     const std::vector<Rational>& decisions,
                                     const Population& population, const UnfairSeed& seed) {
  CheckDecisions(decisions);
  CheckSeed(seed, decisions, population);
  CheckAttainability(f1, decisions, population);
  const std::string& y0 = population.Find(seed.anchor).label;
  std::map<std::string, RightInverse> inverse;
  Classifier g;
  for (const auto& c : population.candidates) {
    if (c.id == seed.anchor) {
      g.decisions[c.id] = seed.strategy;
      continue;
    }
    auto [it, fresh] = inverse.try_emplace(c.label);
    if (fresh) it->second = RightInverseTable(f1, decisions, c.label);
    DecisionDistribution d;
    for (const auto& [z, p] : seed.strategy) {
      AddMass(d, ApplyRightInverse(it->second, f1.Apply(z, y0), c.label), p);
    }
    g.decisions[c.id] = std::move(d);
  }
  return g;
}

std::string CaseName(SufficiencyCase c) {
  switch (c) {
    case SufficiencyCase::kAnchorMatches: return "anchor_matches";
    case SufficiencyCase::kNoMatch: return "no_match";
    case SufficiencyCase::kSwap: return "swap";
    case SufficiencyCase::kReanchored: return "reanchored";
  }
  return "unknown";
}

bool LabelInjective(const FeatureMap& f2, const Population& population, const Classifier& g) {
  std::map<std::string, std::string> label_of;
  for (const auto& c : population.candidates) {
    for (const auto& [d, p] : g.Of(c.id)) {
      if (!p.IsPositive()) continue;
      auto [it, fresh] = label_of.try_emplace(f2.Apply(d, c.label), c.label);
      if (!fresh && it->second != c.label) return false;
    }
  }
  return true;
}

namespace {

Classifier ByLabel(const Population& population, const std::map<std::string, Rational>& by_label) {
  Classifier g;
  for (const auto& c : population.candidates) {
    g.decisions[c.id] = PointMass(by_label.at(c.label));
  }
  return g;
}

}  // namespace

SufficiencyConstruction ConstructSufficiencyBlatant(
    const FeatureMap& f2, const std::vector<Rational>& decisions,
    const Population& population, const UnfairSeed& seed,
    std::optional<std::map<std::string, std::string>> injection) {
  CheckDecisions(decisions);
  if (seed.strategy.size() != 1) {
    throw HypothesisFailure("the sufficiency construction needs a pure seed strategy");
  }
  CheckSeed(seed, decisions, population);
  CheckAttainability(f2, decisions, population);
  const Rational pi = seed.strategy.begin()->first;
  const auto labels = Labels(population);
  const auto image = Image(f2, decisions, labels);
  if (labels.size() > image.size()) {
    throw HypothesisFailure("|Y(X)| = " + std::to_string(labels.size()) +
                            " exceeds |F2(D, Y(X))| = " + std::to_string(image.size()));
  }
  SufficiencyConstruction out;
  if (injection) {
    std::set<std::string> used;
    for (const auto& y : labels) {
      auto it = injection->find(y);
      if (it == injection->end()) throw ConfigError("injection misses label " + y);
      if (std::find(image.begin(), image.end(), it->second) == image.end()) {
        throw ConfigError("injection value " + it->second + " is not in F2(D, Y(X))");
      }
      if (!used.insert(it->second).second) throw ConfigError("injection is not injective");
      out.injection[y] = it->second;
    }
  } else {
    for (std::size_t k = 0; k < labels.size(); ++k) out.injection[labels[k]] = image[k];
  }
  auto decide = [&](const std::map<std::string, std::string>& inj) {
    std::map<std::string, Rational> d;
    for (const auto& y : labels) {
      d[y] = ApplyRightInverse(RightInverseTable(f2, decisions, y), inj.at(y), y);
    }
    return d;
  };
  out.label_decision = decide(out.injection);
  const std::string& y0 = population.Find(seed.anchor).label;
  std::map<std::string, Rational> g = out.label_decision;
  if (g.at(y0) == pi) {
    out.applied = SufficiencyCase::kAnchorMatches;
  } else {
    std::optional<std::string> y1;
    for (const auto& y : labels) {
      if (out.label_decision.at(y) == pi) y1 = y;
    }
    if (!y1) {
      out.applied = SufficiencyCase::kNoMatch;
      g[y0] = pi;
    } else {
      out.applied = SufficiencyCase::kSwap;
      g[y0] = out.label_decision.at(*y1);
      g[*y1] = out.label_decision.at(y0);
    }
  }
  out.classifier = ByLabel(population, g);
  if (LabelInjective(f2, population, out.classifier)) return out;

  // For general F2 the swapped or substituted decision may land on another
  // label's value. Anchor the injection at F2(pi, Y(x0)) instead.
  out.injection.clear();
  out.injection[y0] = f2.Apply(pi, y0);
  std::size_t next = 0;
  for (const auto& y : labels) {
    if (y == y0) continue;
    while (image[next] == out.injection[y0]) ++next;
    out.injection[y] = image[next++];
  }
  out.label_decision = decide(out.injection);
  out.label_decision[y0] = pi;
  out.applied = SufficiencyCase::kReanchored;
  out.classifier = ByLabel(population, out.label_decision);
  return out;
}

Classifier ConstructConstant(const Population& population, const DecisionDistribution& seed) {
  if (!IsProbability(seed)) throw ConfigError("seed strategy is not a distribution");
  return Classifier::Constant(population, seed);
}

SeedEvidence ValidateUnfairSeed(const HiringGame& bilateral, const EquilibriumSet& set,
                                const DecisionDistribution& seed) {
  if (bilateral.NumCandidates() != 1) {
    throw ConfigError("seed validation needs a bilateral market");
  }
  if (!IsProbability(seed)) throw ConfigError("seed strategy is not a distribution");
  const auto& game = bilateral.game();
  if (seed.size() == 1) {
    const Rational z = seed.begin()->first;
    for (const auto& f : DetectBlatantUnfairness(set)) {
      const auto& m = set.members[f.equilibrium];
      auto offers = bilateral.FirmOffersOf(std::get<PureStrategy>(m.profile.strategies.at(kFirm)));
      if (offers && (*offers)[0] == z) return {m.profile, f.player, f.witness};
    }
    throw HypothesisFailure("offer " + z.ToString() +
                            " is not played in any blatantly unfair equilibrium");
  }
  MixedStrategy firm{kFirm, {}};
  for (const auto& [z, p] : seed) {
    if (p.IsPositive()) firm.support.emplace_back(bilateral.FirmOffers(z), p);
  }
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < set.members.size(); ++k) {
    const auto& pay = set.members[k].payoffs;
    if (!pay[0].IsPositive() || !pay[1].IsPositive()) continue;
    if (!best || Min(pay[0], pay[1]) > Min(set.members[*best].payoffs[0],
                                           set.members[*best].payoffs[1])) {
      best = k;
    }
  }
  if (best) {
    for (const auto& t : bilateral.ThresholdStrategies(0)) {
      StrategyProfile p;
      p.strategies.emplace(kFirm, firm);
      p.strategies.emplace(bilateral.CandidatePlayer(0), t);
      p.nature = bilateral.TrueMarket();
      const bool equilibrium = set.solution_concept == SolutionConcept::kNash
                                   ? CheckNash(game, p).holds
                                   : FindSceWitness(game, p, bilateral.BeliefSpace(p)).has_value();
      if (!equilibrium) continue;
      const auto payoffs = EvaluateProfile(game, p);
      for (PlayerId i = 0; i < 2; ++i) {
        if (!payoffs[i].IsPositive()) return {p, i, *best};
      }
    }
  }
  throw HypothesisFailure("mixed seed is not the firm's strategy in any blatantly unfair "
                          "equilibrium found in the belief space");
}

}  // namespace fairgame

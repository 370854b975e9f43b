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

#include "fairgame/fairness.h"

#include <algorithm>
#include <set>
#include <vector>

#include "fairgame/errors.h"

namespace fairgame {
namespace {

std::optional<Rational> AsRational(const std::string& s) {
  try {
    return Rational::Parse(s);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

template <typename Map>
std::vector<std::string> SortedKeys(const Map& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  std::sort(out.begin(), out.end(), ValueLess());
  return out;
}

}  // namespace

const DecisionDistribution& Classifier::Of(const std::string& id) const {
  auto it = decisions.find(id);
  if (it == decisions.end()) {
    throw ConfigError("classifier has no decision for candidate '" + id + "'");
  }
  return it->second;
}

void Classifier::Validate(const Population& population) const {
  for (const auto& c : population.candidates) {
    const auto& d = Of(c.id);
    if (!IsProbability(d)) {
      throw ConfigError("decision distribution of '" + c.id + "' does not sum to 1");
    }
    for (const auto& [z, p] : d) {
      if (z < Rational(0) || z > Rational(3)) {
        throw ConfigError("decision " + z.ToString() + " for '" + c.id +
                          "' outside [0,3]");
      }
    }
  }
}

Classifier Classifier::Constant(const Population& population,
                                const DecisionDistribution& d) {
  Classifier g;
  for (const auto& c : population.candidates) g.decisions[c.id] = d;
  return g;
}

bool ValueLess::operator()(const std::string& a, const std::string& b) const {
  auto x = AsRational(a);
  auto y = AsRational(b);
  if (x && y) {
    if (*x != *y) return *x < *y;
    return a < b;
  }
  if (x.has_value() != y.has_value()) return x.has_value();  // numbers first
  return a < b;
}

std::string FeatureMap::Apply(const Rational& d, const std::string& y) const {
  switch (kind) {
    case Kind::kDecision: return d.ToString();
    case Kind::kLabel: return y;
    case Kind::kConstant: return constant;
    case Kind::kTable: break;
  }
  auto it = table.find({d, y});
  if (it == table.end()) {
    throw ConfigError("feature table has no entry for (" + d.ToString() + ", " + y + ")");
  }
  return it->second;
}

GroupFairnessSpec GroupFairnessSpec::StatisticalParity() {
  return {"statistical_parity", FeatureMap::Decision(), FeatureMap::Constant()};
}
GroupFairnessSpec GroupFairnessSpec::EqualizedOdds() {
  return {"equalized_odds", FeatureMap::Decision(), FeatureMap::Label()};
}
GroupFairnessSpec GroupFairnessSpec::Sufficiency() {
  return {"sufficiency", FeatureMap::Label(), FeatureMap::Decision()};
}

JointDistribution ComputeJointDistribution(const Population& population,
                                           const Classifier& g,
                                           const GroupFairnessSpec& spec) {
  JointDistribution joint;
  for (const auto& c : population.candidates) {
    for (const auto& [d, p] : g.Of(c.id)) {
      AddMass(joint,
              JointKey{spec.f1.Apply(d, c.label), spec.f2.Apply(d, c.label), c.sensitive},
              c.weight * p);
    }
  }
  return joint;
}

GroupVerdict CheckGroupFairness(const Population& population,
                                const Classifier& g,
                                const GroupFairnessSpec& spec) {
  const auto joint = ComputeJointDistribution(population, g, spec);
  std::map<std::string, Rational> p_v;
  std::map<std::pair<std::string, std::string>, Rational> p_uv, p_av;
  std::map<std::string, bool> u_seen, a_seen;
  for (const auto& [key, p] : joint) {
    const auto& [u, v, a] = key;
    p_v[v] += p;
    p_uv[{u, v}] += p;
    p_av[{a, v}] += p;
    u_seen[u] = a_seen[a] = true;
  }
  const auto us = SortedKeys(u_seen);
  for (const auto& a : SortedKeys(a_seen)) {
    for (const auto& v : SortedKeys(p_v)) {
      auto av = p_av.find({a, v});
      if (av == p_av.end() || !av->second.IsPositive()) continue;
      for (const auto& u : us) {
        auto j = joint.find({u, v, a});
        const Rational in = (j == joint.end() ? Rational(0) : j->second) / av->second;
        auto uv = p_uv.find({u, v});
        const Rational overall =
            (uv == p_uv.end() ? Rational(0) : uv->second) / p_v.at(v);
        if (in > overall) return {false, GroupWitness{a, v, u, in, overall}};
      }
    }
  }
  return {};
}

GroupVerdict CheckStatisticalParity(const Population& population, const Classifier& g) {
  return CheckGroupFairness(population, g, GroupFairnessSpec::StatisticalParity());
}
GroupVerdict CheckEqualizedOdds(const Population& population, const Classifier& g) {
  return CheckGroupFairness(population, g, GroupFairnessSpec::EqualizedOdds());
}
GroupVerdict CheckSufficiency(const Population& population, const Classifier& g) {
  return CheckGroupFairness(population, g, GroupFairnessSpec::Sufficiency());
}

std::string DistributionKey(const DecisionDistribution& d) {
  std::string out;
  for (const auto& [z, p] : d) {
    if (p.IsZero()) continue;
    if (!out.empty()) out += ",";
    out += z.ToString() + ":" + p.ToString();
  }
  return out;
}

Rational OutputMetric::Distance(const DecisionDistribution& p,
                                const DecisionDistribution& q) const {
  if (kind == Kind::kTotalVariation) return TotalVariation(p, q);
  const auto kp = DistributionKey(p);
  const auto kq = DistributionKey(q);
  if (kp == kq) return Rational(0);
  auto it = table.find({kp, kq});
  if (it == table.end()) it = table.find({kq, kp});
  if (it == table.end()) {
    throw ConfigError("output metric has no entry for (" + kp + ") vs (" + kq + ")");
  }
  return it->second;
}

void OutputMetric::Validate() const {
  for (const auto& [k, v] : table) {
    if (v.IsNegative()) throw ConfigError("output metric has a negative entry");
    if (k.first == k.second && !v.IsZero()) {
      throw ConfigError("output metric must vanish on identical distributions");
    }
    auto rev = table.find({k.second, k.first});
    if (rev != table.end() && rev->second != v) {
      throw ConfigError("output metric is not symmetric");
    }
  }
}

Rational CandidateMetric::Distance(const Candidate& x, const Candidate& y) const {
  if (kind == Kind::kScaledL1) {
    if (x.features.size() != y.features.size()) {
      throw ConfigError("candidates '" + x.id + "' and '" + y.id +
                        "' have feature vectors of different length");
    }
    if (x.features.empty()) return Rational(0);
    Rational sum;
    for (std::size_t i = 0; i < x.features.size(); ++i) {
      sum += Abs(x.features[i] - y.features[i]);
    }
    return sum / Rational(static_cast<std::int64_t>(x.features.size())) * scale;
  }
  if (x.id == y.id) {
    auto it = table.find({x.id, x.id});
    return it == table.end() ? Rational(0) : it->second;
  }
  auto it = table.find({x.id, y.id});
  if (it == table.end()) it = table.find({y.id, x.id});
  if (it == table.end()) {
    throw ConfigError("candidate metric has no entry for (" + x.id + ", " + y.id + ")");
  }
  return it->second;
}

void CandidateMetric::Validate(const Population& population) const {
  if (kind == Kind::kScaledL1) {
    if (scale.IsNegative()) throw ConfigError("metric scale must be nonnegative");
    return;
  }
  for (const auto& [k, v] : table) {
    auto rev = table.find({k.second, k.first});
    if (rev != table.end() && rev->second != v) {
      throw ConfigError("candidate metric not symmetric at (" + k.first + ", " +
                        k.second + ")");
    }
  }
  const auto& cs = population.candidates;
  for (const auto& x : cs) {
    if (!Distance(x, x).IsZero()) {
      throw ConfigError("candidate metric nonzero on the diagonal at '" + x.id + "'");
    }
    for (const auto& y : cs) {
      const Rational xy = Distance(x, y);
      if (xy.IsNegative()) throw ConfigError("candidate metric has a negative entry");
      for (const auto& z : cs) {
        if (xy > Distance(x, z) + Distance(z, y)) {
          throw ConfigError("candidate metric violates the triangle inequality at (" +
                            x.id + ", " + z.id + ", " + y.id + ")");
        }
      }
    }
  }
}

IndividualVerdict CheckIndividualFairness(const Population& population,
                                          const Classifier& g,
                                          const MetricPair& metrics) {
  metrics.M.Validate();
  metrics.m.Validate(population);
  std::vector<const Candidate*> order;
  for (const auto& c : population.candidates) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const Candidate* a, const Candidate* b) { return a->id < b->id; });
  for (const Candidate* x : order) {
    for (const Candidate* y : order) {
      if (x == y) continue;
      const Rational out = metrics.M.Distance(g.Of(x->id), g.Of(y->id));
      const Rational in = metrics.m.Distance(*x, *y);
      if (out > in) return {false, IndividualWitness{x->id, y->id, out, in}};
    }
  }
  return {};
}

}  // namespace fairgame

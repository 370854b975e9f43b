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

#include "fairgame/scm.h"

#include <algorithm>
#include <functional>
#include <set>

#include "fairgame/errors.h"

namespace fairgame {
namespace {

constexpr long long kMaxNoiseAssignments = 1'000'000;

bool VectorLess(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), ValueLess());
}

std::string Join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

}  // namespace

void CausalModel::AddExogenous(const std::string& name, Distribution<std::string> dist) {
  if (HasNode(name) || name == kDecision) throw ConfigError("duplicate node '" + name + "'");
  if (!IsProbability(dist)) {
    throw ConfigError("distribution of '" + name + "' is not a probability");
  }
  exogenous_.emplace(name, std::move(dist));
}

void CausalModel::AddEndogenous(const std::string& name, std::vector<std::string> parents,
                                std::map<std::vector<std::string>, std::string> table) {
  if (HasNode(name) || name == kDecision) throw ConfigError("duplicate node '" + name + "'");
  for (const auto& [key, v] : table) {
    if (key.size() != parents.size()) {
      throw ConfigError("table row of '" + name + "' has the wrong arity");
    }
  }
  endogenous_.emplace(name, Endogenous{std::move(parents), std::move(table)});
}

void CausalModel::SetDecision(std::vector<std::string> parents,
                              std::map<std::vector<std::string>, DecisionDistribution> table) {
  for (const auto& [key, d] : table) {
    if (key.size() != parents.size()) {
      throw ConfigError("decision table row has the wrong arity");
    }
    if (!IsProbability(d)) {
      throw ConfigError("decision distribution at (" + Join(key) + ") is not a probability");
    }
  }
  decision_ = Decision{std::move(parents), std::move(table)};
}

const std::vector<std::string>& CausalModel::DecisionParents() const {
  if (!decision_) throw ConfigError("model has no decision node D");
  return decision_->parents;
}

bool CausalModel::HasNode(const std::string& name) const {
  return exogenous_.contains(name) || endogenous_.contains(name);
}

std::vector<std::string> CausalModel::Parents(const std::string& name) const {
  if (name == kDecision) return DecisionParents();
  if (exogenous_.contains(name)) return {};
  auto it = endogenous_.find(name);
  if (it == endogenous_.end()) throw ConfigError("unknown node '" + name + "'");
  return it->second.parents;
}

bool CausalModel::HasEdge(const std::string& from, const std::string& to) const {
  const auto ps = Parents(to);
  return std::find(ps.begin(), ps.end(), from) != ps.end();
}

int CausalModel::OutDegree(const std::string& name) const {
  int n = 0;
  for (const auto& [child, node] : endogenous_) n += HasEdge(name, child) ? 1 : 0;
  if (decision_ && HasEdge(name, kDecision)) ++n;
  return n;
}

std::vector<std::string> CausalModel::Domain(const std::string& name) const {
  std::vector<std::string> out;
  if (auto it = exogenous_.find(name); it != exogenous_.end()) {
    for (const auto& [v, p] : it->second) out.push_back(v);
  } else if (auto jt = endogenous_.find(name); jt != endogenous_.end()) {
    std::set<std::string> seen;
    for (const auto& [k, v] : jt->second.table) seen.insert(v);
    out.assign(seen.begin(), seen.end());
  } else {
    throw ConfigError("unknown node '" + name + "'");
  }
  std::sort(out.begin(), out.end(), ValueLess());
  return out;
}

std::vector<std::string> CausalModel::TopologicalOrder() const {
  std::vector<std::string> order;
  std::map<std::string, int> state;  // 1 visiting, 2 done
  std::function<void(const std::string&)> visit = [&](const std::string& n) {
    if (!HasNode(n)) throw ConfigError("unknown parent node '" + n + "'");
    int& s = state[n];
    if (s == 2) return;
    if (s == 1) throw ConfigError("causal graph has a cycle through '" + n + "'");
    s = 1;
    for (const auto& p : Parents(n)) visit(p);
    state[n] = 2;
    order.push_back(n);
  };
  for (const auto& [n, d] : exogenous_) visit(n);
  for (const auto& [n, d] : endogenous_) visit(n);
  return order;
}

void CausalModel::Validate() const {
  TopologicalOrder();
  if (!HasNode(sensitive_)) throw ConfigError("sensitive node '" + sensitive_ + "' missing");
  for (const auto& f : features_) {
    if (!HasNode(f)) throw ConfigError("feature node '" + f + "' missing");
    if (f == sensitive_) throw ConfigError("sensitive node listed as a feature");
  }
  if (decision_) {
    for (const auto& p : decision_->parents) {
      if (!HasNode(p)) throw ConfigError("unknown parent '" + p + "' of D");
    }
  }
  std::vector<std::optional<std::string>> interventions{std::nullopt};
  for (const auto& a : Domain(sensitive_)) interventions.push_back(a);
  for (const auto& [u, p] : NoiseAssignments()) {
    for (const auto& i : interventions) {
      World w = Evaluate(u, i);
      if (decision_) DecisionAt(w);
    }
  }
}

std::vector<std::pair<World, Rational>> CausalModel::NoiseAssignments() const {
  std::vector<std::pair<World, Rational>> out{{World{}, Rational(1)}};
  for (const auto& [name, dist] : exogenous_) {
    if (static_cast<long long>(out.size() * dist.size()) > kMaxNoiseAssignments) {
      throw BudgetExceeded("noise assignments",
                           static_cast<long long>(out.size() * dist.size()),
                           kMaxNoiseAssignments);
    }
    std::vector<std::pair<World, Rational>> next;
    for (const auto& [w, p] : out) {
      for (const auto& [v, q] : dist) {
        if (!q.IsPositive()) continue;
        World x = w;
        x[name] = v;
        next.emplace_back(std::move(x), p * q);
      }
    }
    out = std::move(next);
  }
  return out;
}

World CausalModel::Evaluate(const World& noise,
                            const std::optional<std::string>& intervention) const {
  World w;
  for (const auto& n : TopologicalOrder()) {
    if (intervention && n == sensitive_) {
      w[n] = *intervention;
      continue;
    }
    if (exogenous_.contains(n)) {
      auto it = noise.find(n);
      if (it == noise.end()) throw ConfigError("noise value for '" + n + "' missing");
      w[n] = it->second;
      continue;
    }
    const auto& node = endogenous_.at(n);
    std::vector<std::string> key;
    for (const auto& p : node.parents) key.push_back(w.at(p));
    auto it = node.table.find(key);
    if (it == node.table.end()) {
      throw ConfigError("structural function of '" + n + "' undefined at (" + Join(key) + ")");
    }
    w[n] = it->second;
  }
  return w;
}

const DecisionDistribution& CausalModel::DecisionAt(const World& world) const {
  std::vector<std::string> key;
  for (const auto& p : DecisionParents()) key.push_back(world.at(p));
  auto it = decision_->table.find(key);
  if (it == decision_->table.end()) {
    throw ConfigError("decision node undefined at (" + Join(key) + ")");
  }
  return it->second;
}

namespace {

bool Matches(const World& w, const World& x, const std::string& a_name,
             const std::string& a) {
  for (const auto& [k, v] : x) {
    if (w.at(k) != v) return false;
  }
  return w.at(a_name) == a;
}

}  // namespace

Rational CausalModel::Probability(const World& x, const std::string& a) const {
  Rational total;
  for (const auto& [u, p] : NoiseAssignments()) {
    if (Matches(Evaluate(u), x, sensitive_, a)) total += p;
  }
  return total;
}

DecisionDistribution CausalModel::CounterfactualOutput(const World& x, const std::string& a,
                                                       const std::string& a_prime) const {
  for (const auto& [k, v] : x) {
    if (!HasNode(k)) throw ConfigError("observed node '" + k + "' missing");
  }
  Rational total;
  DecisionDistribution out;
  for (const auto& [u, p] : NoiseAssignments()) {
    if (!Matches(Evaluate(u), x, sensitive_, a)) continue;
    total += p;
    for (const auto& [d, q] : DecisionAt(Evaluate(u, a_prime))) AddMass(out, d, p * q);
  }
  if (!total.IsPositive()) {
    throw ConfigError("conditioning event (X, A=" + a + ") has probability zero");
  }
  for (auto& [d, q] : out) q /= total;
  return out;
}

World FeatureWorld(const CausalModel& scm, const Candidate& c) {
  if (c.features.size() != scm.features().size()) {
    throw ConfigError("candidate '" + c.id + "' has " + std::to_string(c.features.size()) +
                      " features but the model has " +
                      std::to_string(scm.features().size()));
  }
  World x;
  for (std::size_t i = 0; i < c.features.size(); ++i) {
    x[scm.features()[i]] = c.features[i].ToString();
  }
  return x;
}

CausalModel AttachClassifier(const CausalModel& scm, const Population& population,
                             const Classifier& g) {
  std::map<std::vector<std::string>, DecisionDistribution> table;
  for (const auto& c : population.candidates) {
    std::vector<std::string> key;
    for (const auto& f : c.features) key.push_back(f.ToString());
    if (key.size() != scm.features().size()) FeatureWorld(scm, c);  // throws
    table[key] = g.Of(c.id);
  }
  CausalModel out = scm;
  out.SetDecision(scm.features(), std::move(table));
  return out;
}

namespace {

std::optional<CounterfactualWitness> FirstDeviation(const CausalModel& scm, const World& x,
                                                    const std::string& a) {
  const auto factual = scm.CounterfactualOutput(x, a, a);
  for (const auto& a_prime : scm.Domain(scm.sensitive())) {
    if (a_prime == a) continue;
    const auto cf = scm.CounterfactualOutput(x, a, a_prime);
    if (cf == factual) continue;
    std::set<Rational> ds;
    for (const auto& [d, p] : factual) ds.insert(d);
    for (const auto& [d, p] : cf) ds.insert(d);
    for (const auto& d : ds) {
      auto f = factual.contains(d) ? factual.at(d) : Rational(0);
      auto c = cf.contains(d) ? cf.at(d) : Rational(0);
      if (f != c) return CounterfactualWitness{x, a, a_prime, d, f, c};
    }
  }
  return std::nullopt;
}

}  // namespace

CounterfactualVerdict CheckCounterfactualFairness(const CausalModel& scm) {
  scm.Validate();
  auto less = [](const std::pair<std::vector<std::string>, std::string>& l,
                 const std::pair<std::vector<std::string>, std::string>& r) {
    if (VectorLess(l.first, r.first)) return true;
    if (VectorLess(r.first, l.first)) return false;
    return ValueLess()(l.second, r.second);
  };
  std::set<std::pair<std::vector<std::string>, std::string>, decltype(less)> cases(less);
  for (const auto& [u, p] : scm.NoiseAssignments()) {
    World w = scm.Evaluate(u);
    std::vector<std::string> xs;
    for (const auto& f : scm.features()) xs.push_back(w.at(f));
    cases.insert({xs, w.at(scm.sensitive())});
  }
  for (const auto& [xs, a] : cases) {
    World x;
    for (std::size_t i = 0; i < xs.size(); ++i) x[scm.features()[i]] = xs[i];
    if (auto w = FirstDeviation(scm, x, a)) return {false, std::move(w)};
  }
  return {};
}

CounterfactualVerdict CheckCounterfactualFairness(const CausalModel& scm,
                                                  const Population& population,
                                                  const Classifier& g) {
  CausalModel model = AttachClassifier(scm, population, g);
  model.Validate();
  std::vector<const Candidate*> order;
  for (const auto& c : population.candidates) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const Candidate* l, const Candidate* r) { return l->id < r->id; });
  for (const Candidate* c : order) {
    const World x = FeatureWorld(model, *c);
    for (const auto& a : model.Domain(model.sensitive())) {
      if (!model.Probability(x, a).IsPositive()) continue;
      if (auto w = FirstDeviation(model, x, a)) return {false, std::move(w)};
    }
  }
  return {};
}

bool CheckNoTasteBased(const CausalModel& scm) {
  return !scm.HasEdge(scm.sensitive(), CausalModel::kDecision);
}

}  // namespace fairgame

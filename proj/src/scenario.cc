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


#include "fairgame/scenario.h"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <numeric>
#include <random>
#include <set>

#include "fairgame/errors.h"

namespace fairgame {
namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

void CheckKeys(const Json& obj, const std::string& path,
               std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) Fail(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) Fail(path + "." + key, "unknown field");
  }
}

std::string Sub(const std::string& path, const std::string& key) { return path + "." + key; }
std::string At(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

Rational Rat(const Json& v, const std::string& path) {
  if (!v.is_string()) Fail(path, "rationals are written as \"p/q\" strings");
  try {
    return Rational::Parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    Fail(path, e.what());
  }
}

std::string Str(const Json& v, const std::string& path) {
  if (!v.is_string()) Fail(path, "expected a string");
  return v.get<std::string>();
}

long long Int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) Fail(path, "expected an integer");
  return v.get<long long>();
}

const Json& Need(const Json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) Fail(Sub(path, key), "missing");
  return obj.at(key);
}

std::vector<Rational> RatList(const Json& v, const std::string& path) {
  if (!v.is_array()) Fail(path, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(Rat(v[i], At(path, i)));
  return out;
}

std::vector<std::string> StrList(const Json& v, const std::string& path) {
  if (!v.is_array()) Fail(path, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(Str(v[i], At(path, i)));
  return out;
}

Rational InRange(const Json& v, const std::string& path) {
  Rational r = Rat(v, path);
  if (r < Rational(0) || r > Rational(3)) Fail(path, r.ToString() + " must lie in [0,3]");
  return r;
}

DecisionDistribution Dist(const Json& v, const std::string& path) {
  if (!v.is_object() || v.empty()) Fail(path, "expected a nonempty {decision: probability} map");
  DecisionDistribution d;
  for (const auto& [k, p] : v.items()) {
    const std::string sub = Sub(path, k);
    Rational z;
    try {
      z = Rational::Parse(k);
    } catch (const std::invalid_argument& e) {
      Fail(sub, e.what());
    }
    if (z < Rational(0) || z > Rational(3)) Fail(sub, "decision must lie in [0,3]");
    Rational mass = Rat(p, sub);
    if (mass.IsNegative()) Fail(sub, "negative probability");
    AddMass(d, z, mass);
  }
  if (!IsProbability(d)) Fail(path, "probabilities do not sum to 1");
  return d;
}

// Either a bare rational or {"default": r, "by_candidate": {id: r}}.
void PerCandidate(const Json& v, const std::string& path, Rational& def,
                  std::map<std::string, Rational>& by, bool range) {
  auto one = [&](const Json& x, const std::string& p) { return range ? InRange(x, p) : Rat(x, p); };
  if (v.is_object()) {
    CheckKeys(v, path, {"default", "by_candidate"});
    if (v.contains("default")) def = one(v["default"], Sub(path, "default"));
    if (v.contains("by_candidate")) {
      const Json& m = v["by_candidate"];
      if (!m.is_object()) Fail(Sub(path, "by_candidate"), "expected an object");
      for (const auto& [id, x] : m.items()) by[id] = one(x, Sub(Sub(path, "by_candidate"), id));
    }
  } else {
    def = one(v, path);
  }
}

MarketSpec ParseMarket(const Json& m, const std::string& path, std::string& grid_label) {
  CheckKeys(m, path, {"grid_step", "offer_grid", "market_grid", "firm_outside",
                      "candidate_outside", "surplus", "need_penalty"});
  MarketSpec spec;
  if (m.contains("grid_step") == m.contains("offer_grid")) {
    Fail(path, "give exactly one of grid_step and offer_grid");
  }
  if (m.contains("grid_step")) {
    const std::string p = Sub(path, "grid_step");
    const Rational step = Rat(m["grid_step"], p);
    try {
      spec.offer_grid = MarketSpec::GridFromStep(step);
    } catch (const ConfigError& e) {
      Fail(p, e.what());
    }
    grid_label = step.ToString();
  } else {
    spec.offer_grid = RatList(m["offer_grid"], Sub(path, "offer_grid"));
    grid_label = "explicit";
  }
  if (m.contains("market_grid")) {
    spec.market_grid = RatList(m["market_grid"], Sub(path, "market_grid"));
  }
  if (m.contains("firm_outside")) {
    spec.firm_outside = InRange(m["firm_outside"], Sub(path, "firm_outside"));
  }
  if (m.contains("candidate_outside")) {
    PerCandidate(m["candidate_outside"], Sub(path, "candidate_outside"),
                 spec.default_candidate_outside, spec.candidate_outside, true);
  }
  if (m.contains("surplus")) {
    PerCandidate(m["surplus"], Sub(path, "surplus"), spec.default_surplus, spec.surplus, false);
  }
  if (m.contains("need_penalty")) spec.need_penalty = Rat(m["need_penalty"], Sub(path, "need_penalty"));
  try {
    spec.Validate();
  } catch (const ConfigError& e) {
    Fail(path, e.what());
  }
  return spec;
}

Population ParsePopulation(const Json& p, const std::string& path) {
  CheckKeys(p, path, {"candidates"});
  const std::string cpath = Sub(path, "candidates");
  const Json& list = Need(p, "candidates", path);
  if (!list.is_array() || list.empty()) Fail(cpath, "expected a nonempty array");
  std::vector<Candidate> cs;
  int weighted = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string cp = At(cpath, i);
    const Json& c = list[i];
    CheckKeys(c, cp, {"id", "features", "sensitive", "label", "weight"});
    Candidate cand{Str(Need(c, "id", cp), Sub(cp, "id")),
                   RatList(Need(c, "features", cp), Sub(cp, "features")),
                   Str(Need(c, "sensitive", cp), Sub(cp, "sensitive")),
                   Str(Need(c, "label", cp), Sub(cp, "label")), Rational(0)};
    if (c.contains("weight")) {
      cand.weight = Rat(c["weight"], Sub(cp, "weight"));
      ++weighted;
    }
    cs.push_back(std::move(cand));
  }
  if (weighted != 0 && weighted != static_cast<int>(cs.size())) {
    Fail(cpath, "give a weight for every candidate or for none");
  }
  Population pop = weighted == 0 ? Population::Uniform(std::move(cs)) : Population{std::move(cs)};
  try {
    pop.Validate();
  } catch (const ConfigError& e) {
    Fail(path, e.what());
  }
  return pop;
}

GameSpec ParseGame(const Json& g, const std::string& path) {
  CheckKeys(g, path, {"kind", "candidate", "cap", "allowed_offers"});
  GameSpec spec;
  const std::string kind = Str(Need(g, "kind", path), Sub(path, "kind"));
  if (kind == "bilateral") {
    spec.kind = GameSpec::Kind::kBilateral;
  } else if (kind == "simultaneous") {
    spec.kind = GameSpec::Kind::kSimultaneous;
  } else if (kind == "capped") {
    spec.kind = GameSpec::Kind::kCapped;
    spec.cap = static_cast<int>(Int(Need(g, "cap", path), Sub(path, "cap")));
  } else {
    Fail(Sub(path, "kind"), "expected bilateral, simultaneous or capped");
  }
  if (g.contains("candidate")) spec.candidate = Str(g["candidate"], Sub(path, "candidate"));
  if (g.contains("allowed_offers")) {
    spec.allowed_offers = RatList(g["allowed_offers"], Sub(path, "allowed_offers"));
  }
  return spec;
}

FeatureMap ParseFeatureMap(const Json& f, const std::string& path) {
  if (f.is_string()) {
    const std::string s = f.get<std::string>();
    if (s == "decision") return FeatureMap::Decision();
    if (s == "label") return FeatureMap::Label();
    Fail(path, "expected \"decision\", \"label\", {\"constant\": c} or {\"table\": ...}");
  }
  CheckKeys(f, path, {"constant", "table"});
  if (f.contains("constant")) return FeatureMap::Constant(Str(f["constant"], Sub(path, "constant")));
  const std::string tp = Sub(path, "table");
  const Json& t = Need(f, "table", path);
  if (!t.is_array()) Fail(tp, "expected [[decision, label, value], ...]");
  std::map<std::pair<Rational, std::string>, std::string> table;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::string rp = At(tp, i);
    if (!t[i].is_array() || t[i].size() != 3) Fail(rp, "expected [decision, label, value]");
    auto key = std::make_pair(Rat(t[i][0], At(rp, 0)), Str(t[i][1], At(rp, 1)));
    if (!table.emplace(key, Str(t[i][2], At(rp, 2))).second) Fail(rp, "duplicate entry");
  }
  return FeatureMap::Table(std::move(table));
}

std::map<std::pair<std::string, std::string>, Rational> PairTable(const Json& t,
                                                                  const std::string& path) {
  if (!t.is_array()) Fail(path, "expected [[a, b, distance], ...]");
  std::map<std::pair<std::string, std::string>, Rational> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::string rp = At(path, i);
    if (!t[i].is_array() || t[i].size() != 3) Fail(rp, "expected [a, b, distance]");
    out[{Str(t[i][0], At(rp, 0)), Str(t[i][1], At(rp, 1))}] = Rat(t[i][2], At(rp, 2));
  }
  return out;
}

MetricPair ParseMetrics(const Json& c, const std::string& path, const Population& pop) {
  MetricPair mp;
  if (c.contains("output_metric")) {
    const std::string p = Sub(path, "output_metric");
    const Json& o = c["output_metric"];
    if (o.is_string() && o.get<std::string>() == "total_variation") {
      mp.M.kind = OutputMetric::Kind::kTotalVariation;
    } else {
      CheckKeys(o, p, {"table"});
      mp.M.kind = OutputMetric::Kind::kTable;
      mp.M.table = PairTable(Need(o, "table", p), Sub(p, "table"));
    }
  }
  if (c.contains("candidate_metric")) {
    const std::string p = Sub(path, "candidate_metric");
    const Json& m = c["candidate_metric"];
    CheckKeys(m, p, {"scaled_l1", "table"});
    if (m.contains("scaled_l1") == m.contains("table")) Fail(p, "give scaled_l1 or table");
    if (m.contains("scaled_l1")) {
      mp.m.kind = CandidateMetric::Kind::kScaledL1;
      mp.m.scale = Rat(m["scaled_l1"], Sub(p, "scaled_l1"));
    } else {
      mp.m.kind = CandidateMetric::Kind::kTable;
      mp.m.table = PairTable(m["table"], Sub(p, "table"));
    }
  }
  try {
    mp.M.Validate();
    mp.m.Validate(pop);
  } catch (const ConfigError& e) {
    Fail(path, e.what());
  }
  return mp;
}

CausalModel ParseScm(const Json& j, const std::string& path) {
  CheckKeys(j, path, {"exogenous", "endogenous", "decision", "sensitive", "features"});
  CausalModel scm;
  const std::string ep = Sub(path, "exogenous");
  const Json& ex = Need(j, "exogenous", path);
  if (!ex.is_object()) Fail(ep, "expected {name: {value: probability}}");
  try {
    for (const auto& [name, dist] : ex.items()) {
      if (!dist.is_object()) Fail(Sub(ep, name), "expected {value: probability}");
      Distribution<std::string> d;
      for (const auto& [v, p] : dist.items()) d[v] = Rat(p, Sub(Sub(ep, name), v));
      scm.AddExogenous(name, std::move(d));
    }
    if (j.contains("endogenous")) {
      const std::string np = Sub(path, "endogenous");
      const Json& en = j["endogenous"];
      if (!en.is_array()) Fail(np, "expected an array");
      for (std::size_t i = 0; i < en.size(); ++i) {
        const std::string p = At(np, i);
        CheckKeys(en[i], p, {"name", "parents", "table"});
        const Json& t = Need(en[i], "table", p);
        if (!t.is_array()) Fail(Sub(p, "table"), "expected [[[parent values], value], ...]");
        std::map<std::vector<std::string>, std::string> table;
        for (std::size_t r = 0; r < t.size(); ++r) {
          const std::string rp = At(Sub(p, "table"), r);
          if (!t[r].is_array() || t[r].size() != 2) Fail(rp, "expected [[parent values], value]");
          table[StrList(t[r][0], At(rp, 0))] = Str(t[r][1], At(rp, 1));
        }
        scm.AddEndogenous(Str(Need(en[i], "name", p), Sub(p, "name")),
                          StrList(Need(en[i], "parents", p), Sub(p, "parents")), std::move(table));
      }
    }
    if (j.contains("decision")) {
      const std::string dp = Sub(path, "decision");
      const Json& d = j["decision"];
      CheckKeys(d, dp, {"parents", "table"});
      const Json& t = Need(d, "table", dp);
      if (!t.is_array()) Fail(Sub(dp, "table"), "expected [[[parent values], distribution], ...]");
      std::map<std::vector<std::string>, DecisionDistribution> table;
      for (std::size_t r = 0; r < t.size(); ++r) {
        const std::string rp = At(Sub(dp, "table"), r);
        if (!t[r].is_array() || t[r].size() != 2) Fail(rp, "expected [[parent values], distribution]");
        table[StrList(t[r][0], At(rp, 0))] = Dist(t[r][1], At(rp, 1));
      }
      scm.SetDecision(StrList(Need(d, "parents", dp), Sub(dp, "parents")), std::move(table));
    }
    if (j.contains("sensitive")) scm.SetSensitive(Str(j["sensitive"], Sub(path, "sensitive")));
    if (j.contains("features")) scm.SetFeatures(StrList(j["features"], Sub(path, "features")));
    scm.Validate();
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    Fail(path, what);
  }
  return scm;
}

ClassifierSpec ParseClassifier(const Json& c, const std::string& path, const Population& pop,
                               const MarketSpec& market) {
  ClassifierSpec spec;
  const std::string kind = Str(Need(c, "kind", path), Sub(path, "kind"));
  if (pop.empty()) Fail(path, "a classifier needs a population");
  if (kind == "constant") {
    CheckKeys(c, path, {"kind", "distribution"});
    spec.kind = ClassifierSpec::Kind::kConstant;
    spec.table = Classifier::Constant(pop, Dist(Need(c, "distribution", path),
                                                Sub(path, "distribution")));
  } else if (kind == "table") {
    CheckKeys(c, path, {"kind", "decisions"});
    spec.kind = ClassifierSpec::Kind::kTable;
    const std::string dp = Sub(path, "decisions");
    const Json& d = Need(c, "decisions", path);
    if (!d.is_object()) Fail(dp, "expected {candidate id: distribution}");
    for (const auto& cand : pop.candidates) {
      if (!d.contains(cand.id)) Fail(Sub(dp, cand.id), "missing");
    }
    for (const auto& [id, dist] : d.items()) {
      bool known = false;
      for (const auto& cand : pop.candidates) known = known || cand.id == id;
      if (!known) Fail(Sub(dp, id), "not a candidate");
      spec.table.decisions[id] = Dist(dist, Sub(dp, id));
    }
  } else if (kind == "constructed") {
    CheckKeys(c, path, {"kind", "construction", "f1", "f2", "decisions", "seed", "anchor",
                        "injection"});
    spec.kind = ClassifierSpec::Kind::kConstructed;
    const std::string cp = Sub(path, "construction");
    const std::string how = Str(Need(c, "construction", path), cp);
    if (how == "group_fair") {
      spec.construction = ClassifierSpec::Construction::kGroupFair;
      spec.f = ParseFeatureMap(Need(c, "f1", path), Sub(path, "f1"));
    } else if (how == "sufficiency") {
      spec.construction = ClassifierSpec::Construction::kSufficiency;
      spec.f = ParseFeatureMap(Need(c, "f2", path), Sub(path, "f2"));
    } else if (how == "constant") {
      spec.construction = ClassifierSpec::Construction::kConstant;
    } else {
      Fail(cp, "expected group_fair, sufficiency or constant");
    }
    spec.decisions = c.contains("decisions") ? RatList(c["decisions"], Sub(path, "decisions"))
                                             : market.offer_grid;
    spec.seed.strategy = Dist(Need(c, "seed", path), Sub(path, "seed"));
    spec.seed.anchor = c.contains("anchor") ? Str(c["anchor"], Sub(path, "anchor"))
                                            : pop.candidates.front().id;
    if (c.contains("injection")) {
      const std::string ip = Sub(path, "injection");
      if (!c["injection"].is_object()) Fail(ip, "expected {label: value}");
      std::map<std::string, std::string> inj;
      for (const auto& [y, z] : c["injection"].items()) inj[y] = Str(z, Sub(ip, y));
      spec.injection = std::move(inj);
    }
  } else {
    Fail(Sub(path, "kind"), "expected constant, table or constructed");
  }
  return spec;
}

OutsideOptionBeliefs ParseExplicitBeliefs(const Json& b, const std::string& path) {
  CheckKeys(b, path, {"o_f_f", "o_f_x", "o_x_x", "o_x_f", "firm_threshold", "candidate_offer"});
  OutsideOptionBeliefs out;
  out.o_f_f = InRange(Need(b, "o_f_f", path), Sub(path, "o_f_f"));
  out.o_f_x = InRange(Need(b, "o_f_x", path), Sub(path, "o_f_x"));
  out.o_x_x = InRange(Need(b, "o_x_x", path), Sub(path, "o_x_x"));
  out.o_x_f = b.contains("o_x_f") ? InRange(b["o_x_f"], Sub(path, "o_x_f")) : Rational(3);
  const Json& t = Need(b, "firm_threshold", path);
  if (!t.is_null()) out.firm_threshold = InRange(t, Sub(path, "firm_threshold"));
  out.candidate_offer = InRange(Need(b, "candidate_offer", path), Sub(path, "candidate_offer"));
  return out;
}

bool Known(const std::string& type) {
  const auto& types = CheckTypes();
  return std::find(types.begin(), types.end(), type) != types.end();
}

bool NeedsClassifier(const std::string& type) {
  static const std::set<std::string> kTypes{
      "statistical_parity", "equalized_odds",   "sufficiency", "group_fairness",
      "individual_fairness", "statistical_discrimination", "becker",
      "blatant_unfairness", "construct"};
  return kTypes.count(type) > 0;
}

CheckSpec ParseCheck(const Json& c, const std::string& path, const Scenario& s) {
  CheckSpec spec;
  spec.type = Str(Need(c, "type", path), Sub(path, "type"));
  if (!Known(spec.type)) Fail(Sub(path, "type"), "unknown check type '" + spec.type + "'");
  spec.id = c.contains("id") ? Str(c["id"], Sub(path, "id")) : spec.type;
  const std::string& t = spec.type;
  if (t == "group_fairness") {
    CheckKeys(c, path, {"id", "type", "f1", "f2"});
    spec.group = {spec.id, ParseFeatureMap(Need(c, "f1", path), Sub(path, "f1")),
                  ParseFeatureMap(Need(c, "f2", path), Sub(path, "f2"))};
  } else if (t == "individual_fairness") {
    CheckKeys(c, path, {"id", "type", "output_metric", "candidate_metric"});
    spec.metrics = ParseMetrics(c, path, s.population);
  } else if (t == "counterfactual" || t == "no_taste_based") {
    CheckKeys(c, path, {"id", "type", "scm"});
    spec.scm = ParseScm(Need(c, "scm", path), Sub(path, "scm"));
  } else if (t == "enumerate" || t == "detect_blatant") {
    CheckKeys(c, path, {"id", "type", "game", "concept", "jobs"});
    if (c.contains("jobs")) {
      if (t != "detect_blatant") Fail(Sub(path, "jobs"), "only detect_blatant filters by jobs");
      spec.jobs = static_cast<int>(Int(c["jobs"], Sub(path, "jobs")));
    }
    if (c.contains("game")) spec.game = ParseGame(c["game"], Sub(path, "game"));
  } else if (t == "blatant_unfairness") {
    CheckKeys(c, path, {"id", "type", "concept"});
  } else {
    CheckKeys(c, path, {"id", "type"});
  }
  if (c.contains("concept")) {
    try {
      spec.solution_concept = ParseConcept(Str(c["concept"], Sub(path, "concept")));
    } catch (const std::invalid_argument& e) {
      Fail(Sub(path, "concept"), e.what());
    }
  }
  if (NeedsClassifier(t) && s.classifier.kind == ClassifierSpec::Kind::kNone) {
    Fail(path, "check '" + spec.id + "' needs a classifier");
  }
  if ((t == "sce" || t == "nash") && !s.profile) Fail(path, "check '" + spec.id + "' needs a profile");
  if (t == "construct" && s.classifier.kind != ClassifierSpec::Kind::kConstructed) {
    Fail(path, "construct needs a constructed classifier");
  }
  return spec;
}

}  // namespace

const std::vector<std::string>& CheckTypes() {
  static const std::vector<std::string> kTypes{
      "statistical_parity", "equalized_odds", "sufficiency", "group_fairness",
      "individual_fairness", "counterfactual", "no_taste_based",
      "statistical_discrimination", "potential_surplus", "becker", "blatant_unfairness",
      "sce", "nash", "enumerate", "detect_blatant", "construct"};
  return kTypes;
}

Scenario ParseScenario(const Json& doc) {
  const std::string root = "scenario";
  CheckKeys(doc, root, {"schema_version", "name", "market", "population", "game", "classifier",
                        "beliefs", "profile", "concept", "belief_space", "tie_break", "budget",
                        "response", "checks"});
  const Json& version = Need(doc, "schema_version", root);
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    Fail("schema_version", "expected " + std::to_string(kSchemaVersion));
  }
  Scenario s;
  s.source = doc;
  s.name = doc.contains("name") ? Str(doc["name"], "name") : "scenario";
  s.market = ParseMarket(Need(doc, "market", root), "market", s.grid_label);
  if (doc.contains("population")) s.population = ParsePopulation(doc["population"], "population");
  if (doc.contains("game")) s.game = ParseGame(doc["game"], "game");
  for (const auto& [id, r] : s.market.candidate_outside) {
    if (id != s.game.candidate && !s.population.empty()) {
      bool known = false;
      for (const auto& c : s.population.candidates) known = known || c.id == id;
      if (!known) Fail("market.candidate_outside.by_candidate." + id, "not a candidate");
    }
  }
  if (doc.contains("concept")) {
    try {
      s.solution_concept = ParseConcept(Str(doc["concept"], "concept"));
    } catch (const std::invalid_argument& e) {
      Fail("concept", e.what());
    }
  }
  if (doc.contains("belief_space") && Str(doc["belief_space"], "belief_space") != "default") {
    Fail("belief_space", "only \"default\" is available");
  }
  if (doc.contains("tie_break") && Str(doc["tie_break"], "tie_break") != "max_min") {
    Fail("tie_break", "only \"max_min\" is available");
  }
  if (doc.contains("budget")) {
    s.budget = Int(doc["budget"], "budget");
    if (s.budget <= 0) Fail("budget", "must be positive");
  }
  if (doc.contains("response")) {
    CheckKeys(doc["response"], "response", {"accept_threshold"});
    if (doc["response"].contains("accept_threshold")) {
      s.accept_threshold = InRange(doc["response"]["accept_threshold"], "response.accept_threshold");
    }
  }
  if (doc.contains("classifier")) {
    s.classifier = ParseClassifier(doc["classifier"], "classifier", s.population, s.market);
  }
  if (doc.contains("profile")) {
    CheckKeys(doc["profile"], "profile", {"offer", "threshold"});
    ProfileSpec p;
    p.offer = InRange(Need(doc["profile"], "offer", "profile"), "profile.offer");
    const Json& t = Need(doc["profile"], "threshold", "profile");
    if (!t.is_null()) p.threshold = InRange(t, "profile.threshold");
    s.profile = p;
  }
  if (doc.contains("beliefs")) {
    const Json& b = doc["beliefs"];
    if (b.is_string()) {
      const std::string preset = b.get<std::string>();
      if (preset == "prop1") {
        s.beliefs.kind = BeliefsSpec::Kind::kProp1;
      } else if (preset == "prop2") {
        s.beliefs.kind = BeliefsSpec::Kind::kProp2;
      } else {
        Fail("beliefs", "expected \"prop1\", \"prop2\" or an explicit object");
      }
      if (!s.profile) Fail("beliefs", "presets need a profile");
    } else {
      s.beliefs.kind = BeliefsSpec::Kind::kExplicit;
      s.beliefs.explicit_beliefs = ParseExplicitBeliefs(b, "beliefs");
    }
  }
  if (doc.contains("checks")) {
    const Json& cs = doc["checks"];
    if (!cs.is_array()) Fail("checks", "expected an array");
    std::set<std::string> ids;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      s.checks.push_back(ParseCheck(cs[i], At("checks", i), s));
      if (!ids.insert(s.checks.back().id).second) {
        Fail(At("checks", i) + ".id", "duplicate check id '" + s.checks.back().id + "'");
      }
    }
  }
  return s;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

Scenario LoadScenario(const std::string& path) { return ParseScenario(ReadJsonFile(path)); }

Classifier ResolveClassifier(const Scenario& s) {
  const ClassifierSpec& c = s.classifier;
  switch (c.kind) {
    case ClassifierSpec::Kind::kNone:
      throw ConfigError("classifier: missing");
    case ClassifierSpec::Kind::kConstant:
    case ClassifierSpec::Kind::kTable:
      return c.table;
    case ClassifierSpec::Kind::kConstructed:
      break;
  }
  switch (c.construction) {
    case ClassifierSpec::Construction::kGroupFair:
      return ConstructGroupFairBlatant(c.f, c.decisions, s.population, c.seed);
    case ClassifierSpec::Construction::kSufficiency:
      return ConstructSufficiencyBlatant(c.f, c.decisions, s.population, c.seed, c.injection)
          .classifier;
    case ClassifierSpec::Construction::kConstant:
      break;
  }
  return ConstructConstant(s.population, c.seed.strategy);
}

HiringGame BuildGame(const Scenario& s, const GameSpec& g) {
  switch (g.kind) {
    case GameSpec::Kind::kBilateral:
      return BuildBilateralMarket(s.market, g.candidate);
    case GameSpec::Kind::kSimultaneous:
      if (s.population.empty()) throw ConfigError("game: simultaneous market needs a population");
      return BuildSimultaneousMarket(s.market, s.population, s.budget);
    case GameSpec::Kind::kCapped:
      break;
  }
  if (s.population.empty()) throw ConfigError("game: capped market needs a population");
  return ApplyJobCap(s.market, s.population, g.cap, g.allowed_offers, s.budget);
}

Json ToJson(const Rational& r) { return r.ToString(); }

Json ToJson(const DecisionDistribution& d) {
  Json j = Json::object();
  for (const auto& [z, p] : d) j[z.ToString()] = p.ToString();
  return j;
}

Json ToJson(const Classifier& g) {
  Json j = Json::object();
  for (const auto& [id, d] : g.decisions) j[id] = ToJson(d);
  return j;
}

Json CorollaryScenario(const Rational& grid_step, int group_count, std::optional<unsigned> seed) {
  if (group_count < 1) throw ConfigError("group_count: must be at least 1");
  const auto grid = MarketSpec::GridFromStep(grid_step);
  if (std::find(grid.begin(), grid.end(), Rational(3, 2)) == grid.end()) {
    throw ConfigError("grid_step: the grid must contain 3/2");
  }
  constexpr int kCandidates = 6;
  std::vector<int> order(kCandidates);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> groups(kCandidates);
  for (int i = 0; i < kCandidates; ++i) groups[i] = i % group_count;
  if (seed) {
    std::mt19937 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::shuffle(groups.begin(), groups.end(), rng);
  }
  Json candidates = Json::array();
  Json x_dist = Json::object();
  for (int k = 0; k < kCandidates; ++k) {
    const int i = order[k];
    candidates.push_back({{"id", "x" + std::to_string(i)},
                          {"features", {std::to_string(i)}},
                          {"sensitive", "g" + std::to_string(groups[k])},
                          {"label", "c"}});
    x_dist[std::to_string(i)] = "1/6";
  }
  Json a_dist = Json::object();
  for (int g = 0; g < group_count; ++g) {
    a_dist["g" + std::to_string(g)] = Rational(1, group_count).ToString();
  }
  Json scm = {{"exogenous", {{"A", a_dist}, {"X", x_dist}}},
              {"sensitive", "A"},
              {"features", {"X"}}};
  return {
      {"schema_version", kSchemaVersion},
      {"name", "constant-classifier"},
      {"market", {{"grid_step", grid_step.ToString()},
                  {"firm_outside", "0"},
                  {"candidate_outside", "0"},
                  {"surplus", "1"}}},
      {"population", {{"candidates", candidates}}},
      {"classifier", {{"kind", "constant"}, {"distribution", {{"0", "1"}}}}},
      {"concept", "sce"},
      {"checks",
       {{{"type", "statistical_parity"}},
        {{"type", "equalized_odds"}},
        {{"type", "sufficiency"}},
        {{"type", "individual_fairness"},
         {"output_metric", "total_variation"},
         {"candidate_metric", {{"scaled_l1", "1"}}}},
        {{"type", "counterfactual"}, {"scm", scm}},
        {{"type", "no_taste_based"}, {"scm", scm}},
        {{"type", "statistical_discrimination"}},
        {{"type", "becker"}},
        {{"type", "blatant_unfairness"}}}}};
}

}  // namespace fairgame

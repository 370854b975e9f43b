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


#include "fairgame/report.h"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "fairgame/blatant.h"
#include "fairgame/errors.h"

namespace fairgame {
namespace {

Json Rationals(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const auto& r : v) j.push_back(r.ToString());
  return j;
}

Json DescribeStrategy(const HiringGame& hg, PlayerId player, const Strategy& s) {
  if (player == kFirm) {
    if (const auto* pure = std::get_if<PureStrategy>(&s)) {
      auto offers = hg.FirmOffersOf(*pure);
      return offers ? Rationals(*offers) : Json("unknown");
    }
    if (const auto* mixed = std::get_if<MixedStrategy>(&s)) {
      Json j = Json::array();
      for (const auto& [p, w] : mixed->support) {
        auto offers = hg.FirmOffersOf(p);
        j.push_back({{"offers", offers ? Rationals(*offers) : Json("unknown")},
                     {"probability", w.ToString()}});
      }
      return j;
    }
    return "behavior";
  }
  const int k = player - 1;
  const auto* pure = std::get_if<PureStrategy>(&s);
  if (!pure) return "mixed";
  Json accepts = Json::array();
  for (const auto& z : hg.OffersTo(k)) {
    if (hg.Accepts(k, *pure, z)) accepts.push_back(z.ToString());
  }
  return accepts;
}

// Candidate ids in `hg` may be generic; `ids` renames them.
Json Describe(const HiringGame& hg, const StrategyProfile& p, const std::vector<Rational>& payoffs,
              const std::vector<std::string>& ids = {}) {
  Json cands = Json::array();
  for (int k = 0; k < hg.NumCandidates(); ++k) {
    const PlayerId pl = hg.CandidatePlayer(k);
    cands.push_back({{"id", ids.empty() ? hg.candidates()[k] : ids[k]},
                     {"accepts", DescribeStrategy(hg, pl, p.strategies.at(pl))}});
  }
  return {{"firm", DescribeStrategy(hg, kFirm, p.strategies.at(kFirm))},
          {"candidates", cands},
          {"payoffs", Rationals(payoffs)}};
}

std::string PlayerName(const HiringGame& hg, PlayerId p, const std::vector<std::string>& ids = {}) {
  if (p == kFirm) return "firm";
  return ids.empty() ? hg.candidates()[p - 1] : ids[p - 1];
}

Json WitnessJson(const HiringGame& hg, const FailureWitness& w) {
  static const char* kKinds[] = {"profitable_deviation", "incorrect_belief", "no_belief_in_space"};
  Json j = {{"kind", kKinds[static_cast<int>(w.kind)]},
            {"player", PlayerName(hg, w.player)},
            {"current_value", w.current_value.ToString()},
            {"deviation_value", w.deviation_value.ToString()},
            {"message", w.message}};
  if (w.deviation) j["deviation"] = DescribeStrategy(hg, w.player, *w.deviation);
  if (w.infoset >= 0) j["infoset"] = hg.game().infoset(w.infoset).name;
  return j;
}

Json BeliefsJson(const OutsideOptionBeliefs& b) {
  return {{"o_f_f", b.o_f_f.ToString()},
          {"o_f_x", b.o_f_x.ToString()},
          {"o_x_x", b.o_x_x.ToString()},
          {"o_x_f", b.o_x_f.ToString()},
          {"firm_threshold", b.firm_threshold ? Json(b.firm_threshold->ToString()) : Json()},
          {"candidate_offer", b.candidate_offer.ToString()}};
}

Json StatisticJson(const GroupStatistic& st) {
  Json j = Json::object();
  for (const auto& [g, v] : st.by_group) j[g] = v ? Json(v->ToString()) : Json();
  return j;
}

// The first two non-vacuous groups with different values.
Json StatisticWitness(const GroupStatistic& st) {
  const std::pair<const std::string, std::optional<Rational>>* first = nullptr;
  for (const auto& entry : st.by_group) {
    if (!entry.second) continue;
    if (!first) {
      first = &entry;
    } else if (*entry.second != *first->second) {
      return {{"group", first->first}, {"value", first->second->ToString()},
              {"other_group", entry.first}, {"other_value", entry.second->ToString()}};
    }
  }
  return nullptr;
}

class Auditor {
 public:
  explicit Auditor(const Scenario& s) : s_(s) {}

  CheckRecord Run(const CheckSpec& c) {
    CheckRecord r;
    r.id = c.id;
    r.type = c.type;
    r.target = "classifier";
    r.grid = s_.grid_label;
    r.details = Json::object();
    const SolutionConcept concept_used = c.solution_concept.value_or(s_.solution_concept);
    const std::string& t = c.type;
    if (t == "statistical_parity" || t == "equalized_odds" || t == "sufficiency" ||
        t == "group_fairness") {
      GroupFairnessSpec spec = t == "statistical_parity" ? GroupFairnessSpec::StatisticalParity()
                               : t == "equalized_odds"   ? GroupFairnessSpec::EqualizedOdds()
                               : t == "sufficiency"      ? GroupFairnessSpec::Sufficiency()
                                                         : c.group;
      auto v = CheckGroupFairness(s_.population, G(), spec);
      Verdict(r, v.holds);
      if (v.witness) {
        r.witness = {{"group", v.witness->group},
                     {"f2_value", v.witness->f2_value},
                     {"f1_value", v.witness->f1_value},
                     {"in_group", v.witness->in_group.ToString()},
                     {"overall", v.witness->overall.ToString()}};
      }
    } else if (t == "individual_fairness") {
      auto v = CheckIndividualFairness(s_.population, G(), c.metrics);
      Verdict(r, v.holds);
      if (v.witness) {
        r.witness = {{"x", v.witness->x},
                     {"y", v.witness->y},
                     {"output_distance", v.witness->output_distance.ToString()},
                     {"candidate_distance", v.witness->candidate_distance.ToString()}};
      }
    } else if (t == "counterfactual") {
      r.target = c.scm->HasDecision() ? "scm" : "classifier";
      auto v = c.scm->HasDecision() ? CheckCounterfactualFairness(*c.scm)
                                    : CheckCounterfactualFairness(*c.scm, s_.population, G());
      Verdict(r, v.holds);
      if (v.witness) {
        r.witness = {{"x", v.witness->x},
                     {"a", v.witness->a},
                     {"a_prime", v.witness->a_prime},
                     {"decision", v.witness->decision.ToString()},
                     {"factual", v.witness->factual.ToString()},
                     {"counterfactual", v.witness->counterfactual.ToString()}};
      }
    } else if (t == "no_taste_based") {
      r.target = c.scm->HasDecision() ? "scm" : "classifier";
      CausalModel model = c.scm->HasDecision() ? *c.scm : AttachClassifier(*c.scm, s_.population, G());
      const bool holds = CheckNoTasteBased(model);
      Verdict(r, holds);
      r.details["sensitive_out_degree"] = model.OutDegree(model.sensitive());
      if (!holds) r.witness = {{"edge", {model.sensitive(), CausalModel::kDecision}}};
    } else if (t == "statistical_discrimination" || t == "potential_surplus" || t == "becker") {
      r.target = t == "potential_surplus" ? "population" : "outcome";
      GroupStatistic st = t == "statistical_discrimination"
                              ? StatisticalDiscriminationCheck(s_.population, Outcome(), s_.market)
                          : t == "becker" ? BeckerTest(s_.population, Outcome(), s_.market)
                                          : PotentialSurplusCheck(s_.population, s_.market);
      Verdict(r, st.holds);
      r.details["by_group"] = StatisticJson(st);
      if (!st.holds) r.witness = StatisticWitness(st);
    } else if (t == "blatant_unfairness") {
      Provenance(r, concept_used);
      BlatantForClassifier(r, concept_used);
    } else if (t == "sce" || t == "nash") {
      r.target = "profile";
      Provenance(r, t == "sce" ? SolutionConcept::kSce : SolutionConcept::kNash);
      ProfileCheck(r, t == "sce");
    } else if (t == "enumerate" || t == "detect_blatant") {
      r.target = "game";
      Provenance(r, concept_used);
      const GameSpec& gs = c.game.value_or(s_.game);
      HiringGame hg = BuildGame(s_, gs);
      auto set = EnumerateEquilibriumSet(hg.game(), concept_used, hg.DefaultEnumeration(s_.budget),
                                         r.belief_space);
      if (t == "enumerate") {
        Json listing = Json::array();
        for (const auto& m : set.members) listing.push_back(Describe(hg, m.profile, m.payoffs));
        r.verdict = "listed";
        r.details["count"] = set.members.size();
        listing_ = std::move(listing);
      } else {
        DetectBlatant(r, hg, set, c.jobs);
      }
    } else if (t == "construct") {
      Construct(r);
    }
    return r;
  }

  Json TakeListing() { return std::exchange(listing_, Json()); }

 private:
  static void Verdict(CheckRecord& r, bool holds) { r.verdict = holds ? "pass" : "fail"; }

  void Provenance(CheckRecord& r, SolutionConcept c) const {
    r.solution_concept = ConceptName(c);
    r.belief_space = c == SolutionConcept::kSce ? "default" : "";
  }

  const Classifier& G() {
    if (!g_) {
      g_ = ResolveClassifier(s_);
      g_->Validate(s_.population);
    }
    return *g_;
  }

  // Each candidate accepts offers at or above the response threshold.
  EquilibriumOutcome Outcome() {
    EquilibriumOutcome out;
    for (const auto& cand : s_.population.candidates) {
      Rational p;
      for (const auto& [z, w] : G().Of(cand.id)) {
        if (z >= s_.accept_threshold) p += w;
      }
      out.match_probability[cand.id] = p;
    }
    return out;
  }

  struct Bilateral {
    std::unique_ptr<HiringGame> game;
    EquilibriumSet set;
  };

  Bilateral& BilateralFor(const std::string& id, SolutionConcept c) {
    const Rational o_x = s_.market.OutsideOf(id);
    const std::string key = ConceptName(c) + "|" + o_x.ToString();
    auto it = bilateral_.find(key);
    if (it != bilateral_.end()) return it->second;
    MarketSpec spec = s_.market;
    spec.candidate_outside.clear();
    spec.default_candidate_outside = o_x;
    auto hg = std::make_unique<HiringGame>(BuildBilateralMarket(spec, "x"));
    auto set = EnumerateEquilibriumSet(hg->game(), c, hg->DefaultEnumeration(s_.budget),
                                       c == SolutionConcept::kSce ? "default" : "");
    return bilateral_.emplace(key, Bilateral{std::move(hg), std::move(set)}).first->second;
  }

  void BlatantForClassifier(CheckRecord& r, SolutionConcept c) {
    std::vector<const Candidate*> order;
    for (const auto& cand : s_.population.candidates) order.push_back(&cand);
    std::sort(order.begin(), order.end(),
              [](const Candidate* a, const Candidate* b) { return a->id < b->id; });
    Json per = Json::object();
    r.verdict = "not_flagged";
    for (const Candidate* cand : order) {
      Bilateral& b = BilateralFor(cand->id, c);
      const auto& seed = G().Of(cand->id);
      try {
        SeedEvidence ev = ValidateUnfairSeed(*b.game, b.set, seed);
        per[cand->id] = "flagged";
        if (r.verdict != "flagged") {
          r.verdict = "flagged";
          const auto& w = b.set.members[ev.witness];
          r.witness = {{"candidate", cand->id},
                       {"seed", DistributionKey(seed)},
                       {"flagged_player", PlayerName(*b.game, ev.flagged_player, {cand->id})},
                       {"equilibrium", Describe(*b.game, ev.profile,
                                                EvaluateProfile(b.game->game(), ev.profile),
                                                {cand->id})},
                       {"witness", Describe(*b.game, w.profile, w.payoffs, {cand->id})}};
        }
      } catch (const HypothesisFailure& e) {
        per[cand->id] = e.what();
      }
    }
    r.details["by_candidate"] = per;
  }

  void ProfileCheck(CheckRecord& r, bool sce) {
    if (s_.game.kind != GameSpec::Kind::kBilateral) {
      throw ConfigError("checks." + r.id + ": profile checks need a bilateral game");
    }
    HiringGame hg = BuildGame(s_, s_.game);
    const ProfileSpec& ps = *s_.profile;
    StrategyProfile p = hg.Profile(hg.FirmOffers(ps.offer), {hg.CandidateThreshold(0, ps.threshold)},
                                   hg.TrueMarket());
    r.details["payoffs"] = Rationals(EvaluateProfile(hg.game(), p));
    if (!sce) {
      auto v = CheckNash(hg.game(), p);
      Verdict(r, v.holds);
      if (v.witness) r.witness = WitnessJson(hg, *v.witness);
      return;
    }
    const std::pair<Rational, Rational> market{s_.market.firm_outside,
                                               s_.market.OutsideOf(s_.game.candidate)};
    std::optional<OutsideOptionBeliefs> b;
    switch (s_.beliefs.kind) {
      case BeliefsSpec::Kind::kProp1:
        b = Prop1Beliefs(ps.offer);
        r.details["conditions_hold"] = Prop1Conditions(*b);
        break;
      case BeliefsSpec::Kind::kProp2:
        b = Prop2Beliefs(market, ps.offer);
        r.details["conditions_hold"] = Prop2Conditions(*b, market, ps.offer);
        break;
      case BeliefsSpec::Kind::kExplicit:
        b = s_.beliefs.explicit_beliefs;
        break;
      case BeliefsSpec::Kind::kNone:
        break;
    }
    if (b) {
      r.details["beliefs"] = BeliefsJson(*b);
      auto v = CheckSce(hg.game(), p, hg.BeliefsFrom(*b));
      Verdict(r, v.holds);
      if (v.witness) r.witness = WitnessJson(hg, *v.witness);
      return;
    }
    r.details["beliefs"] = "searched";
    const bool found = FindSceWitness(hg.game(), p, hg.BeliefSpace(p), s_.budget).has_value();
    Verdict(r, found);
    if (!found) {
      r.witness = {{"kind", "no_belief_in_space"}, {"belief_space", "default"}};
    }
  }

  void DetectBlatant(CheckRecord& r, const HiringGame& hg, const EquilibriumSet& set,
                     std::optional<int> jobs) {
    auto offered = [&](std::size_t m) {
      const auto& s = set.members[m].profile.strategies.at(kFirm);
      auto offers = hg.FirmOffersOf(std::get<PureStrategy>(s));
      return HiringGame::JobsOffered(*offers);
    };
    std::size_t considered = 0;
    for (std::size_t m = 0; m < set.members.size(); ++m) {
      if (!jobs || offered(m) == *jobs) ++considered;
    }
    std::vector<BlatantFlag> flags;
    for (const auto& f : DetectBlatantUnfairness(set)) {
      if (!jobs || offered(f.equilibrium) == *jobs) flags.push_back(f);
    }
    r.details["equilibria"] = set.members.size();
    r.details["considered"] = considered;
    r.details["flags"] = flags.size();
    if (jobs) r.details["jobs"] = *jobs;
    r.verdict = flags.empty() ? "not_flagged" : "flagged";
    if (!flags.empty()) {
      const auto& f = flags.front();
      const auto& e = set.members[f.equilibrium];
      const auto& w = set.members[f.witness];
      r.witness = {{"player", PlayerName(hg, f.player)},
                   {"equilibrium", Describe(hg, e.profile, e.payoffs)},
                   {"witness", Describe(hg, w.profile, w.payoffs)}};
    }
  }

  void Construct(CheckRecord& r) {
    const ClassifierSpec& c = s_.classifier;
    static const char* kNames[] = {"group_fair", "sufficiency", "constant"};
    r.details["construction"] = kNames[static_cast<int>(c.construction)];
    if (c.construction == ClassifierSpec::Construction::kSufficiency) {
      auto out = ConstructSufficiencyBlatant(c.f, c.decisions, s_.population, c.seed, c.injection);
      r.details["case"] = CaseName(out.applied);
      r.details["injection"] = out.injection;
      Json d = Json::object();
      for (const auto& [y, z] : out.label_decision) d[y] = z.ToString();
      r.details["label_decision"] = d;
    }
    r.details["classifier"] = ToJson(G());
    r.verdict = "constructed";
  }

  const Scenario& s_;
  std::optional<Classifier> g_;
  std::map<std::string, Bilateral> bilateral_;
  Json listing_;
};

Json RecordToJson(const CheckRecord& r) {
  return {{"id", r.id},
          {"type", r.type},
          {"target", r.target},
          {"verdict", r.verdict},
          {"witness", r.witness},
          {"details", r.details},
          {"provenance",
           {{"concept", r.solution_concept}, {"belief_space", r.belief_space}, {"grid", r.grid}}}};
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

const CheckRecord* AuditReport::Find(const std::string& id) const {
  for (const auto& r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::string Fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

AuditReport RunAudit(const Scenario& s, const std::set<std::string>& only, bool timing) {
  AuditReport report;
  report.scenario = s.name;
  report.digest = Fnv1a(s.source.dump());
  Auditor auditor(s);
  for (const auto& c : s.checks) {
    if (!only.empty() && !only.count(c.type)) continue;
    const auto start = std::chrono::steady_clock::now();
    report.records.push_back(auditor.Run(c));
    if (Json listing = auditor.TakeListing(); !listing.is_null()) {
      report.equilibria[c.id] = std::move(listing);
    }
    if (timing) {
      report.timing_ms[c.id] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
    }
  }
  return report;
}

Json ReportToJson(const AuditReport& r, bool with_timing) {
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back(RecordToJson(rec));
  Json j = {{"schema_version", kSchemaVersion},
            {"scenario", r.scenario},
            {"digest", r.digest},
            {"records", records},
            {"equilibria", r.equilibria}};
  if (with_timing) j["timing_ms"] = r.timing_ms;
  return j;
}

AuditReport ReportFromJson(const Json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw ConfigError("report: unsupported schema_version");
    }
    AuditReport r;
    r.scenario = j.at("scenario").get<std::string>();
    r.digest = j.at("digest").get<std::string>();
    r.equilibria = j.at("equilibria");
    for (const auto& rec : j.at("records")) {
      const Json& p = rec.at("provenance");
      r.records.push_back({rec.at("id").get<std::string>(), rec.at("type").get<std::string>(),
                           rec.at("target").get<std::string>(),
                           rec.at("verdict").get<std::string>(), rec.at("witness"),
                           rec.at("details"), p.at("concept").get<std::string>(),
                           p.at("belief_space").get<std::string>(),
                           p.at("grid").get<std::string>()});
    }
    if (j.contains("timing_ms")) r.timing_ms = j["timing_ms"].get<std::map<std::string, double>>();
    return r;
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("report: ") + e.what());
  }
}

std::string ReportToCsv(const AuditReport& r) {
  std::ostringstream out;
  out << "id,type,target,verdict,concept,belief_space,grid,witness\n";
  for (const auto& rec : r.records) {
    out << CsvField(rec.id) << ',' << CsvField(rec.type) << ',' << CsvField(rec.target) << ','
        << CsvField(rec.verdict) << ',' << CsvField(rec.solution_concept) << ','
        << CsvField(rec.belief_space) << ',' << CsvField(rec.grid) << ','
        << CsvField(rec.witness.is_null() ? "" : rec.witness.dump()) << '\n';
  }
  return out.str();
}

void EmitReport(const AuditReport& r, const std::string& format, const std::string& path,
                bool with_timing) {
  std::string text;
  if (format == "json") {
    text = ReportToJson(r, with_timing).dump(2) + "\n";
  } else if (format == "csv") {
    text = ReportToCsv(r);
  } else {
    throw ConfigError("format: expected json or csv");
  }
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error(path + ": write failed");
}

AuditReport ReproduceCorollary(const Rational& grid_step, int group_count,
                               std::optional<unsigned> seed) {
  return RunAudit(ParseScenario(CorollaryScenario(grid_step, group_count, seed)));
}

std::vector<std::string> CorollaryDeviations(const AuditReport& r) {
  std::vector<std::string> out;
  for (const char* id : {"statistical_parity", "equalized_odds", "sufficiency",
                         "individual_fairness", "counterfactual", "no_taste_based",
                         "statistical_discrimination", "becker"}) {
    const CheckRecord* rec = r.Find(id);
    if (!rec) {
      out.push_back(std::string(id) + ": missing");
    } else if (rec->verdict != "pass") {
      out.push_back(std::string(id) + ": expected pass, got " + rec->verdict);
    }
  }
  const CheckRecord* b = r.Find("blatant_unfairness");
  if (!b) {
    out.push_back("blatant_unfairness: missing");
  } else if (b->verdict != "flagged") {
    out.push_back("blatant_unfairness: expected flagged, got " + b->verdict);
  } else {
    const Json& w = b->witness.at("witness");
    if (w.at("firm") != Json::array({"3/2"}) || w.at("payoffs") != Json::array({"1/2", "1/2"})) {
      out.push_back("blatant_unfairness: expected witness offer 3/2 with payoffs (1/2, 1/2), got " +
                    w.dump());
    }
  }
  return out;
}

}  // namespace fairgame

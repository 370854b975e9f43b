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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fairgame/blatant.h"
#include "fairgame/constructors.h"
#include "fairgame/equilibrium.h"
#include "fairgame/errors.h"
#include "fairgame/fairness.h"
#include "fairgame/hiring_market.h"
#include "fairgame/report.h"
#include "fairgame/scenario.h"
#include "fairgame/scm.h"
#include "support/oracles.h"
#include "support/random_instances.h"

namespace fairgame {
namespace {

const std::string kFixtures = FAIRGAME_FIXTURES;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Rational R(int p, int q = 1) { return Rational(p, q); }

std::string Seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// Runs `body` and applies the runtime bound (0 means none).
Outcome Timed(double bound, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out = body();
  const double s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (bound > 0) {
    out.detail += "; runtime " + Seconds(s) + " (bound " + Seconds(bound) + ")";
    if (s >= bound) out.pass = false;
  } else {
    out.detail += "; runtime " + Seconds(s);
  }
  return out;
}

Outcome CorollaryReproduction() {
  auto report = ReproduceCorollary(R(1, 4), 2);
  auto deviations = CorollaryDeviations(report);
  const auto scenario = ParseScenario(CorollaryScenario(R(1, 4), 2));
  std::ostringstream d;
  int passes = 0;
  for (const auto& r : report.records) passes += r.verdict == "pass" ? 1 : 0;
  d << scenario.population.size() << " candidates, " << passes << "/8 fairness checks pass";
  if (const auto* b = report.Find("blatant_unfairness"); b && b->verdict == "flagged") {
    d << ", flagged with witness offer " << b->witness["witness"]["firm"][0].get<std::string>()
      << " payoffs (" << b->witness["witness"]["payoffs"][0].get<std::string>() << ", "
      << b->witness["witness"]["payoffs"][1].get<std::string>() << ")";
  }
  for (const auto& dev : deviations) d << "; " << dev;
  return {deviations.empty() && scenario.population.size() == 6, d.str()};
}

Outcome ClosedFormBeliefs() {
  auto hg = BuildBilateralMarket(MarketSpec::WithStep(R(1, 4)), "x");
  int ok = 0, total = 0;
  for (const auto& z : hg.spec().offer_grid) {
    ++total;
    auto p = hg.Profile(hg.FirmOffers(z), {hg.CandidateThreshold(0, z)}, hg.TrueMarket());
    const auto b = Prop1Beliefs(z);
    if (Prop1Conditions(b) && CheckSce(hg.game(), p, hg.BeliefsFrom(b)).holds) ++ok;
  }
  return {ok == total && total == 13, std::to_string(ok) + "/" + std::to_string(total) +
                                          " grid offers pass check_sce"};
}

Outcome MarketProfiles() {
  const auto grid = MarketSpec::GridFromStep(R(1, 4));
  int ok = 0, total = 0;
  for (const auto& of : grid) {
    for (const auto& ox : grid) {
      if (of > ox) continue;
      MarketSpec spec = MarketSpec::WithStep(R(1, 4));
      spec.firm_outside = of;
      spec.default_candidate_outside = ox;
      auto hg = BuildBilateralMarket(spec, "x");
      for (const auto& z : grid) {
        if (z > of) continue;
        ++total;
        auto p = hg.Profile(hg.FirmOffers(z), {hg.CandidateThreshold(0, ox)}, hg.TrueMarket());
        const auto b = Prop2Beliefs({of, ox}, z);
        if (Prop2Conditions(b, {of, ox}, z) && CheckNash(hg.game(), p).holds &&
            CheckSce(hg.game(), p, hg.BeliefsFrom(b)).holds) {
          ++ok;
        }
      }
    }
  }
  return {ok == total && total == 455,
          std::to_string(ok) + "/" + std::to_string(total) + " profiles pass check_nash and check_sce"};
}

Outcome NashImpliesSce() {
  const auto grid = MarketSpec::GridFromStep(R(1, 2));
  int ok = 0, total = 0;
  for (const auto& of : grid) {
    for (const auto& ox : grid) {
      MarketSpec spec = MarketSpec::WithStep(R(1, 2));
      spec.firm_outside = of;
      spec.default_candidate_outside = ox;
      auto hg = BuildBilateralMarket(spec, "x");
      auto nash = EnumerateEquilibria(hg.game(), SolutionConcept::kNash,
                                      hg.DefaultEnumeration(1'000'000));
      for (const auto& e : nash) {
        ++total;
        if (FindSceWitness(hg.game(), e.profile, hg.BeliefSpace(e.profile))) ++ok;
      }
    }
  }
  return {ok == total && total > 0, std::to_string(ok) + "/" + std::to_string(total) +
                                        " Nash equilibria over 49 markets have an SCE witness"};
}

Outcome ConstructorRoundTrips() {
  const std::vector<Rational> grid5{R(0), R(3, 4), R(3, 2), R(9, 4), R(3)};
  MarketSpec spec;
  spec.offer_grid = grid5;
  auto hg = BuildBilateralMarket(spec, "x");
  auto set = EnumerateEquilibriumSet(hg.game(), SolutionConcept::kSce,
                                     hg.DefaultEnumeration(1'000'000), "default");
  // Offers played in blatantly unfair equilibria of this market.
  std::vector<Rational> seeds;
  for (const auto& f : DetectBlatantUnfairness(set)) {
    const auto& s = set.members[f.equilibrium].profile.strategies.at(kFirm);
    const Rational z = (*hg.FirmOffersOf(std::get<PureStrategy>(s)))[0];
    if (std::find(seeds.begin(), seeds.end(), z) == seeds.end()) seeds.push_back(z);
  }
  if (seeds.empty()) return {false, "no flagged offers to seed from"};

  std::mt19937 rng(7);
  int ok1 = 0, ok2 = 0;
  const int n1 = 200, n2 = 100;
  auto flagged = [&](const DecisionDistribution& d) {
    try {
      ValidateUnfairSeed(hg, set, d);
      return true;
    } catch (const HypothesisFailure&) {
      return false;
    }
  };
  for (int t = 0; t < n1; ++t) {
    auto pop = testing::RandomPopulation(rng, 10, 3);
    const Rational z = seeds[testing::Pick(rng, static_cast<int>(seeds.size()))];
    auto ds = testing::RandomDecisions(rng, grid5, z);
    auto f1 = testing::RandomSurjectiveTable(
        rng, ds, 1 + testing::Pick(rng, static_cast<int>(ds.size())), 3);
    auto f2 = testing::RandomTable(rng, ds, 3);
    const auto& x0 = pop.candidates[testing::Pick(rng, static_cast<int>(pop.size()))].id;
    auto g = ConstructGroupFairBlatant(f1, ds, pop, {PointMass(z), x0});
    if (CheckGroupFairness(pop, g, {"part1", f1, f2}).holds && g.Of(x0) == PointMass(z) &&
        flagged(g.Of(x0))) {
      ++ok1;
    }
  }
  for (int t = 0; t < n2;) {
    auto pop = testing::RandomPopulation(rng, 10, 3);
    const Rational z = seeds[testing::Pick(rng, static_cast<int>(seeds.size()))];
    auto ds = testing::RandomDecisions(rng, grid5, z);
    std::set<std::string> labels;
    for (const auto& c : pop.candidates) labels.insert(c.label);
    if (labels.size() > ds.size()) continue;  // violates the cardinality hypothesis
    ++t;
    const int k = static_cast<int>(labels.size()) +
                  testing::Pick(rng, static_cast<int>(ds.size() - labels.size()) + 1);
    auto f2 = testing::RandomSurjectiveTable(rng, ds, k, 3);
    auto f1 = testing::RandomTable(rng, ds, 3);
    const auto& x0 = pop.candidates[testing::Pick(rng, static_cast<int>(pop.size()))].id;
    auto out = ConstructSufficiencyBlatant(f2, ds, pop, {PointMass(z), x0});
    if (LabelInjective(f2, pop, out.classifier) &&
        CheckGroupFairness(pop, out.classifier, {"part2", f1, f2}).holds &&
        out.classifier.Of(x0) == PointMass(z) && flagged(out.classifier.Of(x0))) {
      ++ok2;
    }
  }
  return {ok1 == n1 && ok2 == n2, "part 1 " + std::to_string(ok1) + "/" + std::to_string(n1) +
                                      ", part 2 " + std::to_string(ok2) + "/" +
                                      std::to_string(n2)};
}

Outcome IndependenceOracle() {
  std::mt19937 rng(4242);
  const int n = 600;
  int agree = 0, holds = 0;
  for (int t = 0; t < n; ++t) {
    auto in = testing::Generate(rng);
    const bool expected = testing::OracleIndependent(in.pop, in.g, in.spec);
    const auto v = CheckGroupFairness(in.pop, in.g, in.spec);
    if (v.holds == expected && v.holds == !v.witness.has_value()) ++agree;
    holds += expected ? 1 : 0;
  }
  return {agree == n, std::to_string(agree) + "/" + std::to_string(n) + " agree (" +
                          std::to_string(holds) + " independent instances)"};
}

Outcome MonopolyExclusion() {
  std::ostringstream d;
  bool pass = true;
  for (int n = 2; n <= 4; ++n) {
    std::vector<Candidate> cs;
    for (int i = 0; i < n; ++i) cs.push_back({"x" + std::to_string(i), {R(i)}, "a", "0", R(0)});
    const auto pop = Population::Uniform(cs);
    for (int cap = 1; cap < n; ++cap) {
      int flags[2] = {0, 0};
      for (int relaxed = 0; relaxed < 2; ++relaxed) {
        auto spec = MarketSpec::WithStep(R(3, 2));
        if (relaxed) spec.default_candidate_outside = R(3, 2);
        auto hg = ApplyJobCap(spec, pop, cap);
        auto set = EnumerateEquilibriumSet(hg.game(), SolutionConcept::kSce,
                                           hg.DefaultEnumeration(10'000'000), "default");
        for (const auto& f : DetectBlatantUnfairness(set)) {
          const auto& s = set.members[f.equilibrium].profile.strategies.at(kFirm);
          if (HiringGame::JobsOffered(*hg.FirmOffersOf(std::get<PureStrategy>(s))) == cap) {
            ++flags[relaxed];
          }
        }
      }
      pass = pass && flags[0] == 0 && flags[1] >= 1;
      d << " |X|=" << n << ",i=" << cap << ":" << flags[0] << "/" << flags[1];
    }
  }
  return {pass, "flags with o(x)=0 / o(x)=3/2:" + d.str()};
}

Outcome CounterfactualEngine() {
  Json doc = ReadJsonFile(kFixtures + "/scm_cases.json");
  std::map<std::string, CausalModel> models;
  for (const auto& [name, scm] : doc["models"].items()) {
    Json wrapper = {{"schema_version", kSchemaVersion},
                    {"market", {{"grid_step", "3/2"}}},
                    {"checks", {{{"type", "counterfactual"}, {"scm", scm}}}}};
    models.emplace(name, *ParseScenario(wrapper).checks[0].scm);
  }
  int ok = 0, total = 0;
  for (const auto& c : doc["cases"]) {
    ++total;
    const auto& scm = models.at(c["model"].get<std::string>());
    const World x = c["x"].get<World>();
    const auto a = c["a"].get<std::string>();
    const auto a_prime = c["a_prime"].get<std::string>();
    if (c["expected"].is_string()) {
      try {
        scm.CounterfactualOutput(x, a, a_prime);
      } catch (const ConfigError&) {
        ++ok;
      }
      continue;
    }
    DecisionDistribution expected;
    for (const auto& [z, p] : c["expected"].items()) {
      expected[Rational::Parse(z)] = Rational::Parse(p.get<std::string>());
    }
    if (scm.CounterfactualOutput(x, a, a_prime) == expected) ++ok;
  }
  return {ok == total && total >= 20,
          std::to_string(ok) + "/" + std::to_string(total) + " fixture cases match"};
}

Outcome Determinism() {
  int ok = 0, total = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures + "/scenarios")) {
    ++total;
    const auto s = LoadScenario(entry.path().string());
    const std::string first = ReportToJson(RunAudit(s)).dump(2);
    bool same = true;
    for (int i = 0; i < 2; ++i) same = same && ReportToJson(RunAudit(s)).dump(2) == first;
    ok += same ? 1 : 0;
  }
  return {ok == total && total > 0, std::to_string(ok) + "/" + std::to_string(total) +
                                        " scenario fixtures byte-identical over 3 runs"};
}

}  // namespace
}  // namespace fairgame

int main() {
  using fairgame::Outcome;
  struct Criterion {
    int number;
    const char* name;
    double bound;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "corollary reproduction", 1, fairgame::CorollaryReproduction},
      {2, "closed-form SCE beliefs", 0, fairgame::ClosedFormBeliefs},
      {3, "outside-option market profiles", 10, fairgame::MarketProfiles},
      {4, "Nash implies SCE", 0, fairgame::NashImpliesSce},
      {5, "constructor round trips", 30, fairgame::ConstructorRoundTrips},
      {6, "independence oracle", 0, fairgame::IndependenceOracle},
      {7, "monopoly exclusion", 60, fairgame::MonopolyExclusion},
      {8, "counterfactual engine", 0, fairgame::CounterfactualEngine},
      {9, "determinism", 0, fairgame::Determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    try {
      out = fairgame::Timed(c.bound, c.run);
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << c.number << " " << (out.pass ? "PASS" : "FAIL") << ": " << c.name
              << ": " << out.detail << std::endl;
    failed += out.pass ? 0 : 1;
  }
  return failed;
}

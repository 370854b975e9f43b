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

#include <gtest/gtest.h>

#include <random>

#include "fairgame/errors.h"
#include "fairgame/scm.h"
#include "support/random_instances.h"

namespace fairgame {
namespace {

Rational R(int p, int q = 1) { return Rational(p, q); }

const std::vector<Rational> kGrid5{R(0), R(3, 4), R(3, 2), R(9, 4), R(3)};

Population Labeled(const std::vector<std::string>& labels) {
  std::vector<Candidate> cs;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    cs.push_back({"x" + std::to_string(i), {R(static_cast<int>(i))}, i % 2 ? "b" : "a",
                  labels[i], R(0)});
  }
  return Population::Uniform(cs);
}

FeatureMap Threshold() {
  std::map<std::pair<Rational, std::string>, std::string> t;
  for (const auto& d : kGrid5) {
    if (d == R(9, 4)) continue;
    for (std::string y : {"0", "1"}) t[{d, y}] = d >= R(3, 2) ? "1" : "0";
  }
  return FeatureMap::Table(t);
}

TEST(RightInverseTest, Examples) {
  auto id = RightInverseTable(FeatureMap::Decision(), {R(0), R(3, 2)}, "y");
  EXPECT_EQ(id, (RightInverse{{"0", R(0)}, {"3/2", R(3, 2)}}));
  auto th = RightInverseTable(Threshold(), {R(0), R(3, 4), R(3, 2), R(3)}, "0");
  EXPECT_EQ(th, (RightInverse{{"0", R(0)}, {"1", R(3, 2)}}));
  auto c = RightInverseTable(FeatureMap::Constant("k"), {R(0), R(3, 2)}, "y");
  EXPECT_EQ(c, (RightInverse{{"k", R(0)}}));
  EXPECT_THROW(ApplyRightInverse(c, "z", "y"), HypothesisFailure);
}

TEST(GroupFairConstructionTest, Examples) {
  auto pop = Labeled({"0", "1", "0", "1"});
  auto g = ConstructGroupFairBlatant(FeatureMap::Decision(), {R(0), R(3, 2)}, pop,
                                     {PointMass(R(0)), "x0"});
  for (const auto& c : pop.candidates) EXPECT_EQ(g.Of(c.id), PointMass(R(0)));

  const std::vector<Rational> d4{R(0), R(3, 4), R(3, 2), R(3)};
  g = ConstructGroupFairBlatant(Threshold(), d4, pop, {PointMass(R(0)), "x1"});
  for (const auto& c : pop.candidates) EXPECT_EQ(g.Of(c.id), PointMass(R(0)));

  DecisionDistribution mix{{R(0), R(1, 2)}, {R(3, 2), R(1, 2)}};
  g = ConstructGroupFairBlatant(FeatureMap::Decision(), {R(0), R(3, 2)}, pop, {mix, "x2"});
  for (const auto& c : pop.candidates) EXPECT_EQ(g.Of(c.id), mix);
  EXPECT_TRUE(CheckStatisticalParity(pop, g).holds);
}

TEST(GroupFairConstructionTest, HypothesisFailureNamesPair) {
  auto pop = Labeled({"0", "1"});
  // Label 1 never reaches "hi".
  auto f = FeatureMap::Table({{{R(0), "0"}, "lo"}, {{R(3), "0"}, "hi"},
                              {{R(0), "1"}, "lo"}, {{R(3), "1"}, "lo"}});
  try {
    ConstructGroupFairBlatant(f, {R(0), R(3)}, pop, {PointMass(R(0)), "x0"});
    FAIL();
  } catch (const HypothesisFailure& e) {
    EXPECT_NE(std::string(e.what()).find("F(d, 1) = hi"), std::string::npos);
  }
}

TEST(SufficiencyConstructionTest, ExplicitInjectionCaseOne) {
  auto pop = Labeled({"1", "0", "1", "0"});
  auto out = ConstructSufficiencyBlatant(FeatureMap::Decision(), {R(0), R(3, 2)}, pop,
                                         {PointMass(R(0)), "x0"},
                                         std::map<std::string, std::string>{{"1", "0"}, {"0", "3/2"}});
  EXPECT_EQ(out.applied, SufficiencyCase::kAnchorMatches);
  for (const auto& c : pop.candidates) {
    EXPECT_EQ(out.classifier.Of(c.id), PointMass(c.label == "1" ? R(0) : R(3, 2)));
  }
  EXPECT_TRUE(CheckSufficiency(pop, out.classifier).holds);
  // Canonical injection reaches the same classifier through the swap.
  auto canon = ConstructSufficiencyBlatant(FeatureMap::Decision(), {R(0), R(3, 2)}, pop,
                                           {PointMass(R(0)), "x0"});
  EXPECT_EQ(canon.applied, SufficiencyCase::kSwap);
  EXPECT_EQ(canon.classifier.decisions, out.classifier.decisions);
}

TEST(SufficiencyConstructionTest, ConstantLabels) {
  auto pop = Labeled({"c", "c", "c"});
  auto out = ConstructSufficiencyBlatant(FeatureMap::Decision(), {R(0), R(3, 2)}, pop,
                                         {PointMass(R(0)), "x1"});
  for (const auto& c : pop.candidates) EXPECT_EQ(out.classifier.Of(c.id), PointMass(R(0)));
  EXPECT_TRUE(CheckSufficiency(pop, out.classifier).holds);
}

TEST(SufficiencyConstructionTest, SwapCase) {
  auto pop = Labeled({"0", "1", "2", "1"});
  // Canonical: d_0 = 0, d_1 = 3/2, d_2 = 3. Anchor label 0, seed 3/2.
  auto out = ConstructSufficiencyBlatant(FeatureMap::Decision(), {R(0), R(3, 2), R(3)}, pop,
                                         {PointMass(R(3, 2)), "x0"});
  EXPECT_EQ(out.applied, SufficiencyCase::kSwap);
  EXPECT_EQ(out.classifier.Of("x0"), PointMass(R(3, 2)));
  EXPECT_EQ(out.classifier.Of("x1"), PointMass(R(0)));
  EXPECT_EQ(out.classifier.Of("x2"), PointMass(R(3)));
  EXPECT_TRUE(LabelInjective(FeatureMap::Decision(), pop, out.classifier));
  EXPECT_TRUE(CheckSufficiency(pop, out.classifier).holds);
}

TEST(SufficiencyConstructionTest, NoMatchCase) {
  auto pop = Labeled({"0", "1"});
  auto out = ConstructSufficiencyBlatant(FeatureMap::Decision(), {R(0), R(3, 2), R(3)}, pop,
                                         {PointMass(R(3)), "x1"});
  EXPECT_EQ(out.applied, SufficiencyCase::kNoMatch);
  EXPECT_EQ(out.classifier.Of("x1"), PointMass(R(3)));
  EXPECT_EQ(out.classifier.Of("x0"), PointMass(R(0)));
}

// With a general F2 the no-match substitution can collide; the result is
// re-anchored.
TEST(SufficiencyConstructionTest, ReanchorsOnCollision) {
  auto pop = Labeled({"0", "1"});
  // F2(d, 0): 0->p, 3/2->q, 3->q. F2(d, 1): 0->q, 3/2->p, 3->p.
  auto f2 = FeatureMap::Table({{{R(0), "0"}, "p"}, {{R(3, 2), "0"}, "q"}, {{R(3), "0"}, "q"},
                               {{R(0), "1"}, "q"}, {{R(3, 2), "1"}, "p"}, {{R(3), "1"}, "p"}});
  // Canonical i(0)=p, i(1)=q: d_0 = 0, d_1 = 0. Seed 3 at x0 (label 0):
  // no match, label 0 gets 3 with F2 = q, colliding with label 1.
  auto out = ConstructSufficiencyBlatant(f2, {R(0), R(3, 2), R(3)}, pop, {PointMass(R(3)), "x0"});
  EXPECT_EQ(out.applied, SufficiencyCase::kReanchored);
  EXPECT_EQ(out.classifier.Of("x0"), PointMass(R(3)));
  EXPECT_TRUE(LabelInjective(f2, pop, out.classifier));
  EXPECT_TRUE(CheckGroupFairness(pop, out.classifier, {"s", FeatureMap::Label(), f2}).holds);
}

TEST(SufficiencyConstructionTest, Errors) {
  auto pop = Labeled({"0", "1", "2"});
  EXPECT_THROW(ConstructSufficiencyBlatant(FeatureMap::Decision(), {R(0), R(3, 2)}, pop,
                                           {PointMass(R(0)), "x0"}),
               HypothesisFailure);
  EXPECT_THROW(ConstructSufficiencyBlatant(FeatureMap::Decision(), {R(0), R(3, 2), R(3)}, pop,
                                           {{{R(0), R(1, 2)}, {R(3), R(1, 2)}}, "x0"}),
               HypothesisFailure);
  EXPECT_THROW(ConstructSufficiencyBlatant(FeatureMap::Decision(), {R(0), R(3, 2), R(3)}, pop,
                                           {PointMass(R(0)), "nobody"}),
               ConfigError);
}

TEST(ConstantConstructionTest, PassesIndividualAndCounterfactual) {
  auto pop = Labeled({"0", "1", "0"});
  for (const auto& seed : {PointMass(R(0)), PointMass(R(3, 2)),
                           DecisionDistribution{{R(0), R(1, 2)}, {R(3), R(1, 2)}}}) {
    auto g = ConstructConstant(pop, seed);
    for (const auto& c : pop.candidates) EXPECT_EQ(g.Of(c.id), seed);
    MetricPair zero{{}, {CandidateMetric::Kind::kScaledL1, R(0), {}}};
    EXPECT_TRUE(CheckIndividualFairness(pop, g, zero).holds);
    CausalModel scm;
    scm.AddExogenous("A", {{"a", R(1, 2)}, {"b", R(1, 2)}});
    scm.AddExogenous("X", {{"0", R(1, 3)}, {"1", R(1, 3)}, {"2", R(1, 3)}});
    scm.SetFeatures({"X"});
    EXPECT_EQ(scm.OutDegree("A"), 0);
    EXPECT_TRUE(CheckCounterfactualFairness(scm, pop, g).holds);
    EXPECT_TRUE(CheckNoTasteBased(AttachClassifier(scm, pop, g)));
  }
}

class SeedTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    MarketSpec spec;
    spec.offer_grid = kGrid5;
    hg_ = new HiringGame(BuildBilateralMarket(spec, "x"));
    set_ = new EquilibriumSet(EnumerateEquilibriumSet(
        hg_->game(), SolutionConcept::kSce, hg_->DefaultEnumeration(1'000'000), "grid"));
  }
  static void TearDownTestSuite() {
    delete set_;
    delete hg_;
  }
  static HiringGame* hg_;
  static EquilibriumSet* set_;
};
HiringGame* SeedTest::hg_ = nullptr;
EquilibriumSet* SeedTest::set_ = nullptr;

TEST_F(SeedTest, PureSeeds) {
  auto ev = ValidateUnfairSeed(*hg_, *set_, PointMass(R(0)));
  EXPECT_EQ(ev.flagged_player, 1);
  EXPECT_EQ(set_->members[ev.witness].payoffs, (std::vector<Rational>{R(1, 2), R(1, 2)}));
  EXPECT_NO_THROW(ValidateUnfairSeed(*hg_, *set_, PointMass(R(3, 4))));
  EXPECT_THROW(ValidateUnfairSeed(*hg_, *set_, PointMass(R(3, 2))), HypothesisFailure);
}

TEST(MixedSeedTest, RejectedAndAcceptedMix) {
  // Market (1,0): offering 0 (rejected) and 1 (accepted) both give the firm 1.
  auto spec = MarketSpec::WithStep(R(1, 2));
  spec.firm_outside = R(1);
  auto hg = BuildBilateralMarket(spec, "x");
  auto set = EnumerateEquilibriumSet(hg.game(), SolutionConcept::kSce,
                                     hg.DefaultEnumeration(1'000'000), "grid");
  DecisionDistribution mix{{R(0), R(1, 2)}, {R(1), R(1, 2)}};
  auto ev = ValidateUnfairSeed(hg, set, mix);
  EXPECT_EQ(ev.flagged_player, 1);
  EXPECT_EQ(EvaluateProfile(hg.game(), ev.profile)[1], R(-1, 2));
  DecisionDistribution bad{{R(0), R(1, 2)}, {R(3), R(1, 2)}};
  EXPECT_THROW(ValidateUnfairSeed(hg, set, bad), HypothesisFailure);
}

TEST_F(SeedTest, RoundTripPartOne) {
  std::mt19937 rng(101);
  const std::vector<Rational> flagged{R(0), R(3, 4)};
  for (int trial = 0; trial < 60; ++trial) {
    auto pop = testing::RandomPopulation(rng, 10, 3);
    const Rational z = flagged[testing::Pick(rng, 2)];
    auto ds = testing::RandomDecisions(rng, kGrid5, z);
    auto f1 = testing::RandomSurjectiveTable(rng, ds, 1 + testing::Pick(rng, static_cast<int>(ds.size())), 3);
    auto f2 = testing::RandomTable(rng, ds, 3);
    const std::string x0 = pop.candidates[testing::Pick(rng, static_cast<int>(pop.size()))].id;
    auto g = ConstructGroupFairBlatant(f1, ds, pop, {PointMass(z), x0});
    EXPECT_TRUE(CheckGroupFairness(pop, g, {"p1", f1, f2}).holds) << trial;
    EXPECT_TRUE(CheckGroupFairness(pop, g, {"p1", f1, FeatureMap::Label()}).holds) << trial;
    EXPECT_EQ(g.Of(x0), PointMass(z));
    EXPECT_NO_THROW(ValidateUnfairSeed(*hg_, *set_, g.Of(x0)));
  }
}

TEST_F(SeedTest, RoundTripPartTwo) {
  std::mt19937 rng(202);
  const std::vector<Rational> flagged{R(0), R(3, 4)};
  int done = 0;
  for (int trial = 0; done < 40; ++trial) {
    auto pop = testing::RandomPopulation(rng, 10, 3);
    const Rational z = flagged[testing::Pick(rng, 2)];
    auto ds = testing::RandomDecisions(rng, kGrid5, z);
    std::set<std::string> labels;
    for (const auto& c : pop.candidates) labels.insert(c.label);
    if (labels.size() > ds.size()) continue;
    const int k = static_cast<int>(labels.size()) +
                  testing::Pick(rng, static_cast<int>(ds.size() - labels.size()) + 1);
    auto f2 = testing::RandomSurjectiveTable(rng, ds, k, 3);
    auto f1 = testing::RandomTable(rng, ds, 3);
    const std::string x0 = pop.candidates[testing::Pick(rng, static_cast<int>(pop.size()))].id;
    auto out = ConstructSufficiencyBlatant(f2, ds, pop, {PointMass(z), x0});
    EXPECT_TRUE(LabelInjective(f2, pop, out.classifier)) << trial;
    EXPECT_TRUE(CheckGroupFairness(pop, out.classifier, {"p2", f1, f2}).holds) << trial;
    EXPECT_TRUE(CheckGroupFairness(pop, out.classifier, {"p2", FeatureMap::Label(), f2}).holds);
    EXPECT_EQ(out.classifier.Of(x0), PointMass(z));
    EXPECT_NO_THROW(ValidateUnfairSeed(*hg_, *set_, out.classifier.Of(x0)));
    ++done;
  }
}

TEST(RightInverseProperty, InvertsEveryImageValue) {
  std::mt19937 rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    auto ds = testing::RandomDecisions(rng, kGrid5, kGrid5[testing::Pick(rng, 5)]);
    auto f = testing::RandomTable(rng, ds, 3);
    for (int y = 0; y < 3; ++y) {
      const std::string label = std::to_string(y);
      for (const auto& [z, d] : RightInverseTable(f, ds, label)) {
        EXPECT_EQ(f.Apply(d, label), z);
        for (const auto& e : ds) {
          if (e < d) {
            EXPECT_NE(f.Apply(e, label), z);  // smallest preimage
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace fairgame

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

#include "fairgame/hiring_market.h"

#include <gtest/gtest.h>

#include "fairgame/errors.h"

namespace fairgame {
namespace {

Rational R(int p, int q = 1) { return Rational(p, q); }

Population TwoCandidates() {
  return Population::Uniform({{"x1", {R(0)}, "a", "0", R(0)},
                              {"x2", {R(1)}, "b", "0", R(0)}});
}

TEST(MarketSpecTest, StepGrid) {
  EXPECT_EQ(MarketSpec::GridFromStep(R(1, 4)).size(), 13u);
  EXPECT_EQ(MarketSpec::GridFromStep(R(3, 2)),
            (std::vector<Rational>{R(0), R(3, 2), R(3)}));
  EXPECT_THROW(MarketSpec::GridFromStep(R(0)), ConfigError);
  EXPECT_THROW(MarketSpec::GridFromStep(R(2)), ConfigError);
}

TEST(MarketSpecTest, RangeChecks) {
  auto spec = MarketSpec::WithStep(R(1, 4));
  spec.default_candidate_outside = R(7, 2);
  EXPECT_THROW(spec.Validate(), ConfigError);
  spec.default_candidate_outside = R(1, 3);  // off grid
  EXPECT_THROW(spec.Validate(), ConfigError);
  spec.default_candidate_outside = R(1);
  EXPECT_NO_THROW(spec.Validate());
  spec.offer_grid.clear();
  EXPECT_THROW(spec.Validate(), ConfigError);
}

TEST(BilateralTest, LeavesAndInfoSets) {
  MarketSpec spec;
  spec.offer_grid = {R(0), R(3, 2), R(3)};
  spec.firm_outside = R(3);
  auto hg = BuildBilateralMarket(spec, "x");
  const auto& g = hg.game();
  auto p = hg.Profile(hg.FirmOffers(R(3, 2)), {hg.CandidateThreshold(0, R(0))},
                      hg.TrueMarket());
  EXPECT_EQ(EvaluateProfile(g, p), (std::vector<Rational>{R(1, 2), R(1, 2)}));
  p = hg.Profile(hg.FirmOffers(R(3, 2)), {hg.CandidateThreshold(0, std::nullopt)},
                 hg.MarketPlays(R(3), R(0)));
  EXPECT_EQ(EvaluateProfile(g, p), (std::vector<Rational>{R(-1), R(-1)}));
  EXPECT_EQ(g.InfoSetsOf(1).size(), 3u);
  EXPECT_EQ(hg.OffersTo(0), spec.offer_grid);
}

TEST(SimultaneousTest, PayoffsDecompose) {
  auto spec = MarketSpec::WithStep(R(3, 2));
  spec.firm_outside = R(1);
  spec.default_candidate_outside = R(2);
  spec.market_grid = {R(0), R(1), R(3, 2), R(2), R(3)};
  auto pop = TwoCandidates();
  auto hg = BuildSimultaneousMarket(spec, pop);
  const auto& g = hg.game();
  auto accept = [&](int k) { return hg.CandidateThreshold(k, R(0)); };
  auto p = hg.Profile(hg.FirmPlays({R(3, 2), R(3, 2)}), {accept(0), accept(1)},
                      hg.TrueMarket());
  EXPECT_EQ(EvaluateProfile(g, p), (std::vector<Rational>{R(1), R(1, 2), R(1, 2)}));
  p = hg.Profile(hg.FirmPlays({R(0), R(0)}), {accept(0), accept(1)}, hg.TrueMarket());
  EXPECT_EQ(EvaluateProfile(g, p), (std::vector<Rational>{R(4), R(-1), R(-1)}));
  p = hg.Profile(hg.FirmPlays({R(3, 2), R(0)}),
                 {accept(0), hg.CandidateThreshold(1, std::nullopt)}, hg.TrueMarket());
  EXPECT_EQ(EvaluateProfile(g, p),
            (std::vector<Rational>{R(1, 2) + R(1), R(1, 2), R(1)}));

  // Property: every pure profile decomposes into bilateral payoffs.
  auto bilateral = BuildBilateralMarket(spec, "x1");
  for (const auto& offers : hg.FirmActions()) {
    for (const auto& t0 : hg.ThresholdStrategies(0)) {
      for (const auto& t1 : hg.ThresholdStrategies(1)) {
        auto q = hg.Profile(hg.FirmPlays(offers), {t0, t1}, hg.TrueMarket());
        auto full = EvaluateProfile(g, q);
        Rational firm;
        for (int k = 0; k < 2; ++k) {
          const auto& t = k == 0 ? t0 : t1;
          bool acc = hg.Accepts(k, t, offers[k]);
          auto b = bilateral.Profile(
              bilateral.FirmOffers(offers[k]),
              {bilateral.CandidateThreshold(0, acc ? std::optional(R(0)) : std::nullopt)},
              bilateral.TrueMarket());
          auto part = EvaluateProfile(bilateral.game(), b);
          firm += part[0];
          EXPECT_EQ(full[k + 1], part[1]);
        }
        EXPECT_EQ(full[0], firm);
      }
    }
  }
}

TEST(SimultaneousTest, EmptyPopulationRejected) {
  EXPECT_THROW(BuildSimultaneousMarket(MarketSpec::WithStep(R(3, 2)), Population{}),
               ConfigError);
}

Population Uniform(int n) {
  std::vector<Candidate> cs;
  for (int i = 0; i < n; ++i) {
    cs.push_back({"x" + std::to_string(i), {R(i)}, i % 2 ? "b" : "a", "0", R(0)});
  }
  return Population::Uniform(cs);
}

TEST(JobCapTest, StrategyCounts) {
  auto spec = MarketSpec::WithStep(R(3, 2));
  auto hg = ApplyJobCap(spec, Uniform(3), 1);
  EXPECT_EQ(hg.FirmActions().size(), 4u);
  EXPECT_EQ(CappedStrategyCount(3, 1, 1), 4);
  auto zero = ApplyJobCap(spec, Uniform(3), 0);
  ASSERT_EQ(zero.FirmActions().size(), 1u);
  EXPECT_EQ(zero.FirmActions()[0], (std::vector<Rational>{R(0), R(0), R(0)}));
  EXPECT_THROW(ApplyJobCap(spec, Uniform(3), 3), ConfigError);
  for (int n = 2; n <= 4; ++n) {
    for (int cap = 0; cap < n; ++cap) {
      EXPECT_EQ(static_cast<long long>(ApplyJobCap(spec, Uniform(n), cap).FirmActions().size()),
                CappedStrategyCount(n, cap, 1));
    }
  }
}

TEST(JobCapTest, MonopolyHasEquilibria) {
  auto spec = MarketSpec::WithStep(R(3, 2));
  auto hg = ApplyJobCap(spec, Uniform(3), 1);
  auto eq = EnumerateEquilibria(hg.game(), SolutionConcept::kSce,
                                hg.DefaultEnumeration(1'000'000));
  EXPECT_FALSE(eq.empty());
}

TEST(Prop1Test, BeliefsAndConditions) {
  auto b = Prop1Beliefs(R(0));
  EXPECT_EQ(b.o_f_f, R(3));
  EXPECT_EQ(b.o_f_x, R(0));
  EXPECT_EQ(b.o_x_x, R(0));
  EXPECT_TRUE(Prop1Conditions(b));
  b = Prop1Beliefs(R(3, 2));
  EXPECT_EQ(b.o_f_x, R(3, 2));
  EXPECT_TRUE(Prop1Conditions(Prop1Beliefs(R(3))));
  EXPECT_THROW(Prop1Beliefs(R(4)), ConfigError);
  EXPECT_FALSE(Prop1Conditions({R(0), R(1), R(0), R(0), R(0), R(0)}));
  EXPECT_TRUE(Prop1Conditions({R(2), R(2), R(2), R(0), R(0), R(0)}));
}

TEST(Prop1Test, EveryGridOfferIsSce) {
  auto hg = BuildBilateralMarket(MarketSpec::WithStep(R(1, 4)), "x");
  for (const auto& z : hg.spec().offer_grid) {
    auto p = hg.Profile(hg.FirmOffers(z), {hg.CandidateThreshold(0, z)}, hg.TrueMarket());
    EXPECT_TRUE(CheckSce(hg.game(), p, hg.BeliefsFrom(Prop1Beliefs(z))).holds) << z;
  }
}

TEST(Prop2Test, Conditions) {
  OutsideOptionBeliefs b{R(1), R(2), R(2), R(1), R(2), R(1)};
  EXPECT_TRUE(Prop2Conditions(b, {R(1), R(2)}, R(1)));
  EXPECT_FALSE(Prop2Conditions(b, {R(1), R(2)}, R(3, 2)));
  EXPECT_FALSE(Prop2Conditions(b, {R(1), R(3)}, R(1)));
}

TEST(DiagnosticsTest, StatisticalDiscrimination) {
  auto pop = TwoCandidates();
  MarketSpec spec = MarketSpec::WithStep(R(3, 2));
  EquilibriumOutcome all{{}, {{"x1", R(1)}, {"x2", R(1)}}};
  auto v = StatisticalDiscriminationCheck(pop, all, spec);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(*v.by_group.at("a"), R(1));
  EquilibriumOutcome half{{}, {{"x1", R(1)}, {"x2", R(0)}}};
  v = StatisticalDiscriminationCheck(pop, half, spec);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(*v.by_group.at("b"), R(0));
  EquilibriumOutcome none{{}, {{"x1", R(0)}, {"x2", R(0)}}};
  EXPECT_TRUE(StatisticalDiscriminationCheck(pop, none, spec).holds);
  EXPECT_TRUE(PotentialSurplusCheck(pop, spec).holds);
}

TEST(DiagnosticsTest, Becker) {
  auto pop = Population::Uniform({{"x1", {R(0)}, "a", "0", R(0)},
                                  {"x2", {R(1)}, "a", "0", R(0)},
                                  {"x3", {R(2)}, "b", "0", R(0)}});
  MarketSpec spec = MarketSpec::WithStep(R(3, 2));
  EquilibriumOutcome all{{}, {{"x1", R(1)}, {"x2", R(1)}, {"x3", R(1)}}};
  EXPECT_TRUE(BeckerTest(pop, all, spec).holds);
  spec.surplus = {{"x1", R(1)}, {"x2", R(2)}, {"x3", R(2)}};
  auto v = BeckerTest(pop, all, spec);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(*v.by_group.at("a"), R(1));
  EXPECT_EQ(*v.by_group.at("b"), R(2));
  EquilibriumOutcome none{{}, {{"x1", R(0)}, {"x2", R(0)}, {"x3", R(0)}}};
  v = BeckerTest(pop, none, spec);
  EXPECT_TRUE(v.holds);
  EXPECT_FALSE(v.by_group.at("a").has_value());
}

TEST(OutcomeTest, MatchProbabilities) {
  auto hg = BuildSimultaneousMarket(MarketSpec::WithStep(R(3, 2)), TwoCandidates());
  auto p = hg.Profile(hg.FirmPlays({R(0), R(3, 2)}),
                      {hg.CandidateThreshold(0, R(3, 2)), hg.CandidateThreshold(1, R(0))},
                      hg.TrueMarket());
  auto out = hg.Outcome(p);
  EXPECT_EQ(out.match_probability.at("x1"), R(0));
  EXPECT_EQ(out.match_probability.at("x2"), R(1));
}

}  // namespace
}  // namespace fairgame

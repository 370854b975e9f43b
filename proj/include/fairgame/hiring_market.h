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

#ifndef FAIRGAME_HIRING_MARKET_H_
#define FAIRGAME_HIRING_MARKET_H_

// Hiring-market games. A firm offers wages on a finite grid in [0,3]; each
// candidate accepts or rejects their own offer; on rejection the market
// (Nature) hands out outside options (o(f), o(x)).
//
// Accepted offer z:   firm 1 - need_penalty - z,     candidate z + need_penalty
// Rejected:           firm 1 - need_penalty - o(f),  candidate o(x) + need_penalty
//
// With the default need penalty of -1 these are 2 - z, z - 1, 2 - o(f) and
// o(x) - 1. The bilateral market is the one-candidate case of the
// simultaneous market; firm payoffs in the simultaneous market are sums of
// the per-candidate bilateral payoffs.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairgame/equilibrium.h"
#include "fairgame/game.h"
#include "fairgame/population.h"
#include "fairgame/rational.h"

namespace fairgame {

inline constexpr PlayerId kFirm = 0;

struct MarketSpec {
  std::vector<Rational> offer_grid;
  // Values the market may assign as outside options. Empty means the
  // offer grid.
  std::vector<Rational> market_grid;
  Rational firm_outside;
  Rational default_candidate_outside;
  std::map<std::string, Rational> candidate_outside;
  Rational default_surplus{1};
  std::map<std::string, Rational> surplus;
  Rational need_penalty{-1};

  // {0, step, 2 step, ..., 3}. `step` must be positive and divide 3.
  static std::vector<Rational> GridFromStep(const Rational& step);
  static MarketSpec WithStep(const Rational& step);

  const std::vector<Rational>& MarketGrid() const {
    return market_grid.empty() ? offer_grid : market_grid;
  }
  Rational OutsideOf(const std::string& id) const;
  Rational SurplusOf(const std::string& id) const;

  // Grids sorted, duplicate-free and inside [0,3]; outside options inside
  // [0,3] and on the market grid. Throws ConfigError.
  void Validate() const;
};

// What each side believes about outside options, plus the firm's believed
// acceptance threshold and the candidate's believed offer.
struct OutsideOptionBeliefs {
  Rational o_f_f;   // firm about firm
  Rational o_f_x;   // firm about candidate
  Rational o_x_x;   // candidate about candidate
  Rational o_x_f;   // candidate about firm; never constrained
  std::optional<Rational> firm_threshold;  // nullopt: firm believes "reject all"
  Rational candidate_offer;
};

Rational FirmAcceptPayoff(const MarketSpec& spec, const Rational& offer);
Rational CandidateAcceptPayoff(const MarketSpec& spec, const Rational& offer);
Rational FirmRejectPayoff(const MarketSpec& spec, const Rational& o_f);
Rational CandidateRejectPayoff(const MarketSpec& spec, const Rational& o_x);

// Outcome of a profile: payoffs per player and each candidate's probability
// of being matched (offer accepted).
struct EquilibriumOutcome {
  std::vector<Rational> payoffs;
  std::map<std::string, Rational> match_probability;
};

class HiringGame {
 public:
  const GameTree& game() const { return game_; }
  const MarketSpec& spec() const { return spec_; }
  const std::vector<std::string>& candidates() const { return candidates_; }
  int NumCandidates() const { return static_cast<int>(candidates_.size()); }
  PlayerId CandidatePlayer(int k) const { return k + 1; }
  int CandidateIndex(const std::string& id) const;

  // Firm actions in canonical order; each is one offer per candidate.
  const std::vector<std::vector<Rational>>& FirmActions() const {
    return firm_actions_;
  }
  // Distinct offers candidate k can receive, ascending.
  std::vector<Rational> OffersTo(int k) const;

  PureStrategy FirmPlays(const std::vector<Rational>& offers) const;
  PureStrategy FirmOffers(const Rational& offer) const;  // one candidate only
  std::optional<std::vector<Rational>> FirmOffersOf(const PureStrategy& s) const;

  // Accept iff offer >= threshold; nullopt rejects everything.
  PureStrategy CandidateThreshold(int k, std::optional<Rational> threshold) const;
  // Candidate k's threshold policies: one per distinct offer, then
  // reject-all. Candidates' best responses are always thresholds here.
  std::vector<PureStrategy> ThresholdStrategies(int k) const;
  // Whether candidate k's strategy accepts `offer`.
  bool Accepts(int k, const PureStrategy& s, const Rational& offer) const;

  // Point-mass market play: (o(f), o(x)) per candidate.
  BehaviorStrategy MarketPlays(
      const std::vector<std::pair<Rational, Rational>>& pairs) const;
  BehaviorStrategy MarketPlays(const Rational& o_f, const Rational& o_x) const;
  BehaviorStrategy TrueMarket() const;

  StrategyProfile Profile(const PureStrategy& firm,
                          const std::vector<PureStrategy>& candidates,
                          const BehaviorStrategy& nature) const;

  // Bilateral games only: the belief shorthand as a full belief profile.
  BeliefProfile BeliefsFrom(const OutsideOptionBeliefs& b) const;

  // Point-mass belief grid for a profile. Firm: threshold policies per
  // candidate, and market play varying o(f). Candidate: the true firm and
  // co-candidate strategies, and market play varying o(x). Market options
  // keep the true play on reached market information sets; the closed-form
  // construction (o(f) = max grid, o(x) = offer) is listed first.
  BeliefGrid BeliefSpace(const StrategyProfile& profile) const;

  // Thresholds for candidates, true market, the belief space above.
  EnumerationOptions DefaultEnumeration(long long budget) const;

  EquilibriumOutcome Outcome(const StrategyProfile& profile) const;

  // Number of nonzero offers in a firm action.
  static int JobsOffered(const std::vector<Rational>& offers);

 private:
  friend HiringGame BuildMarket(const MarketSpec&, std::vector<std::string>,
                                std::vector<std::vector<Rational>>, long long);
  HiringGame(GameTree game) : game_(std::move(game)) {}

  GameTree game_;
  MarketSpec spec_;
  std::vector<std::string> candidates_;
  std::vector<std::vector<Rational>> firm_actions_;
  std::vector<std::pair<Rational, Rational>> market_pairs_;
  std::map<std::pair<int, Rational>, InfoSetId> candidate_infoset_;
  std::vector<InfoSetId> market_infoset_;
};

// Generic builder: the firm picks one of `firm_actions` (offer per
// candidate), candidates respond simultaneously, the market answers each
// rejection. Throws BudgetExceeded if the tree would exceed `node_budget`.
HiringGame BuildMarket(const MarketSpec& spec, std::vector<std::string> ids,
                       std::vector<std::vector<Rational>> firm_actions,
                       long long node_budget = 4'000'000);

// The two-player game M_{x,f}: firm offers a grid value to one candidate.
HiringGame BuildBilateralMarket(const MarketSpec& spec,
                                const std::string& candidate_id);

// The game M_X: the firm's strategy is a full map candidates -> grid.
HiringGame BuildSimultaneousMarket(const MarketSpec& spec,
                                   const Population& population,
                                   long long node_budget = 4'000'000);

// M_X with at most `cap` nonzero offers, all drawn from `allowed_offers`.
// Requires cap < |population|.
HiringGame ApplyJobCap(const MarketSpec& spec, const Population& population,
                       int cap,
                       std::vector<Rational> allowed_offers = {Rational(0),
                                                               Rational(3, 2)},
                       long long node_budget = 4'000'000);

// sum_{k <= cap} C(n, k) * (|allowed| - 1)^k; the firm strategy count of
// ApplyJobCap when 0 is allowed.
long long CappedStrategyCount(int n, int cap, int allowed_nonzero);

OutsideOptionBeliefs Prop1Beliefs(const Rational& offer);
bool Prop1Conditions(const OutsideOptionBeliefs& b);
bool Prop2Conditions(const OutsideOptionBeliefs& b,
                     const std::pair<Rational, Rational>& market,
                     const Rational& offer);
// Beliefs correct about the market (o(f), o(x)), firm threshold o(x),
// candidate expecting `offer`.
OutsideOptionBeliefs Prop2Beliefs(const std::pair<Rational, Rational>& market,
                                  const Rational& offer);

struct GroupStatistic {
  bool holds = true;
  // Per sensitive group; nullopt marks a vacuous group (Becker test only).
  std::map<std::string, std::optional<Rational>> by_group;
};

// Weighted mean of realized surplus (surplus times match probability) per
// group; holds iff all means are equal.
GroupStatistic StatisticalDiscriminationCheck(const Population& population,
                                              const EquilibriumOutcome& outcome,
                                              const MarketSpec& spec);

// Same comparison on potential surplus (every candidate matched).
GroupStatistic PotentialSurplusCheck(const Population& population,
                                     const MarketSpec& spec);

// Minimum surplus among matched candidates per group; groups without a
// match are vacuous. Holds iff all non-vacuous minima are equal.
GroupStatistic BeckerTest(const Population& population,
                          const EquilibriumOutcome& outcome,
                          const MarketSpec& spec);

}  // namespace fairgame

#endif  // FAIRGAME_HIRING_MARKET_H_

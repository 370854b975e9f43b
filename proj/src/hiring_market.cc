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

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "fairgame/errors.h"

namespace fairgame {
namespace {

const Rational kZero(0);
const Rational kMaxOption(3);

void CheckGrid(const std::vector<Rational>& grid, const std::string& what) {
  if (grid.empty()) throw ConfigError(what + " is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < kZero || grid[i] > kMaxOption) {
      throw ConfigError(what + " value " + grid[i].ToString() +
                        " outside [0,3]");
    }
    if (i > 0 && !(grid[i - 1] < grid[i])) {
      throw ConfigError(what + " must be strictly increasing");
    }
  }
}

void CheckOption(const Rational& v, const std::vector<Rational>& grid,
                 const std::string& what) {
  if (v < kZero || v > kMaxOption) {
    throw ConfigError(what + " " + v.ToString() + " outside [0,3]");
  }
  if (!std::binary_search(grid.begin(), grid.end(), v)) {
    throw ConfigError(what + " " + v.ToString() + " is not on the market grid");
  }
}

std::string PairLabel(const std::pair<Rational, Rational>& p) {
  return "(" + p.first.ToString() + "," + p.second.ToString() + ")";
}

// All maps candidates -> values, lexicographic (first candidate slowest).
std::vector<std::vector<Rational>> AllMappings(const std::vector<Rational>& values,
                                               int n, long long budget) {
  long long count = 1;
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<long long>(values.size());
    if (count > budget / k + 1) {
      throw BudgetExceeded("firm strategies", std::numeric_limits<long long>::max(),
                           budget);
    }
    count *= k;
  }
  if (count > budget) throw BudgetExceeded("firm strategies", count, budget);
  std::vector<std::vector<Rational>> out;
  std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Rational> g;
    for (auto d : digits) g.push_back(values[d]);
    out.push_back(std::move(g));
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++digits[i] < values.size()) break;
      digits[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace

std::vector<Rational> MarketSpec::GridFromStep(const Rational& step) {
  if (!step.IsPositive()) throw ConfigError("grid step must be positive");
  const Rational count = kMaxOption / step;
  if (count.Denominator() != "1") {
    throw ConfigError("grid step " + step.ToString() + " does not divide 3");
  }
  std::vector<Rational> grid;
  for (Rational v; v <= kMaxOption; v += step) grid.push_back(v);
  return grid;
}

MarketSpec MarketSpec::WithStep(const Rational& step) {
  MarketSpec spec;
  spec.offer_grid = GridFromStep(step);
  return spec;
}

Rational MarketSpec::OutsideOf(const std::string& id) const {
  auto it = candidate_outside.find(id);
  return it == candidate_outside.end() ? default_candidate_outside : it->second;
}

Rational MarketSpec::SurplusOf(const std::string& id) const {
  auto it = surplus.find(id);
  return it == surplus.end() ? default_surplus : it->second;
}

void MarketSpec::Validate() const {
  CheckGrid(offer_grid, "offer grid");
  CheckGrid(MarketGrid(), "market grid");
  CheckOption(firm_outside, MarketGrid(), "firm outside option");
  CheckOption(default_candidate_outside, MarketGrid(), "candidate outside option");
  for (const auto& [id, v] : candidate_outside) {
    CheckOption(v, MarketGrid(), "outside option of '" + id + "'");
  }
  if (default_surplus.IsNegative()) throw ConfigError("negative surplus");
  for (const auto& [id, v] : surplus) {
    if (v.IsNegative()) throw ConfigError("negative surplus for '" + id + "'");
  }
}

Rational FirmAcceptPayoff(const MarketSpec& spec, const Rational& offer) {
  return Rational(1) - spec.need_penalty - offer;
}
Rational CandidateAcceptPayoff(const MarketSpec& spec, const Rational& offer) {
  return offer + spec.need_penalty;
}
Rational FirmRejectPayoff(const MarketSpec& spec, const Rational& o_f) {
  return Rational(1) - spec.need_penalty - o_f;
}
Rational CandidateRejectPayoff(const MarketSpec& spec, const Rational& o_x) {
  return o_x + spec.need_penalty;
}

HiringGame BuildMarket(const MarketSpec& spec, std::vector<std::string> ids,
                       std::vector<std::vector<Rational>> firm_actions,
                       long long node_budget) {
  spec.Validate();
  if (ids.empty()) throw ConfigError("market needs at least one candidate");
  if (firm_actions.empty()) throw ConfigError("firm has no actions");
  const int n = static_cast<int>(ids.size());
  for (const auto& g : firm_actions) {
    if (static_cast<int>(g.size()) != n) {
      throw ConfigError("firm action must give one offer per candidate");
    }
    for (const auto& z : g) {
      if (z < kZero || z > kMaxOption) {
        throw ConfigError("offer " + z.ToString() + " outside [0,3]");
      }
    }
  }
  std::vector<std::pair<Rational, Rational>> pairs;
  for (const auto& a : spec.MarketGrid()) {
    for (const auto& b : spec.MarketGrid()) pairs.emplace_back(a, b);
  }
  // Leaves per firm action: (1 + |pairs|)^n; internal nodes at most as many.
  long double leaves = 1;
  for (int i = 0; i < n; ++i) leaves *= static_cast<long double>(pairs.size() + 1);
  const long double estimate = 2 * leaves * static_cast<long double>(firm_actions.size());
  if (estimate > static_cast<long double>(node_budget)) {
    throw BudgetExceeded("market game tree nodes",
                         estimate > 9e18L ? std::numeric_limits<long long>::max()
                                          : static_cast<long long>(estimate),
                         node_budget);
  }

  std::vector<std::string> players{"firm"};
  for (const auto& id : ids) players.push_back(id);
  HiringGame hg{GameTree(players)};
  hg.spec_ = spec;
  hg.candidates_ = ids;
  hg.firm_actions_ = firm_actions;
  hg.market_pairs_ = pairs;
  GameTree& game = hg.game_;

  std::vector<std::string> firm_labels;
  for (const auto& g : firm_actions) {
    if (n == 1) {
      firm_labels.push_back(g[0].ToString());
      continue;
    }
    std::string label;
    for (int k = 0; k < n; ++k) {
      if (k > 0) label += ";";
      label += ids[k] + "=" + g[k].ToString();
    }
    firm_labels.push_back(label);
  }
  const InfoSetId firm_set = game.AddInfoSet(kFirm, "firm", firm_labels);
  std::vector<std::string> pair_labels;
  for (const auto& p : pairs) pair_labels.push_back(PairLabel(p));
  for (int k = 0; k < n; ++k) {
    hg.market_infoset_.push_back(
        game.AddInfoSet(kNature, "market@" + ids[k], pair_labels));
  }
  auto candidate_set = [&](int k, const Rational& z) {
    auto key = std::make_pair(k, z);
    auto it = hg.candidate_infoset_.find(key);
    if (it != hg.candidate_infoset_.end()) return it->second;
    const InfoSetId h = game.AddInfoSet(hg.CandidatePlayer(k),
                                        ids[k] + "@" + z.ToString(),
                                        {"accept", "reject"});
    hg.candidate_infoset_.emplace(key, h);
    return h;
  };

  const NodeId root = game.AddDecision(firm_set);
  std::vector<bool> accepted(static_cast<std::size_t>(n));
  std::vector<std::size_t> chosen(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<NodeId, int>> market_unused;

  std::function<void(const std::vector<Rational>&, int, NodeId, int)> markets =
      [&](const std::vector<Rational>& g, int k, NodeId parent, int action) {
        while (k < n && accepted[k]) ++k;
        if (k == n) {
          std::vector<Rational> payoffs(static_cast<std::size_t>(n) + 1);
          for (int j = 0; j < n; ++j) {
            if (accepted[j]) {
              payoffs[0] += FirmAcceptPayoff(spec, g[j]);
              payoffs[j + 1] = CandidateAcceptPayoff(spec, g[j]);
            } else {
              const auto& p = pairs[chosen[j]];
              payoffs[0] += FirmRejectPayoff(spec, p.first);
              payoffs[j + 1] = CandidateRejectPayoff(spec, p.second);
            }
          }
          game.AddTerminal(std::move(payoffs), parent, action);
          return;
        }
        const NodeId node = game.AddDecision(hg.market_infoset_[k], parent, action);
        for (std::size_t a = 0; a < pairs.size(); ++a) {
          chosen[k] = a;
          markets(g, k + 1, node, static_cast<int>(a));
        }
      };
  std::function<void(const std::vector<Rational>&, int, NodeId, int)> responses =
      [&](const std::vector<Rational>& g, int k, NodeId parent, int action) {
        if (k == n) {
          markets(g, 0, parent, action);
          return;
        }
        const NodeId node = game.AddDecision(candidate_set(k, g[k]), parent, action);
        for (int a = 0; a < 2; ++a) {
          accepted[k] = (a == 0);
          responses(g, k + 1, node, a);
        }
      };
  for (std::size_t i = 0; i < firm_actions.size(); ++i) {
    responses(firm_actions[i], 0, root, static_cast<int>(i));
  }
  // Market information sets exist for every candidate, but a candidate who
  // is never able to reject would leave one without nodes; that cannot
  // happen since every response node has a reject branch.
  game.Finalize();
  return hg;
}

HiringGame BuildBilateralMarket(const MarketSpec& spec,
                                const std::string& candidate_id) {
  std::vector<std::vector<Rational>> actions;
  for (const auto& z : spec.offer_grid) actions.push_back({z});
  return BuildMarket(spec, {candidate_id}, std::move(actions));
}

HiringGame BuildSimultaneousMarket(const MarketSpec& spec,
                                   const Population& population,
                                   long long node_budget) {
  if (population.empty()) throw ConfigError("population is empty");
  spec.Validate();
  std::vector<std::string> ids;
  for (const auto& c : population.candidates) ids.push_back(c.id);
  auto actions = AllMappings(spec.offer_grid, static_cast<int>(ids.size()),
                             node_budget);
  return BuildMarket(spec, std::move(ids), std::move(actions), node_budget);
}

HiringGame ApplyJobCap(const MarketSpec& spec, const Population& population,
                       int cap, std::vector<Rational> allowed_offers,
                       long long node_budget) {
  if (population.empty()) throw ConfigError("population is empty");
  const int n = static_cast<int>(population.size());
  if (cap < 0) throw ConfigError("job cap must be non-negative");
  if (cap >= n) {
    throw ConfigError("job cap " + std::to_string(cap) +
                      " must be below the population size " + std::to_string(n));
  }
  std::sort(allowed_offers.begin(), allowed_offers.end());
  allowed_offers.erase(std::unique(allowed_offers.begin(), allowed_offers.end()),
                       allowed_offers.end());
  CheckGrid(allowed_offers, "allowed offers");
  std::vector<std::string> ids;
  for (const auto& c : population.candidates) ids.push_back(c.id);
  std::vector<std::vector<Rational>> actions;
  for (auto& g : AllMappings(allowed_offers, n, node_budget)) {
    if (HiringGame::JobsOffered(g) <= cap) actions.push_back(std::move(g));
  }
  return BuildMarket(spec, std::move(ids), std::move(actions), node_budget);
}

long long CappedStrategyCount(int n, int cap, int allowed_nonzero) {
  long long total = 0;
  for (int k = 0; k <= cap && k <= n; ++k) {
    long long binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
    long long power = 1;
    for (int i = 0; i < k; ++i) power *= allowed_nonzero;
    total += binom * power;
  }
  return total;
}

int HiringGame::JobsOffered(const std::vector<Rational>& offers) {
  return static_cast<int>(std::count_if(offers.begin(), offers.end(),
                                        [](const Rational& z) { return !z.IsZero(); }));
}

int HiringGame::CandidateIndex(const std::string& id) const {
  for (int k = 0; k < NumCandidates(); ++k) {
    if (candidates_[k] == id) return k;
  }
  throw ConfigError("unknown candidate '" + id + "'");
}

std::vector<Rational> HiringGame::OffersTo(int k) const {
  std::vector<Rational> out;
  for (const auto& [key, h] : candidate_infoset_) {
    if (key.first == k) out.push_back(key.second);
  }
  return out;  // map order: ascending offers
}

PureStrategy HiringGame::FirmPlays(const std::vector<Rational>& offers) const {
  for (std::size_t i = 0; i < firm_actions_.size(); ++i) {
    if (firm_actions_[i] == offers) {
      return PureStrategy{kFirm, {{game_.InfoSetByName("firm"), static_cast<int>(i)}}};
    }
  }
  throw ConfigError("offer vector is not a firm action of this game");
}

PureStrategy HiringGame::FirmOffers(const Rational& offer) const {
  if (NumCandidates() != 1) throw ConfigError("FirmOffers needs a bilateral game");
  return FirmPlays({offer});
}

std::optional<std::vector<Rational>> HiringGame::FirmOffersOf(
    const PureStrategy& s) const {
  if (s.player != kFirm || s.actions.size() != 1) return std::nullopt;
  return firm_actions_.at(static_cast<std::size_t>(s.actions.begin()->second));
}

PureStrategy HiringGame::CandidateThreshold(int k,
                                            std::optional<Rational> threshold) const {
  PureStrategy s{CandidatePlayer(k), {}};
  for (const auto& [key, h] : candidate_infoset_) {
    if (key.first != k) continue;
    s.actions[h] = (threshold && key.second >= *threshold) ? 0 : 1;
  }
  return s;
}

std::vector<PureStrategy> HiringGame::ThresholdStrategies(int k) const {
  std::vector<PureStrategy> out;
  for (const auto& z : OffersTo(k)) out.push_back(CandidateThreshold(k, z));
  out.push_back(CandidateThreshold(k, std::nullopt));
  return out;
}

bool HiringGame::Accepts(int k, const PureStrategy& s, const Rational& offer) const {
  return s.actions.at(candidate_infoset_.at({k, offer})) == 0;
}

BehaviorStrategy HiringGame::MarketPlays(
    const std::vector<std::pair<Rational, Rational>>& pairs) const {
  if (static_cast<int>(pairs.size()) != NumCandidates()) {
    throw ConfigError("market play needs one pair per candidate");
  }
  BehaviorStrategy b{kNature, {}};
  for (int k = 0; k < NumCandidates(); ++k) {
    auto it = std::find(market_pairs_.begin(), market_pairs_.end(), pairs[k]);
    if (it == market_pairs_.end()) {
      throw ConfigError("market action " + PairLabel(pairs[k]) +
                        " is not on the market grid");
    }
    std::vector<Rational> probs(market_pairs_.size());
    probs[static_cast<std::size_t>(it - market_pairs_.begin())] = Rational(1);
    b.probs.emplace(market_infoset_[k], std::move(probs));
  }
  return b;
}

BehaviorStrategy HiringGame::MarketPlays(const Rational& o_f,
                                         const Rational& o_x) const {
  return MarketPlays(std::vector<std::pair<Rational, Rational>>(
      static_cast<std::size_t>(NumCandidates()), {o_f, o_x}));
}

BehaviorStrategy HiringGame::TrueMarket() const {
  std::vector<std::pair<Rational, Rational>> pairs;
  for (const auto& id : candidates_) {
    pairs.emplace_back(spec_.firm_outside, spec_.OutsideOf(id));
  }
  return MarketPlays(pairs);
}

StrategyProfile HiringGame::Profile(const PureStrategy& firm,
                                    const std::vector<PureStrategy>& candidates,
                                    const BehaviorStrategy& nature) const {
  if (static_cast<int>(candidates.size()) != NumCandidates()) {
    throw ConfigError("profile needs one strategy per candidate");
  }
  StrategyProfile p;
  p.strategies.emplace(kFirm, firm);
  for (int k = 0; k < NumCandidates(); ++k) {
    p.strategies.emplace(CandidatePlayer(k), candidates[k]);
  }
  p.nature = nature;
  return p;
}

BeliefProfile HiringGame::BeliefsFrom(const OutsideOptionBeliefs& b) const {
  if (NumCandidates() != 1) {
    throw ConfigError("outside-option shorthand applies to bilateral games");
  }
  BeliefProfile out;
  out.emplace(kFirm, Beliefs::PointMass(
                         kFirm, {{CandidatePlayer(0),
                                  PureToBehavior(game_, CandidateThreshold(0, b.firm_threshold))},
                                 {kNature, MarketPlays(b.o_f_f, b.o_f_x)}}));
  out.emplace(CandidatePlayer(0),
              Beliefs::PointMass(CandidatePlayer(0),
                                 {{kFirm, PureToBehavior(game_, FirmOffers(b.candidate_offer))},
                                  {kNature, MarketPlays(b.o_x_f, b.o_x_x)}}));
  return out;
}

BeliefGrid HiringGame::BeliefSpace(const StrategyProfile& profile) const {
  BeliefGrid grid;
  grid.name = "point-mass beliefs: threshold policies x market grid";
  const auto reached = ReachedInformationSets(game_, profile);
  const auto truth_nature = profile.nature;
  const auto firm_support = SupportOf(game_, profile.strategies.at(kFirm));
  const auto offers = *FirmOffersOf(firm_support.front());
  const Rational top = spec_.MarketGrid().back();
  const auto& mgrid = spec_.MarketGrid();

  auto market_option = [&](const std::vector<std::pair<Rational, Rational>>& off_path) {
    BehaviorStrategy b = MarketPlays(off_path);
    for (int k = 0; k < NumCandidates(); ++k) {
      const InfoSetId h = market_infoset_[k];
      if (reached.contains(h)) b.probs[h] = truth_nature.probs.at(h);
    }
    return b;
  };
  // Firm payoffs read only o(f) and candidate payoffs only their own o(x),
  // so each side varies just its own component; the other stays at the
  // construction's value.
  bool on_grid = true;
  std::vector<std::pair<Rational, Rational>> construction;
  for (const auto& z : offers) {
    on_grid = on_grid && std::binary_search(mgrid.begin(), mgrid.end(), z);
    construction.emplace_back(top, on_grid ? z : mgrid.front());
  }
  std::vector<BehaviorStrategy> firm_market, candidate_market;
  if (on_grid) {
    firm_market.push_back(market_option(construction));
    candidate_market.push_back(market_option(construction));
  }
  for (auto it = mgrid.rbegin(); it != mgrid.rend(); ++it) {
    auto pairs = construction;
    for (auto& p : pairs) p.first = *it;
    firm_market.push_back(market_option(pairs));
  }
  for (const auto& v : mgrid) {
    auto pairs = construction;
    for (auto& p : pairs) p.second = v;
    candidate_market.push_back(market_option(pairs));
  }

  auto& firm = grid.options[kFirm];
  firm[kNature] = firm_market;
  for (int k = 0; k < NumCandidates(); ++k) {
    auto& opts = firm[CandidatePlayer(k)];
    opts.push_back(PureToBehavior(game_, CandidateThreshold(k, offers[k])));
    opts.push_back(InducedBehavior(game_, profile.strategies.at(CandidatePlayer(k))));
    for (const auto& s : ThresholdStrategies(k)) opts.push_back(PureToBehavior(game_, s));
  }
  for (int k = 0; k < NumCandidates(); ++k) {
    auto& mine = grid.options[CandidatePlayer(k)];
    mine[kNature] = candidate_market;
    mine[kFirm] = {InducedBehavior(game_, profile.strategies.at(kFirm))};
    for (int j = 0; j < NumCandidates(); ++j) {
      if (j == k) continue;
      mine[CandidatePlayer(j)] = {
          InducedBehavior(game_, profile.strategies.at(CandidatePlayer(j)))};
    }
  }
  return grid;
}

EnumerationOptions HiringGame::DefaultEnumeration(long long budget) const {
  EnumerationOptions options;
  options.nature = TrueMarket();
  for (int k = 0; k < NumCandidates(); ++k) {
    options.strategy_sets[CandidatePlayer(k)] = ThresholdStrategies(k);
  }
  options.belief_space = [this](const StrategyProfile& p) { return BeliefSpace(p); };
  options.budget = budget;
  return options;
}

EquilibriumOutcome HiringGame::Outcome(const StrategyProfile& profile) const {
  EquilibriumOutcome out;
  out.payoffs = EvaluateProfile(game_, profile);
  for (const auto& id : candidates_) out.match_probability[id] = Rational(0);
  for (const auto& [leaf, p] : OutcomeDistribution(game_, profile)) {
    // Walk up: a candidate node whose incoming child is "accept" matched.
    for (NodeId child = leaf; game_.node(child).parent != kNoNode;) {
      const NodeId parent = game_.node(child).parent;
      const PlayerId owner = game_.Owner(parent);
      if (owner != kFirm && owner != kNature &&
          game_.node(child).incoming_action == 0) {
        out.match_probability[candidates_[owner - 1]] += p;
      }
      child = parent;
    }
  }
  return out;
}

OutsideOptionBeliefs Prop1Beliefs(const Rational& offer) {
  if (offer < kZero || offer > kMaxOption) {
    throw ConfigError("offer " + offer.ToString() + " outside [0,3]");
  }
  return OutsideOptionBeliefs{kMaxOption, offer, offer, kMaxOption, offer, offer};
}

bool Prop1Conditions(const OutsideOptionBeliefs& b) {
  return b.o_f_f >= b.o_f_x && b.o_f_x >= b.o_x_x;
}

bool Prop2Conditions(const OutsideOptionBeliefs& b,
                     const std::pair<Rational, Rational>& market,
                     const Rational& offer) {
  const auto& [o_f, o_x] = market;
  return o_f == b.o_f_f && o_f == b.o_x_f && o_f <= o_x && o_x == b.o_f_x &&
         o_x == b.o_x_x && offer <= o_f;
}

OutsideOptionBeliefs Prop2Beliefs(const std::pair<Rational, Rational>& market,
                                  const Rational& offer) {
  const auto& [o_f, o_x] = market;
  return OutsideOptionBeliefs{o_f, o_x, o_x, o_f, o_x, offer};
}

GroupStatistic StatisticalDiscriminationCheck(const Population& population,
                                              const EquilibriumOutcome& outcome,
                                              const MarketSpec& spec) {
  std::map<std::string, std::pair<Rational, Rational>> acc;  // mass, weight
  for (const auto& c : population.candidates) {
    auto it = outcome.match_probability.find(c.id);
    if (it == outcome.match_probability.end()) {
      throw ConfigError("outcome has no entry for candidate '" + c.id + "'");
    }
    auto& [mass, weight] = acc[c.sensitive];
    mass += c.weight * spec.SurplusOf(c.id) * it->second;
    weight += c.weight;
  }
  GroupStatistic out;
  std::optional<Rational> first;
  for (const auto& [group, mw] : acc) {
    const Rational mean = mw.first / mw.second;
    out.by_group[group] = mean;
    if (first && *first != mean) out.holds = false;
    if (!first) first = mean;
  }
  return out;
}

GroupStatistic PotentialSurplusCheck(const Population& population,
                                     const MarketSpec& spec) {
  EquilibriumOutcome all_matched;
  for (const auto& c : population.candidates) {
    all_matched.match_probability[c.id] = Rational(1);
  }
  return StatisticalDiscriminationCheck(population, all_matched, spec);
}

GroupStatistic BeckerTest(const Population& population,
                          const EquilibriumOutcome& outcome,
                          const MarketSpec& spec) {
  GroupStatistic out;
  for (const auto& c : population.candidates) {
    auto& slot = out.by_group[c.sensitive];
    auto it = outcome.match_probability.find(c.id);
    if (it == outcome.match_probability.end()) {
      throw ConfigError("outcome has no entry for candidate '" + c.id + "'");
    }
    if (!it->second.IsPositive()) continue;
    const Rational s = spec.SurplusOf(c.id);
    slot = slot ? Min(*slot, s) : s;
  }
  std::optional<Rational> first;
  for (const auto& [group, m] : out.by_group) {
    if (!m) continue;
    if (first && *first != *m) out.holds = false;
    if (!first) first = m;
  }
  return out;
}

}  // namespace fairgame

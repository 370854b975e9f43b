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

#include "fairgame/equilibrium.h"

#include <limits>
#include <set>

#include "fairgame/errors.h"

namespace fairgame {
namespace {

std::vector<PlayerId> Opponents(const GameTree& game, PlayerId player) {
  std::vector<PlayerId> out;
  if (!game.InfoSetsOf(kNature).empty()) out.push_back(kNature);
  for (PlayerId p = 0; p < game.NumPlayers(); ++p) {
    if (p != player) out.push_back(p);
  }
  return out;
}

BehaviorStrategy TrueBehavior(const GameTree& game,
                              const StrategyProfile& profile, PlayerId j) {
  if (j == kNature) return profile.nature;
  return InducedBehavior(game, profile.strategies.at(j));
}

StrategyProfile WithStrategy(StrategyProfile profile, PureStrategy s) {
  const PlayerId p = s.player;
  profile.strategies.insert_or_assign(p, Strategy(std::move(s)));
  return profile;
}

EquilibriumVerdict BestResponseAgainstReach(
    const GameTree& game, PlayerId player, const PureStrategy& strategy,
    const std::map<NodeId, Rational>& reach) {
  const Rational current = ValueAgainstReach(game, player, strategy, reach);
  BestResponseResult best = BestResponse(game, player, reach, &strategy);
  if (best.value > current) {
    FailureWitness w;
    w.kind = FailureWitness::Kind::kProfitableDeviation;
    w.player = player;
    w.current_value = current;
    w.deviation_value = best.value;
    w.deviation = std::move(best.strategy);
    w.message = game.PlayerName(player) + " gains " +
                (w.deviation_value - current).ToString() + " by deviating";
    return EquilibriumVerdict::Fail(std::move(w));
  }
  return EquilibriumVerdict::Pass();
}

// Condition (b): beliefs put probability 1 on the true behavior at every
// opponent information set reached by (s, true opponents).
EquilibriumVerdict CheckBeliefsOnPath(const GameTree& game,
                                      const StrategyProfile& profile,
                                      const PureStrategy& s,
                                      const Beliefs& beliefs) {
  const auto reached = ReachedInformationSets(game, WithStrategy(profile, s));
  for (InfoSetId h : reached) {
    const PlayerId j = game.infoset(h).player;
    if (j == s.player) continue;
    const auto truth = TrueBehavior(game, profile, j).probs.at(h);
    for (const auto& [b, w] : beliefs.about.at(j)) {
      if (b.probs.at(h) != truth) {
        FailureWitness fw;
        fw.kind = FailureWitness::Kind::kIncorrectBelief;
        fw.player = s.player;
        fw.infoset = h;
        fw.opponent = j;
        fw.message = game.PlayerName(s.player) + " holds an incorrect belief at "
                     "reached information set '" + game.infoset(h).name + "'";
        return EquilibriumVerdict::Fail(std::move(fw));
      }
    }
  }
  return EquilibriumVerdict::Pass();
}

}  // namespace

std::string ConceptName(SolutionConcept c) {
  return c == SolutionConcept::kNash ? "nash" : "sce";
}

SolutionConcept ParseConcept(const std::string& name) {
  if (name == "nash") return SolutionConcept::kNash;
  if (name == "sce") return SolutionConcept::kSce;
  throw ConfigError("unknown solution concept '" + name + "' (nash|sce)");
}

EquilibriumVerdict IsBestResponse(const GameTree& game, PlayerId player,
                                  const PureStrategy& strategy,
                                  const Beliefs& beliefs) {
  ValidatePure(game, strategy);
  if (strategy.player != player) {
    throw ConfigError("strategy belongs to another player");
  }
  return BestResponseAgainstReach(game, player, strategy,
                                  OpponentReach(game, player, beliefs));
}

std::vector<PureStrategy> SupportOf(const GameTree& game, const Strategy& s,
                                    long long budget) {
  if (const auto* p = std::get_if<PureStrategy>(&s)) return {*p};
  std::set<PureStrategy> out;
  if (const auto* m = std::get_if<MixedStrategy>(&s)) {
    for (const auto& [pure, w] : m->support) out.insert(pure);
    return {out.begin(), out.end()};
  }
  const auto& b = std::get<BehaviorStrategy>(s);
  for (auto& pure : EnumeratePureStrategies(game, b.player, budget)) {
    bool positive = true;
    for (const auto& [h, a] : pure.actions) {
      if (b.probs.at(h).at(a).IsZero()) {
        positive = false;
        break;
      }
    }
    if (positive) out.insert(std::move(pure));
  }
  return {out.begin(), out.end()};
}

EquilibriumVerdict CheckSce(const GameTree& game,
                            const StrategyProfile& profile,
                            const BeliefProfile& beliefs) {
  ValidateProfile(game, profile);
  for (PlayerId i = 0; i < game.NumPlayers(); ++i) {
    auto it = beliefs.find(i);
    if (it == beliefs.end()) {
      throw ConfigError("no beliefs for player " + game.PlayerName(i));
    }
    ValidateBeliefs(game, it->second);
    const auto reach = OpponentReach(game, i, it->second, false);
    for (const auto& s : SupportOf(game, profile.strategies.at(i))) {
      auto on_path = CheckBeliefsOnPath(game, profile, s, it->second);
      if (!on_path.holds) return on_path;
      auto br = BestResponseAgainstReach(game, i, s, reach);
      if (!br.holds) return br;
    }
  }
  return EquilibriumVerdict::Pass();
}

EquilibriumVerdict CheckNash(const GameTree& game,
                             const StrategyProfile& profile) {
  ValidateProfile(game, profile);
  for (PlayerId i = 0; i < game.NumPlayers(); ++i) {
    std::map<PlayerId, BehaviorStrategy> truth;
    for (PlayerId j : Opponents(game, i)) truth[j] = TrueBehavior(game, profile, j);
    const auto reach =
        OpponentReach(game, i, Beliefs::PointMass(i, truth), false);
    for (const auto& s : SupportOf(game, profile.strategies.at(i))) {
      auto br = BestResponseAgainstReach(game, i, s, reach);
      if (!br.holds) return br;
    }
  }
  return EquilibriumVerdict::Pass();
}

std::optional<BeliefProfile> FindSceWitness(const GameTree& game,
                                            const StrategyProfile& profile,
                                            const BeliefGrid& grid,
                                            long long budget) {
  ValidateProfile(game, profile);
  BeliefProfile witness;
  for (PlayerId i = 0; i < game.NumPlayers(); ++i) {
    const auto support = SupportOf(game, profile.strategies.at(i));
    std::set<InfoSetId> reached;
    for (const auto& s : support) {
      reached.merge(ReachedInformationSets(game, WithStrategy(profile, s)));
    }
    auto owner_it = grid.options.find(i);
    std::vector<PlayerId> opponents = Opponents(game, i);
    std::vector<std::vector<const BehaviorStrategy*>> pruned;
    long long count = 1;
    for (PlayerId j : opponents) {
      const std::vector<BehaviorStrategy>* raw = nullptr;
      if (owner_it != grid.options.end()) {
        auto it = owner_it->second.find(j);
        if (it != owner_it->second.end()) raw = &it->second;
      }
      if (raw == nullptr || raw->empty()) {
        throw ConfigError("empty belief space for " + game.PlayerName(i) +
                          " about " + game.PlayerName(j));
      }
      const BehaviorStrategy truth = TrueBehavior(game, profile, j);
      std::vector<const BehaviorStrategy*> keep;
      for (const auto& b : *raw) {
        if (b.player != j) throw ConfigError("belief option for wrong opponent");
        ValidateBehavior(game, b);
        bool agrees = true;
        for (InfoSetId h : reached) {
          if (game.infoset(h).player == j && b.probs.at(h) != truth.probs.at(h)) {
            agrees = false;
            break;
          }
        }
        bool duplicate = false;
        for (const auto* k : keep) duplicate = duplicate || (*k == b);
        if (agrees && !duplicate) keep.push_back(&b);
      }
      if (keep.empty()) return std::nullopt;
      count = count > std::numeric_limits<long long>::max() /
                          static_cast<long long>(keep.size())
                  ? std::numeric_limits<long long>::max()
                  : count * static_cast<long long>(keep.size());
      pruned.push_back(std::move(keep));
    }
    if (count > budget) {
      throw BudgetExceeded("belief grid for " + game.PlayerName(i), count, budget);
    }
    std::vector<std::size_t> digits(pruned.size(), 0);
    std::optional<Beliefs> found;
    while (!found) {
      Beliefs b;
      b.owner = i;
      for (std::size_t k = 0; k < pruned.size(); ++k) {
        b.about[opponents[k]].emplace_back(*pruned[k][digits[k]], Rational(1));
      }
      const auto reach = OpponentReach(game, i, b, false);
      bool ok = true;
      for (const auto& s : support) {
        if (!BestResponseAgainstReach(game, i, s, reach).holds) {
          ok = false;
          break;
        }
      }
      if (ok) {
        found = std::move(b);
        break;
      }
      int k = static_cast<int>(digits.size()) - 1;
      for (; k >= 0; --k) {
        if (++digits[k] < pruned[k].size()) break;
        digits[k] = 0;
      }
      if (k < 0) break;
    }
    if (!found) return std::nullopt;
    witness.emplace(i, std::move(*found));
  }
  return witness;
}

std::vector<EquilibriumEntry> EnumerateEquilibria(
    const GameTree& game, SolutionConcept solution_concept,
    const EnumerationOptions& options) {
  if (solution_concept == SolutionConcept::kSce && !options.belief_space) {
    throw ConfigError("SCE enumeration needs a belief space");
  }
  std::vector<std::vector<PureStrategy>> sets;
  long long count = 1;
  for (PlayerId p = 0; p < game.NumPlayers(); ++p) {
    auto it = options.strategy_sets.find(p);
    sets.push_back(it != options.strategy_sets.end()
                       ? it->second
                       : EnumeratePureStrategies(game, p, options.budget));
    if (sets.back().empty()) return {};
    const auto k = static_cast<long long>(sets.back().size());
    count = count > std::numeric_limits<long long>::max() / k
                ? std::numeric_limits<long long>::max()
                : count * k;
  }
  if (count > options.budget) {
    throw BudgetExceeded("pure strategy profiles", count, options.budget);
  }
  std::vector<EquilibriumEntry> out;
  std::vector<std::size_t> digits(sets.size(), 0);
  while (true) {
    StrategyProfile profile;
    profile.nature = options.nature;
    for (std::size_t p = 0; p < sets.size(); ++p) {
      profile.strategies.emplace(static_cast<PlayerId>(p), sets[p][digits[p]]);
    }
    if (solution_concept == SolutionConcept::kNash) {
      if (CheckNash(game, profile).holds) {
        auto payoffs = EvaluateProfile(game, profile);
        out.push_back({std::move(profile), std::move(payoffs), std::nullopt});
      }
    } else {
      auto beliefs = FindSceWitness(game, profile, options.belief_space(profile),
                                    options.budget);
      if (beliefs) {
        auto payoffs = EvaluateProfile(game, profile);
        out.push_back({std::move(profile), std::move(payoffs), std::move(beliefs)});
      }
    }
    int k = static_cast<int>(digits.size()) - 1;
    for (; k >= 0; --k) {
      if (++digits[k] < sets[k].size()) break;
      digits[k] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

}  // namespace fairgame

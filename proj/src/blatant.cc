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

#include "fairgame/blatant.h"

#include "fairgame/errors.h"

namespace fairgame {
namespace {

void CheckArgs(const EquilibriumSet& set, std::size_t member, PlayerId player) {
  if (set.game == nullptr) throw ConfigError("equilibrium set has no game");
  if (player < 0 || player >= set.game->NumPlayers()) {
    throw ConfigError("player " + std::to_string(player) + " is not in the game");
  }
  if (member >= set.members.size()) {
    throw ConfigError("equilibrium " + std::to_string(member) + " is not in the set");
  }
}

Rational MinPayoff(const std::vector<Rational>& payoffs) {
  Rational m = payoffs.front();
  for (const auto& p : payoffs) m = Min(m, p);
  return m;
}

// Among qualifying members, the one whose worst-off player does best;
// earliest on ties.
template <typename Qualifies>
BlatantVerdict Decide(const EquilibriumSet& set, std::size_t member, PlayerId player,
                      Qualifies qualifies) {
  const auto& pi = set.members[member].payoffs;
  if (pi[player].IsPositive()) return {BlatantStatus::kNotFlagged, std::nullopt};
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < set.members.size(); ++k) {
    if (!qualifies(set.members[k].payoffs, pi)) continue;
    if (!best || MinPayoff(set.members[k].payoffs) > MinPayoff(set.members[*best].payoffs)) {
      best = k;
    }
  }
  if (!best) return {BlatantStatus::kNotFlaggedWithinSearchedSpace, std::nullopt};
  return {BlatantStatus::kFlagged, best};
}

}  // namespace

std::size_t EquilibriumSet::IndexOf(const StrategyProfile& profile) const {
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (members[k].profile.strategies == profile.strategies &&
        members[k].profile.nature == profile.nature) {
      return k;
    }
  }
  throw ConfigError("profile is not a member of the equilibrium set");
}

EquilibriumSet EnumerateEquilibriumSet(const GameTree& game,
                                       SolutionConcept solution_concept,
                                       const EnumerationOptions& options,
                                       std::string belief_space_name) {
  EquilibriumSet set;
  set.game = &game;
  set.solution_concept = solution_concept;
  if (solution_concept == SolutionConcept::kSce) set.belief_space = std::move(belief_space_name);
  set.members = EnumerateEquilibria(game, solution_concept, options);
  return set;
}

std::string StatusName(BlatantStatus s) {
  switch (s) {
    case BlatantStatus::kFlagged: return "flagged";
    case BlatantStatus::kNotFlagged: return "not_flagged";
    case BlatantStatus::kNotFlaggedWithinSearchedSpace:
      return "not_flagged_within_searched_space";
  }
  return "unknown";
}

BlatantVerdict IsBlatantlyUnfairTwoPlayer(const EquilibriumSet& set,
                                          std::size_t member, PlayerId player) {
  CheckArgs(set, member, player);
  if (set.game->NumPlayers() != 2) {
    throw ConfigError("two-player definition needs exactly two payoff-bearing players");
  }
  return Decide(set, member, player, [](const auto& alt, const auto&) {
    return alt[0].IsPositive() && alt[1].IsPositive();
  });
}

BlatantVerdict IsBlatantlyUnfairMulti(const EquilibriumSet& set,
                                      std::size_t member, PlayerId player) {
  CheckArgs(set, member, player);
  return Decide(set, member, player, [player](const auto& alt, const auto& pi) {
    if (!alt[player].IsPositive()) return false;
    for (std::size_t j = 0; j < alt.size(); ++j) {
      if (static_cast<PlayerId>(j) == player) continue;
      if (!(alt[j] >= pi[j] || alt[j].IsPositive())) return false;
    }
    return true;
  });
}

std::vector<BlatantFlag> DetectBlatantUnfairness(const EquilibriumSet& set) {
  std::vector<BlatantFlag> flags;
  if (set.members.empty()) return flags;
  const int n = set.game->NumPlayers();
  for (std::size_t k = 0; k < set.members.size(); ++k) {
    for (PlayerId p = 0; p < n; ++p) {
      auto v = n == 2 ? IsBlatantlyUnfairTwoPlayer(set, k, p)
                      : IsBlatantlyUnfairMulti(set, k, p);
      if (v.flagged()) flags.push_back({k, p, *v.witness});
    }
  }
  return flags;
}

}  // namespace fairgame

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

#ifndef FAIRGAME_BLATANT_H_
#define FAIRGAME_BLATANT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fairgame/equilibrium.h"
#include "fairgame/game.h"

namespace fairgame {

struct EquilibriumSet {
  const GameTree* game = nullptr;
  SolutionConcept solution_concept = SolutionConcept::kSce;
  std::string belief_space;  // empty for Nash
  std::vector<EquilibriumEntry> members;

  // Index of the member with this profile's strategies; ConfigError if none.
  std::size_t IndexOf(const StrategyProfile& profile) const;
};

EquilibriumSet EnumerateEquilibriumSet(const GameTree& game,
                                       SolutionConcept solution_concept,
                                       const EnumerationOptions& options,
                                       std::string belief_space_name = "");

enum class BlatantStatus {
  kFlagged,
  kNotFlagged,                     // payoff is positive
  kNotFlaggedWithinSearchedSpace,  // payoff <= 0, no witness in the set
};

std::string StatusName(BlatantStatus s);

struct BlatantVerdict {
  BlatantStatus status = BlatantStatus::kNotFlagged;
  std::optional<std::size_t> witness;  // member index when flagged

  bool flagged() const { return status == BlatantStatus::kFlagged; }
};

// Game with exactly two payoff-bearing players.
BlatantVerdict IsBlatantlyUnfairTwoPlayer(const EquilibriumSet& set,
                                          std::size_t member, PlayerId player);

BlatantVerdict IsBlatantlyUnfairMulti(const EquilibriumSet& set,
                                      std::size_t member, PlayerId player);

struct BlatantFlag {
  std::size_t equilibrium;
  PlayerId player;
  std::size_t witness;
};

// Every flagged (equilibrium, player), equilibria in set order, players
// ascending. The two-player Def applies to two-player games, the
// multi-player Def otherwise.
std::vector<BlatantFlag> DetectBlatantUnfairness(const EquilibriumSet& set);

}  // namespace fairgame

#endif  // FAIRGAME_BLATANT_H_

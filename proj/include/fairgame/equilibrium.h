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

#ifndef FAIRGAME_EQUILIBRIUM_H_
#define FAIRGAME_EQUILIBRIUM_H_

// Nash and (unitary) self-confirming equilibrium checks with explicit
// beliefs, belief-witness search over point-mass belief grids, and
// exhaustive pure-profile enumeration.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairgame/game.h"

namespace fairgame {

enum class SolutionConcept { kNash, kSce };

std::string ConceptName(SolutionConcept c);
SolutionConcept ParseConcept(const std::string& name);

struct FailureWitness {
  enum class Kind { kProfitableDeviation, kIncorrectBelief, kNoBeliefInSpace };
  Kind kind = Kind::kProfitableDeviation;
  PlayerId player = 0;
  // kProfitableDeviation: the strictly better strategy and both values.
  std::optional<PureStrategy> deviation;
  Rational current_value;
  Rational deviation_value;
  // kIncorrectBelief: the reached information set and its owner.
  InfoSetId infoset = -1;
  PlayerId opponent = 0;
  std::string message;
};

struct EquilibriumVerdict {
  bool holds = true;
  std::optional<FailureWitness> witness;  // present iff !holds

  static EquilibriumVerdict Pass() { return {}; }
  static EquilibriumVerdict Fail(FailureWitness w) { return {false, std::move(w)}; }
};

using BeliefProfile = std::map<PlayerId, Beliefs>;

// Holds iff no pure strategy of `player` does strictly better against the
// belief. Ties pass.
EquilibriumVerdict IsBestResponse(const GameTree& game, PlayerId player,
                                  const PureStrategy& strategy,
                                  const Beliefs& beliefs);

// Pure strategies in the support of a profile entry, canonical order.
std::vector<PureStrategy> SupportOf(const GameTree& game, const Strategy& s,
                                    long long budget = 1'000'000);

EquilibriumVerdict CheckSce(const GameTree& game,
                            const StrategyProfile& profile,
                            const BeliefProfile& beliefs);

EquilibriumVerdict CheckNash(const GameTree& game,
                             const StrategyProfile& profile);

// Point-mass belief candidates: options[owner][opponent] lists behavior
// strategies the owner may believe the opponent plays. Order is the search
// order.
struct BeliefGrid {
  std::string name;
  std::map<PlayerId, std::map<PlayerId, std::vector<BehaviorStrategy>>> options;
};

// Exhaustive search of the grid. Options disagreeing with the true play on
// a reached information set are pruned up front, which cannot lose a
// witness. Returns the first witness in grid order, or nullopt when the
// grid holds none. Throws ConfigError if some (owner, opponent) has no
// options and BudgetExceeded if a player's pruned product exceeds `budget`.
std::optional<BeliefProfile> FindSceWitness(const GameTree& game,
                                            const StrategyProfile& profile,
                                            const BeliefGrid& grid,
                                            long long budget = 1'000'000);

struct EnumerationOptions {
  BehaviorStrategy nature{kNature, {}};
  // Optional per-player restriction of the enumerated strategies. Deviation
  // checks still range over the full strategy space.
  std::map<PlayerId, std::vector<PureStrategy>> strategy_sets;
  // Required for kSce; built per profile.
  std::function<BeliefGrid(const StrategyProfile&)> belief_space;
  long long budget = 1'000'000;
};

struct EquilibriumEntry {
  StrategyProfile profile;
  std::vector<Rational> payoffs;
  std::optional<BeliefProfile> beliefs;
};

// All pure profiles passing the concept, lexicographic in canonical
// strategy order (player 0 slowest).
std::vector<EquilibriumEntry> EnumerateEquilibria(
    const GameTree& game, SolutionConcept solution_concept,
    const EnumerationOptions& options);

}  // namespace fairgame

#endif  // FAIRGAME_EQUILIBRIUM_H_

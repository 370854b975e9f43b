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

#ifndef FAIRGAME_GAME_H_
#define FAIRGAME_GAME_H_

// Finite complete-information extensive-form games with perfect recall.
//
// Players are numbered 0..NumPlayers()-1 and every leaf carries one payoff
// per player. Nature (kNature) owns decision nodes like any other player but
// has no payoffs; its behavior is always supplied as part of a profile.

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "fairgame/rational.h"

namespace fairgame {

using PlayerId = int;
using InfoSetId = int;
using NodeId = int;

inline constexpr PlayerId kNature = -1;
inline constexpr NodeId kNoNode = -1;

struct InfoSet {
  InfoSetId id = 0;
  PlayerId player = 0;
  std::string name;
  std::vector<std::string> actions;
  std::vector<NodeId> nodes;
};

struct Node {
  bool terminal = false;
  InfoSetId infoset = -1;          // decision nodes only
  std::vector<NodeId> children;    // aligned with the infoset's actions
  std::vector<Rational> payoffs;   // terminal nodes only
  NodeId parent = kNoNode;
  int incoming_action = -1;
};

class GameTree {
 public:
  explicit GameTree(std::vector<std::string> player_names);

  // Construction. The first node added becomes the root; every later node
  // names its parent and the action leading to it.
  InfoSetId AddInfoSet(PlayerId player, std::string name,
                       std::vector<std::string> actions);
  NodeId AddDecision(InfoSetId infoset, NodeId parent = kNoNode,
                     int action = -1);
  NodeId AddTerminal(std::vector<Rational> payoffs, NodeId parent = kNoNode,
                     int action = -1);

  // Checks that the tree is complete and has perfect recall, then caches the
  // per-player sequence structure. Throws ConfigError on failure.
  void Finalize();

  int NumPlayers() const { return static_cast<int>(player_names_.size()); }
  const std::string& PlayerName(PlayerId p) const;
  PlayerId PlayerByName(const std::string& name) const;

  NodeId Root() const { return 0; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  int NumNodes() const { return static_cast<int>(nodes_.size()); }
  const InfoSet& infoset(InfoSetId id) const { return infosets_.at(id); }
  int NumInfoSets() const { return static_cast<int>(infosets_.size()); }
  InfoSetId InfoSetByName(const std::string& name) const;
  int ActionIndex(InfoSetId id, const std::string& action) const;
  const std::vector<InfoSetId>& InfoSetsOf(PlayerId player) const;
  const std::vector<NodeId>& Leaves() const { return leaves_; }
  PlayerId Owner(NodeId id) const;

  // Sequence id of (infoset, action): the last own move on a path. -1 is the
  // empty sequence. Valid only after Finalize().
  int SequenceId(InfoSetId h, int action) const {
    return sequence_offset_.at(h) + action;
  }
  std::pair<InfoSetId, int> SequenceOf(int seq) const;
  // Player's last own move on the path to `node` (exclusive), as a sequence.
  int LastSequence(PlayerId player, NodeId node) const;
  // The parent sequence shared by every node of an infoset.
  int ParentSequence(InfoSetId h) const { return parent_sequence_.at(h); }
  bool finalized() const { return finalized_; }

 private:
  void Link(NodeId child, NodeId parent, int action);

  std::vector<std::string> player_names_;
  std::vector<Node> nodes_;
  std::vector<InfoSet> infosets_;
  std::map<std::string, InfoSetId> infoset_by_name_;
  std::map<PlayerId, std::vector<InfoSetId>> infosets_of_;
  std::vector<NodeId> leaves_;
  std::vector<int> sequence_offset_;
  std::vector<std::pair<InfoSetId, int>> sequences_;
  std::vector<int> parent_sequence_;
  // last_sequence_[node][player] for non-Nature players.
  std::vector<std::vector<int>> last_sequence_;
  bool finalized_ = false;
};

struct PureStrategy {
  PlayerId player = 0;
  std::map<InfoSetId, int> actions;

  friend bool operator==(const PureStrategy&, const PureStrategy&) = default;
  friend bool operator<(const PureStrategy& a, const PureStrategy& b) {
    return std::tie(a.player, a.actions) < std::tie(b.player, b.actions);
  }
};

struct BehaviorStrategy {
  PlayerId player = 0;
  std::map<InfoSetId, std::vector<Rational>> probs;

  friend bool operator==(const BehaviorStrategy&,
                         const BehaviorStrategy&) = default;
};

struct MixedStrategy {
  PlayerId player = 0;
  std::vector<std::pair<PureStrategy, Rational>> support;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;
};

using Strategy = std::variant<PureStrategy, MixedStrategy, BehaviorStrategy>;

PlayerId StrategyPlayer(const Strategy& s);

struct StrategyProfile {
  std::map<PlayerId, Strategy> strategies;  // one per non-Nature player
  BehaviorStrategy nature{kNature, {}};
};

// A player's belief: for each opponent (Nature included), a finite-support
// distribution over that opponent's behavior strategies. Opponents are
// believed to act independently.
struct Beliefs {
  PlayerId owner = 0;
  std::map<PlayerId, std::vector<std::pair<BehaviorStrategy, Rational>>> about;

  static Beliefs PointMass(PlayerId owner,
                           const std::map<PlayerId, BehaviorStrategy>& about);
};

// Validation. All throw ConfigError naming the offending item.
void ValidatePure(const GameTree& game, const PureStrategy& s);
void ValidateBehavior(const GameTree& game, const BehaviorStrategy& s);
void ValidateMixed(const GameTree& game, const MixedStrategy& s);
void ValidateProfile(const GameTree& game, const StrategyProfile& profile);
void ValidateBeliefs(const GameTree& game, const Beliefs& beliefs);

BehaviorStrategy PureToBehavior(const GameTree& game, const PureStrategy& s);

// Every pure strategy of `player` in canonical (lexicographic) order.
// Throws BudgetExceeded when the count exceeds `budget`.
std::vector<PureStrategy> EnumeratePureStrategies(const GameTree& game,
                                                  PlayerId player,
                                                  long long budget);

// Distribution over leaves induced by the profile. Mixed strategies are
// expanded over their supports, not converted to behavior strategies.
std::map<NodeId, Rational> OutcomeDistribution(const GameTree& game,
                                               const StrategyProfile& profile);

// Exact expected payoff of every player.
std::vector<Rational> EvaluateProfile(const GameTree& game,
                                      const StrategyProfile& profile);

// Information sets (any owner, Nature included) reached with positive
// probability.
std::set<InfoSetId> ReachedInformationSets(const GameTree& game,
                                           const StrategyProfile& profile);

// Behavior strategy inducing the same outcome distribution as `mixed`
// against every opposing profile. Information sets the mixture never
// reaches get the unconditional action frequencies of the mixture.
BehaviorStrategy ToBehavior(const GameTree& game, const MixedStrategy& mixed);

// The behavior strategy a profile entry induces (identity for behavior
// strategies).
BehaviorStrategy InducedBehavior(const GameTree& game, const Strategy& s);

// Leaf weights W(leaf) = E_belief[probability that the opponents and Nature
// play the leaf's path], with the owner's own moves left free. The value of
// any pure strategy of the owner is the W-weighted payoff over the leaves it
// is consistent with.
// `validate` may be switched off by callers that already validated the
// beliefs (belief-space searches call this in a tight loop).
std::map<NodeId, Rational> OpponentReach(const GameTree& game, PlayerId player,
                                         const Beliefs& beliefs,
                                         bool validate = true);

Rational ValueAgainstReach(const GameTree& game, PlayerId player,
                           const PureStrategy& s,
                           const std::map<NodeId, Rational>& reach);

struct BestResponseResult {
  PureStrategy strategy;
  Rational value;
};

// Best response to opponent reach weights by backward induction over the
// player's own sequences. Ties keep `prefer`'s action where it has one.
BestResponseResult BestResponse(const GameTree& game, PlayerId player,
                                const std::map<NodeId, Rational>& reach,
                                const PureStrategy* prefer = nullptr);

Rational ExpectedUtilityUnderBelief(const GameTree& game, PlayerId player,
                                    const PureStrategy& s,
                                    const Beliefs& beliefs);

}  // namespace fairgame

#endif  // FAIRGAME_GAME_H_

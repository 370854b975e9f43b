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

#include "fairgame/game.h"

#include <functional>
#include <limits>

#include "fairgame/distribution.h"
#include "fairgame/errors.h"

namespace fairgame {
namespace {

// Behavior strategy per owner; index 0 is Nature, index p+1 is player p.
using BehaviorTable = std::vector<const BehaviorStrategy*>;

std::size_t Slot(PlayerId p) { return static_cast<std::size_t>(p + 1); }

void Walk(const GameTree& game, NodeId id, const Rational& weight,
          const BehaviorTable& behavior, PlayerId free_player,
          std::map<NodeId, Rational>* leaves, std::set<InfoSetId>* reached) {
  const Node& n = game.node(id);
  if (n.terminal) {
    if (leaves != nullptr) AddMass(*leaves, id, weight);
    return;
  }
  if (reached != nullptr) reached->insert(n.infoset);
  const PlayerId owner = game.infoset(n.infoset).player;
  if (owner == free_player) {
    for (NodeId child : n.children) {
      Walk(game, child, weight, behavior, free_player, leaves, reached);
    }
    return;
  }
  const BehaviorStrategy* b = behavior.at(Slot(owner));
  if (b == nullptr) {
    throw ConfigError("no strategy for player " + game.PlayerName(owner));
  }
  auto it = b->probs.find(n.infoset);
  if (it == b->probs.end()) {
    throw ConfigError("strategy for " + game.PlayerName(owner) +
                      " has no entry for information set " +
                      game.infoset(n.infoset).name);
  }
  for (std::size_t a = 0; a < n.children.size(); ++a) {
    const Rational& p = it->second.at(a);
    if (p.IsZero()) continue;
    Walk(game, n.children[a], weight * p, behavior, free_player, leaves,
         reached);
  }
}

// Expands mixed entries of a profile into weighted behavior tables.
void ExpandProfile(
    const GameTree& game, const StrategyProfile& profile,
    const std::function<void(const BehaviorTable&, const Rational&)>& visit) {
  ValidateProfile(game, profile);
  std::vector<std::vector<std::pair<BehaviorStrategy, Rational>>> options(
      static_cast<std::size_t>(game.NumPlayers()) + 1);
  options[0].emplace_back(profile.nature, Rational(1));
  for (const auto& [p, s] : profile.strategies) {
    auto& slot = options[Slot(p)];
    if (const auto* mixed = std::get_if<MixedStrategy>(&s)) {
      for (const auto& [pure, w] : mixed->support) {
        slot.emplace_back(PureToBehavior(game, pure), w);
      }
    } else {
      slot.emplace_back(InducedBehavior(game, s), Rational(1));
    }
  }
  BehaviorTable table(options.size(), nullptr);
  std::function<void(std::size_t, const Rational&)> rec =
      [&](std::size_t i, const Rational& w) {
        if (i == options.size()) {
          visit(table, w);
          return;
        }
        for (const auto& [b, p] : options[i]) {
          table[i] = &b;
          rec(i + 1, w * p);
        }
      };
  rec(0, Rational(1));
}

void CheckWeights(const std::string& what, const std::vector<Rational>& w) {
  Rational total;
  for (const auto& p : w) {
    if (p.IsNegative()) throw ConfigError(what + ": negative probability");
    total += p;
  }
  if (total != Rational(1)) {
    throw ConfigError(what + ": probabilities sum to " + total.ToString());
  }
}

bool HasNature(const GameTree& game) {
  return !game.InfoSetsOf(kNature).empty();
}

}  // namespace

GameTree::GameTree(std::vector<std::string> player_names)
    : player_names_(std::move(player_names)) {
  if (player_names_.empty()) throw ConfigError("game needs a player");
}

const std::string& GameTree::PlayerName(PlayerId p) const {
  static const std::string kNatureName = "nature";
  if (p == kNature) return kNatureName;
  return player_names_.at(static_cast<std::size_t>(p));
}

PlayerId GameTree::PlayerByName(const std::string& name) const {
  for (std::size_t i = 0; i < player_names_.size(); ++i) {
    if (player_names_[i] == name) return static_cast<PlayerId>(i);
  }
  if (name == "nature") return kNature;
  throw ConfigError("unknown player '" + name + "'");
}

InfoSetId GameTree::AddInfoSet(PlayerId player, std::string name,
                               std::vector<std::string> actions) {
  if (player != kNature && (player < 0 || player >= NumPlayers())) {
    throw ConfigError("infoset owner out of range");
  }
  if (actions.empty()) throw ConfigError("infoset '" + name + "' has no actions");
  if (infoset_by_name_.contains(name)) {
    throw ConfigError("duplicate infoset name '" + name + "'");
  }
  const auto id = static_cast<InfoSetId>(infosets_.size());
  infoset_by_name_[name] = id;
  infosets_of_[player].push_back(id);
  infosets_.push_back(InfoSet{id, player, std::move(name), std::move(actions), {}});
  finalized_ = false;
  return id;
}

void GameTree::Link(NodeId child, NodeId parent, int action) {
  if (parent == kNoNode) {
    if (child != 0) throw ConfigError("only the first node may be the root");
    return;
  }
  Node& p = nodes_.at(parent);
  if (p.terminal) throw ConfigError("terminal node cannot have children");
  if (action < 0 || action >= static_cast<int>(p.children.size())) {
    throw ConfigError("action index out of range");
  }
  if (p.children[action] != kNoNode) throw ConfigError("child already set");
  p.children[action] = child;
  nodes_[child].parent = parent;
  nodes_[child].incoming_action = action;
}

NodeId GameTree::AddDecision(InfoSetId infoset, NodeId parent, int action) {
  Node n;
  n.infoset = infoset;
  n.children.assign(infosets_.at(infoset).actions.size(), kNoNode);
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(std::move(n));
  infosets_[infoset].nodes.push_back(id);
  Link(id, parent, action);
  finalized_ = false;
  return id;
}

NodeId GameTree::AddTerminal(std::vector<Rational> payoffs, NodeId parent,
                             int action) {
  if (static_cast<int>(payoffs.size()) != NumPlayers()) {
    throw ConfigError("leaf needs one payoff per player");
  }
  Node n;
  n.terminal = true;
  n.payoffs = std::move(payoffs);
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(std::move(n));
  leaves_.push_back(id);
  Link(id, parent, action);
  finalized_ = false;
  return id;
}

void GameTree::Finalize() {
  if (nodes_.empty()) throw ConfigError("empty game tree");
  for (const Node& n : nodes_) {
    for (NodeId c : n.children) {
      if (c == kNoNode) throw ConfigError("decision node with missing child");
    }
  }
  for (const InfoSet& h : infosets_) {
    if (h.nodes.empty()) {
      throw ConfigError("information set '" + h.name + "' has no nodes");
    }
  }
  sequence_offset_.assign(infosets_.size(), 0);
  sequences_.clear();
  for (const InfoSet& h : infosets_) {
    sequence_offset_[h.id] = static_cast<int>(sequences_.size());
    for (std::size_t a = 0; a < h.actions.size(); ++a) {
      sequences_.emplace_back(h.id, static_cast<int>(a));
    }
  }
  // Nodes are created parent-first, so a forward pass sees parents first.
  last_sequence_.assign(nodes_.size(), std::vector<int>(player_names_.size(), -1));
  for (std::size_t id = 1; id < nodes_.size(); ++id) {
    const Node& n = nodes_[id];
    if (n.parent == kNoNode) throw ConfigError("node not connected to root");
    last_sequence_[id] = last_sequence_[n.parent];
    const Node& parent = nodes_[n.parent];
    const PlayerId owner = infosets_[parent.infoset].player;
    if (owner != kNature) {
      last_sequence_[id][owner] = SequenceId(parent.infoset, n.incoming_action);
    }
  }
  // Perfect recall: all nodes of an infoset share the owner's last move. By
  // induction over that move's own infoset, they share the full history.
  parent_sequence_.assign(infosets_.size(), -1);
  for (const InfoSet& h : infosets_) {
    if (h.player == kNature) continue;
    const int first = last_sequence_[h.nodes.front()][h.player];
    for (NodeId id : h.nodes) {
      if (last_sequence_[id][h.player] != first) {
        throw ConfigError("perfect recall violated at information set '" +
                          h.name + "'");
      }
    }
    parent_sequence_[h.id] = first;
  }
  finalized_ = true;
}

InfoSetId GameTree::InfoSetByName(const std::string& name) const {
  auto it = infoset_by_name_.find(name);
  if (it == infoset_by_name_.end()) {
    throw ConfigError("unknown information set '" + name + "'");
  }
  return it->second;
}

int GameTree::ActionIndex(InfoSetId id, const std::string& action) const {
  const auto& actions = infoset(id).actions;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (actions[i] == action) return static_cast<int>(i);
  }
  throw ConfigError("action '" + action + "' not available at '" +
                    infoset(id).name + "'");
}

const std::vector<InfoSetId>& GameTree::InfoSetsOf(PlayerId player) const {
  static const std::vector<InfoSetId> kNone;
  auto it = infosets_of_.find(player);
  return it == infosets_of_.end() ? kNone : it->second;
}

PlayerId GameTree::Owner(NodeId id) const {
  const Node& n = node(id);
  if (n.terminal) throw ConfigError("terminal nodes have no owner");
  return infoset(n.infoset).player;
}

std::pair<InfoSetId, int> GameTree::SequenceOf(int seq) const {
  return sequences_.at(static_cast<std::size_t>(seq));
}

int GameTree::LastSequence(PlayerId player, NodeId node) const {
  return last_sequence_.at(node).at(static_cast<std::size_t>(player));
}

PlayerId StrategyPlayer(const Strategy& s) {
  return std::visit([](const auto& v) { return v.player; }, s);
}

Beliefs Beliefs::PointMass(PlayerId owner,
                           const std::map<PlayerId, BehaviorStrategy>& about) {
  Beliefs b;
  b.owner = owner;
  for (const auto& [p, s] : about) b.about[p].emplace_back(s, Rational(1));
  return b;
}

void ValidatePure(const GameTree& game, const PureStrategy& s) {
  const auto& own = game.InfoSetsOf(s.player);
  if (s.actions.size() != own.size()) {
    throw ConfigError("pure strategy for " + game.PlayerName(s.player) +
                      " must cover exactly its information sets");
  }
  for (InfoSetId h : own) {
    auto it = s.actions.find(h);
    if (it == s.actions.end()) {
      throw ConfigError("pure strategy misses information set '" +
                        game.infoset(h).name + "'");
    }
    if (it->second < 0 ||
        it->second >= static_cast<int>(game.infoset(h).actions.size())) {
      throw ConfigError("action not available at '" + game.infoset(h).name +
                        "'");
    }
  }
}

void ValidateBehavior(const GameTree& game, const BehaviorStrategy& s) {
  const auto& own = game.InfoSetsOf(s.player);
  if (s.probs.size() != own.size()) {
    throw ConfigError("behavior strategy for " + game.PlayerName(s.player) +
                      " must cover exactly its information sets");
  }
  for (InfoSetId h : own) {
    auto it = s.probs.find(h);
    if (it == s.probs.end()) {
      throw ConfigError("behavior strategy misses information set '" +
                        game.infoset(h).name + "'");
    }
    if (it->second.size() != game.infoset(h).actions.size()) {
      throw ConfigError("wrong action count at '" + game.infoset(h).name + "'");
    }
    CheckWeights("behavior at '" + game.infoset(h).name + "'", it->second);
  }
}

void ValidateMixed(const GameTree& game, const MixedStrategy& s) {
  if (s.support.empty()) throw ConfigError("mixed strategy with empty support");
  std::vector<Rational> w;
  for (const auto& [pure, p] : s.support) {
    if (pure.player != s.player) throw ConfigError("mixed support player mismatch");
    ValidatePure(game, pure);
    if (!p.IsPositive()) throw ConfigError("mixed support weight must be > 0");
    w.push_back(p);
  }
  CheckWeights("mixed strategy", w);
}

void ValidateProfile(const GameTree& game, const StrategyProfile& profile) {
  if (!game.finalized()) throw ConfigError("game not finalized");
  for (PlayerId p = 0; p < game.NumPlayers(); ++p) {
    auto it = profile.strategies.find(p);
    if (it == profile.strategies.end()) {
      throw ConfigError("missing strategy for player " + game.PlayerName(p));
    }
    if (StrategyPlayer(it->second) != p) {
      throw ConfigError("strategy filed under the wrong player");
    }
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, PureStrategy>) ValidatePure(game, s);
          if constexpr (std::is_same_v<T, MixedStrategy>) ValidateMixed(game, s);
          if constexpr (std::is_same_v<T, BehaviorStrategy>)
            ValidateBehavior(game, s);
        },
        it->second);
  }
  if (profile.strategies.size() != static_cast<std::size_t>(game.NumPlayers())) {
    throw ConfigError("profile names a player outside the game");
  }
  if (profile.nature.player != kNature) throw ConfigError("bad Nature strategy");
  ValidateBehavior(game, profile.nature);
}

void ValidateBeliefs(const GameTree& game, const Beliefs& beliefs) {
  if (beliefs.owner < 0 || beliefs.owner >= game.NumPlayers()) {
    throw ConfigError("belief owner not in game");
  }
  std::vector<PlayerId> opponents;
  for (PlayerId p = 0; p < game.NumPlayers(); ++p) {
    if (p != beliefs.owner) opponents.push_back(p);
  }
  if (HasNature(game)) opponents.push_back(kNature);
  for (PlayerId j : opponents) {
    auto it = beliefs.about.find(j);
    if (it == beliefs.about.end() || it->second.empty()) {
      throw ConfigError("belief of " + game.PlayerName(beliefs.owner) +
                        " is missing opponent " + game.PlayerName(j));
    }
    std::vector<Rational> w;
    for (const auto& [b, p] : it->second) {
      if (b.player != j) throw ConfigError("belief entry for wrong opponent");
      ValidateBehavior(game, b);
      if (!p.IsPositive()) throw ConfigError("belief weight must be > 0");
      w.push_back(p);
    }
    CheckWeights("belief about " + game.PlayerName(j), w);
  }
}

BehaviorStrategy PureToBehavior(const GameTree& game, const PureStrategy& s) {
  BehaviorStrategy b{s.player, {}};
  for (const auto& [h, a] : s.actions) {
    std::vector<Rational> probs(game.infoset(h).actions.size());
    probs.at(static_cast<std::size_t>(a)) = Rational(1);
    b.probs.emplace(h, std::move(probs));
  }
  return b;
}

std::vector<PureStrategy> EnumeratePureStrategies(const GameTree& game,
                                                  PlayerId player,
                                                  long long budget) {
  const auto& own = game.InfoSetsOf(player);
  long long count = 1;
  for (InfoSetId h : own) {
    const auto k = static_cast<long long>(game.infoset(h).actions.size());
    if (count > std::numeric_limits<long long>::max() / k) {
      count = std::numeric_limits<long long>::max();
      break;
    }
    count *= k;
  }
  if (count > budget) {
    throw BudgetExceeded("pure strategies of " + game.PlayerName(player), count,
                         budget);
  }
  std::vector<PureStrategy> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> digits(own.size(), 0);
  while (true) {
    PureStrategy s{player, {}};
    for (std::size_t i = 0; i < own.size(); ++i) s.actions[own[i]] = digits[i];
    out.push_back(std::move(s));
    int i = static_cast<int>(own.size()) - 1;
    for (; i >= 0; --i) {
      if (++digits[i] < static_cast<int>(game.infoset(own[i]).actions.size())) {
        break;
      }
      digits[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

std::map<NodeId, Rational> OutcomeDistribution(const GameTree& game,
                                               const StrategyProfile& profile) {
  std::map<NodeId, Rational> leaves;
  ExpandProfile(game, profile, [&](const BehaviorTable& t, const Rational& w) {
    Walk(game, game.Root(), w, t, /*free_player=*/-2, &leaves, nullptr);
  });
  return leaves;
}

std::vector<Rational> EvaluateProfile(const GameTree& game,
                                      const StrategyProfile& profile) {
  std::vector<Rational> out(static_cast<std::size_t>(game.NumPlayers()));
  for (const auto& [leaf, p] : OutcomeDistribution(game, profile)) {
    const auto& payoffs = game.node(leaf).payoffs;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += p * payoffs[i];
  }
  return out;
}

std::set<InfoSetId> ReachedInformationSets(const GameTree& game,
                                           const StrategyProfile& profile) {
  std::set<InfoSetId> reached;
  ExpandProfile(game, profile, [&](const BehaviorTable& t, const Rational& w) {
    Walk(game, game.Root(), w, t, -2, nullptr, &reached);
  });
  return reached;
}

BehaviorStrategy ToBehavior(const GameTree& game, const MixedStrategy& mixed) {
  if (!game.finalized()) {
    throw ConfigError("perfect recall not established: game not finalized");
  }
  ValidateMixed(game, mixed);
  BehaviorStrategy out{mixed.player, {}};
  for (InfoSetId h : game.InfoSetsOf(mixed.player)) {
    // Own moves required to reach h.
    std::vector<std::pair<InfoSetId, int>> chain;
    for (int seq = game.ParentSequence(h); seq != -1;) {
      auto [g, a] = game.SequenceOf(seq);
      chain.emplace_back(g, a);
      seq = game.ParentSequence(g);
    }
    const std::size_t k = game.infoset(h).actions.size();
    std::vector<Rational> num(k), all(k);
    Rational den;
    for (const auto& [pure, w] : mixed.support) {
      const int a = pure.actions.at(h);
      all[a] += w;
      bool consistent = true;
      for (const auto& [g, b] : chain) {
        if (pure.actions.at(g) != b) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      num[a] += w;
      den += w;
    }
    if (den.IsZero()) {
      out.probs.emplace(h, std::move(all));
    } else {
      for (auto& p : num) p /= den;
      out.probs.emplace(h, std::move(num));
    }
  }
  return out;
}

BehaviorStrategy InducedBehavior(const GameTree& game, const Strategy& s) {
  if (const auto* p = std::get_if<PureStrategy>(&s)) return PureToBehavior(game, *p);
  if (const auto* m = std::get_if<MixedStrategy>(&s)) return ToBehavior(game, *m);
  return std::get<BehaviorStrategy>(s);
}

std::map<NodeId, Rational> OpponentReach(const GameTree& game, PlayerId player,
                                         const Beliefs& beliefs,
                                         bool validate) {
  if (validate) ValidateBeliefs(game, beliefs);
  if (beliefs.owner != player) throw ConfigError("belief owner mismatch");
  std::vector<const std::vector<std::pair<BehaviorStrategy, Rational>>*> slots;
  std::vector<std::size_t> slot_index;
  for (const auto& [p, entries] : beliefs.about) {
    if (p == player) continue;
    slots.push_back(&entries);
    slot_index.push_back(Slot(p));
  }
  BehaviorTable table(static_cast<std::size_t>(game.NumPlayers()) + 1, nullptr);
  std::map<NodeId, Rational> reach;
  std::function<void(std::size_t, const Rational&)> rec =
      [&](std::size_t i, const Rational& w) {
        if (i == slots.size()) {
          Walk(game, game.Root(), w, table, player, &reach, nullptr);
          return;
        }
        for (const auto& [b, p] : *slots[i]) {
          table[slot_index[i]] = &b;
          rec(i + 1, w * p);
        }
      };
  rec(0, Rational(1));
  return reach;
}

Rational ValueAgainstReach(const GameTree& game, PlayerId player,
                           const PureStrategy& s,
                           const std::map<NodeId, Rational>& reach) {
  Rational value;
  for (const auto& [leaf, w] : reach) {
    bool consistent = true;
    for (NodeId child = leaf; game.node(child).parent != kNoNode;) {
      const NodeId parent = game.node(child).parent;
      const Node& pn = game.node(parent);
      if (game.infoset(pn.infoset).player == player &&
          s.actions.at(pn.infoset) != game.node(child).incoming_action) {
        consistent = false;
        break;
      }
      child = parent;
    }
    if (consistent) value += w * game.node(leaf).payoffs.at(player);
  }
  return value;
}

BestResponseResult BestResponse(const GameTree& game, PlayerId player,
                                const std::map<NodeId, Rational>& reach,
                                const PureStrategy* prefer) {
  std::map<int, Rational> contribution;
  for (const auto& [leaf, w] : reach) {
    contribution[game.LastSequence(player, leaf)] +=
        w * game.node(leaf).payoffs.at(player);
  }
  std::map<int, std::vector<InfoSetId>> children;
  for (InfoSetId h : game.InfoSetsOf(player)) {
    children[game.ParentSequence(h)].push_back(h);
  }
  BestResponseResult result{PureStrategy{player, {}}, Rational()};
  std::function<Rational(int)> value = [&](int seq) {
    Rational v;
    if (auto it = contribution.find(seq); it != contribution.end()) v = it->second;
    auto it = children.find(seq);
    if (it == children.end()) return v;
    for (InfoSetId h : it->second) {
      const int k = static_cast<int>(game.infoset(h).actions.size());
      std::vector<Rational> values;
      values.reserve(k);
      int best = 0;
      for (int a = 0; a < k; ++a) {
        values.push_back(value(game.SequenceId(h, a)));
        if (values[a] > values[best]) best = a;
      }
      if (prefer != nullptr) {
        auto p = prefer->actions.find(h);
        if (p != prefer->actions.end() && values[p->second] == values[best]) {
          best = p->second;
        }
      }
      result.strategy.actions[h] = best;
      v += values[best];
    }
    return v;
  };
  result.value = value(-1);
  return result;
}

Rational ExpectedUtilityUnderBelief(const GameTree& game, PlayerId player,
                                    const PureStrategy& s,
                                    const Beliefs& beliefs) {
  ValidatePure(game, s);
  if (s.player != player) throw ConfigError("strategy belongs to another player");
  return ValueAgainstReach(game, player, s, OpponentReach(game, player, beliefs));
}

}  // namespace fairgame

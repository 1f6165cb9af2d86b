// Copyright 2026 The Coopetition Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COOP_GAME_HPP_
#define COOP_GAME_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coop/error.hpp"
#include "coop/rational.hpp"

namespace coop {

/// One action index per player, in player order.
using JointAction = std::vector<std::size_t>;

/// Largest joint action space a Game may hold.
inline constexpr std::size_t kMaxJointActions = 1'000'000;

/// An n-player normal-form game stored as a dense utility tensor.
///
/// Players are 0-based internally (files and reports use 1-based ids).
/// Joint actions are enumerated lexicographically by per-player action index
/// with player 0 most significant, so for two players with actions {D, C} the
/// order is (D,D), (D,C), (C,D), (C,C).
class Game {
 public:
  using PayoffFn = std::function<std::vector<Rational>(const JointAction&)>;

  /// `payoffs` is laid out as payoffs[joint_index * n + player].
  Game(std::vector<std::vector<std::string>> actions, std::vector<Rational> payoffs,
       std::string name = {})
      : actions_(std::move(actions)), payoffs_(std::move(payoffs)), name_(std::move(name)) {
    init_shape();
    if (payoffs_.size() != num_joint_actions_ * num_players()) {
      throw InputError("game: expected " + std::to_string(num_joint_actions_ * num_players()) +
                       " payoffs, got " + std::to_string(payoffs_.size()));
    }
  }

  /// Builds the tensor by calling `fn` once per joint action in lexicographic
  /// order; `fn` must return one payoff per player.
  static Game from_function(std::vector<std::vector<std::string>> actions, const PayoffFn& fn,
                            std::string name = {}) {
    Game g;
    g.actions_ = std::move(actions);
    g.name_ = std::move(name);
    g.init_shape();
    g.payoffs_.reserve(g.num_joint_actions_ * g.num_players());
    for (std::size_t idx = 0; idx < g.num_joint_actions_; ++idx) {
      std::vector<Rational> row = fn(g.joint_action(idx));
      if (row.size() != g.num_players()) {
        throw InputError("game: payoff function returned " + std::to_string(row.size()) +
                         " values for " + std::to_string(g.num_players()) + " players");
      }
      for (Rational& r : row) g.payoffs_.push_back(std::move(r));
    }
    return g;
  }

  std::size_t num_players() const { return actions_.size(); }
  std::size_t num_actions(std::size_t player) const { return actions_.at(player).size(); }
  std::size_t num_joint_actions() const { return num_joint_actions_; }
  const std::vector<std::string>& action_labels(std::size_t player) const {
    return actions_.at(player);
  }
  const std::string& action_label(std::size_t player, std::size_t action) const {
    return actions_.at(player).at(action);
  }
  const std::string& name() const { return name_; }

  std::optional<std::size_t> find_action(std::size_t player, std::string_view label) const {
    const auto& labels = actions_.at(player);
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels.begin());
  }

  std::size_t stride(std::size_t player) const { return strides_[player]; }

  std::size_t index_of(std::span<const std::size_t> joint) const {
    if (joint.size() != num_players()) {
      throw InputError("joint action has " + std::to_string(joint.size()) + " entries, game has " +
                       std::to_string(num_players()) + " players");
    }
    std::size_t idx = 0;
    for (std::size_t p = 0; p < joint.size(); ++p) {
      if (joint[p] >= actions_[p].size()) {
        throw InputError("action index " + std::to_string(joint[p]) + " out of range for player " +
                         std::to_string(p + 1));
      }
      idx += joint[p] * strides_[p];
    }
    return idx;
  }

  JointAction joint_action(std::size_t index) const {
    JointAction joint(num_players());
    for (std::size_t p = 0; p < num_players(); ++p) {
      joint[p] = (index / strides_[p]) % actions_[p].size();
    }
    return joint;
  }

  const Rational& payoff(std::size_t joint_index, std::size_t player) const {
    return payoffs_[joint_index * num_players() + player];
  }
  const Rational& payoff(std::span<const std::size_t> joint, std::size_t player) const {
    return payoff(index_of(joint), player);
  }
  std::span<const Rational> payoffs(std::size_t joint_index) const {
    return {payoffs_.data() + joint_index * num_players(), num_players()};
  }
  const std::vector<Rational>& raw_payoffs() const { return payoffs_; }

  bool is_zero_sum() const {
    for (std::size_t idx = 0; idx < num_joint_actions_; ++idx) {
      if (sum(payoffs(idx)) != 0) return false;
    }
    return true;
  }

  /// Same tensor with `label` as metadata.
  Game renamed(std::string label) const {
    Game g = *this;
    g.name_ = std::move(label);
    return g;
  }

  friend bool operator==(const Game& a, const Game& b) {
    return a.actions_ == b.actions_ && a.payoffs_ == b.payoffs_;
  }

 private:
  Game() = default;

  void init_shape() {
    if (actions_.size() < 2) throw InputError("game: need at least 2 players");
    num_joint_actions_ = 1;
    for (std::size_t p = 0; p < actions_.size(); ++p) {
      const auto& labels = actions_[p];
      if (labels.empty()) {
        throw InputError("game: player " + std::to_string(p + 1) + " has no actions");
      }
      for (std::size_t a = 0; a < labels.size(); ++a) {
        const std::string& l = labels[a];
        if (l.empty() || std::any_of(l.begin(), l.end(), [](char c) {
              return std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == ',' || c == '=';
            })) {
          throw InputError("game: invalid action label '" + l + "' for player " +
                           std::to_string(p + 1));
        }
        if (std::find(labels.begin(), labels.begin() + a, l) != labels.begin() + a) {
          throw InputError("game: duplicate action label '" + l + "' for player " +
                           std::to_string(p + 1));
        }
      }
      if (num_joint_actions_ > kMaxJointActions / labels.size()) {
        throw ScaleError("game: joint action space exceeds " + std::to_string(kMaxJointActions));
      }
      num_joint_actions_ *= labels.size();
    }
    strides_.assign(actions_.size(), 1);
    for (std::size_t p = actions_.size() - 1; p-- > 0;) {
      strides_[p] = strides_[p + 1] * actions_[p + 1].size();
    }
  }

  std::vector<std::vector<std::string>> actions_;
  std::vector<std::size_t> strides_;
  std::vector<Rational> payoffs_;
  std::size_t num_joint_actions_ = 0;
  std::string name_;
};

/// The team T and the single adversary. Team ids are kept sorted.
class TeamPartition {
 public:
  TeamPartition(const Game& game, std::vector<std::size_t> team, std::size_t adversary)
      : team_(std::move(team)), adversary_(adversary) {
    std::sort(team_.begin(), team_.end());
    const std::size_t n = game.num_players();
    if (team_.empty()) throw InputError("partition: team is empty");
    if (adversary_ >= n) throw InputError("partition: adversary id out of range");
    if (std::adjacent_find(team_.begin(), team_.end()) != team_.end()) {
      throw InputError("partition: duplicate team member");
    }
    for (std::size_t p : team_) {
      if (p >= n) throw InputError("partition: team member id out of range");
      if (p == adversary_) throw InputError("partition: adversary is also a team member");
    }
    if (team_.size() + 1 != n) {
      throw InputError("partition: team plus adversary must cover all players");
    }
  }

  /// Team {0..n-2}, adversary n-1.
  static TeamPartition last_is_adversary(const Game& game) {
    std::vector<std::size_t> team(game.num_players() - 1);
    for (std::size_t p = 0; p < team.size(); ++p) team[p] = p;
    return TeamPartition(game, std::move(team), game.num_players() - 1);
  }

  const std::vector<std::size_t>& team() const { return team_; }
  std::size_t adversary() const { return adversary_; }
  bool in_team(std::size_t player) const {
    return std::binary_search(team_.begin(), team_.end(), player);
  }
  /// Position of `player` inside team(), or nullopt.
  std::optional<std::size_t> team_slot(std::size_t player) const {
    auto it = std::lower_bound(team_.begin(), team_.end(), player);
    if (it == team_.end() || *it != player) return std::nullopt;
    return static_cast<std::size_t>(it - team_.begin());
  }

  friend bool operator==(const TeamPartition&, const TeamPartition&) = default;

 private:
  std::vector<std::size_t> team_;
  std::size_t adversary_;
};

inline void check_distribution(std::span<const Rational> probs, std::size_t expected_size,
                               const std::string& what) {
  if (probs.size() != expected_size) {
    throw InputError(what + ": expected " + std::to_string(expected_size) +
                     " probabilities, got " + std::to_string(probs.size()));
  }
  for (const Rational& p : probs) {
    if (p < 0) throw InputError(what + ": negative probability " + to_string(p));
  }
  if (sum(probs) != 1) {
    throw InputError(what + ": probabilities sum to " + to_string(sum(probs)) + ", not 1");
  }
}

/// x_i: a distribution over one player's actions.
struct MixedStrategy {
  std::size_t player = 0;
  std::vector<Rational> probs;

  static MixedStrategy pure(const Game& game, std::size_t player, std::size_t action) {
    MixedStrategy s{player, std::vector<Rational>(game.num_actions(player), Rational(0))};
    s.probs.at(action) = 1;
    return s;
  }
  static MixedStrategy uniform(const Game& game, std::size_t player) {
    const std::size_t m = game.num_actions(player);
    return {player, std::vector<Rational>(m, Rational(1, static_cast<long>(m)))};
  }

  void validate(const Game& game) const {
    if (player >= game.num_players()) throw InputError("mixed strategy: player id out of range");
    check_distribution(probs, game.num_actions(player),
                       "mixed strategy of player " + std::to_string(player + 1));
  }

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;
};

/// One mixed strategy per player, in player order.
using Profile = std::vector<MixedStrategy>;

inline void validate_profile(const Game& game, const Profile& profile) {
  if (profile.size() != game.num_players()) {
    throw InputError("profile has " + std::to_string(profile.size()) + " strategies, game has " +
                     std::to_string(game.num_players()) + " players");
  }
  for (std::size_t p = 0; p < profile.size(); ++p) {
    if (profile[p].player != p) {
      throw InputError("profile entry " + std::to_string(p + 1) + " belongs to player " +
                       std::to_string(profile[p].player + 1));
    }
    profile[p].validate(game);
  }
}

/// A distribution over the joint actions of `players` (sorted ascending).
/// probs are indexed lexicographically over those players' action indices,
/// first listed player most significant. With players = all players this is a
/// full-joint correlated strategy; with players = T it is x_T.
struct CorrelatedStrategy {
  std::vector<std::size_t> players;
  std::vector<Rational> probs;

  static std::size_t space_size(const Game& game, std::span<const std::size_t> players) {
    std::size_t size = 1;
    for (std::size_t p : players) size *= game.num_actions(p);
    return size;
  }

  /// Index of a sub-joint action (one action per entry of `players`).
  static std::size_t index_of(const Game& game, std::span<const std::size_t> players,
                              std::span<const std::size_t> actions) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < players.size(); ++k) {
      idx = idx * game.num_actions(players[k]) + actions[k];
    }
    return idx;
  }

  static JointAction actions_of(const Game& game, std::span<const std::size_t> players,
                                std::size_t index) {
    JointAction actions(players.size());
    for (std::size_t k = players.size(); k-- > 0;) {
      const std::size_t m = game.num_actions(players[k]);
      actions[k] = index % m;
      index /= m;
    }
    return actions;
  }

  static CorrelatedStrategy point_mass(const Game& game, std::vector<std::size_t> players,
                                       std::span<const std::size_t> actions) {
    CorrelatedStrategy s{std::move(players), {}};
    s.probs.assign(space_size(game, s.players), Rational(0));
    s.probs.at(index_of(game, s.players, actions)) = 1;
    return s;
  }

  void validate(const Game& game) const {
    if (!std::is_sorted(players.begin(), players.end()) ||
        std::adjacent_find(players.begin(), players.end()) != players.end()) {
      throw InputError("correlated strategy: players must be strictly ascending");
    }
    for (std::size_t p : players) {
      if (p >= game.num_players()) throw InputError("correlated strategy: player id out of range");
    }
    check_distribution(probs, space_size(game, players), "correlated strategy");
  }

  friend bool operator==(const CorrelatedStrategy&, const CorrelatedStrategy&) = default;
};

using CorrelatedTeamStrategy = CorrelatedStrategy;

/// (x_T, x_n): a team correlated strategy paired with an adversary strategy.
struct CoECandidate {
  CorrelatedStrategy team_strategy;
  MixedStrategy adversary_strategy;

  void validate(const Game& game, const TeamPartition& partition) const {
    if (team_strategy.players != partition.team()) {
      throw InputError("candidate: team strategy players do not match the partition's team");
    }
    if (adversary_strategy.player != partition.adversary()) {
      throw InputError("candidate: adversary strategy belongs to player " +
                       std::to_string(adversary_strategy.player + 1) + ", partition adversary is " +
                       std::to_string(partition.adversary() + 1));
    }
    team_strategy.validate(game);
    adversary_strategy.validate(game);
  }

  friend bool operator==(const CoECandidate&, const CoECandidate&) = default;
};

/// Indexing helper for the (team joint action, adversary action) view of a
/// game. Team joint actions follow CorrelatedStrategy order over team().
class TeamView {
 public:
  TeamView(const Game& game, const TeamPartition& partition)
      : game_(&game), partition_(&partition) {
    const auto& team = partition.team();
    num_team_ = CorrelatedStrategy::space_size(game, team);
    num_adv_ = game.num_actions(partition.adversary());
    team_actions_.reserve(num_team_);
    base_index_.reserve(num_team_);
    for (std::size_t t = 0; t < num_team_; ++t) {
      JointAction acts = CorrelatedStrategy::actions_of(game, team, t);
      std::size_t base = 0;
      for (std::size_t k = 0; k < team.size(); ++k) base += acts[k] * game.stride(team[k]);
      team_actions_.push_back(std::move(acts));
      base_index_.push_back(base);
    }
    team_stride_.resize(team.size());
    for (std::size_t k = team.size(); k-- > 0;) {
      team_stride_[k] = (k + 1 == team.size())
                            ? 1
                            : team_stride_[k + 1] * game.num_actions(team[k + 1]);
    }
  }

  const Game& game() const { return *game_; }
  const TeamPartition& partition() const { return *partition_; }
  std::size_t num_team_actions() const { return num_team_; }
  std::size_t num_adversary_actions() const { return num_adv_; }
  const JointAction& team_action(std::size_t t) const { return team_actions_[t]; }

  std::size_t joint_index(std::size_t t, std::size_t adv_action) const {
    return base_index_[t] + adv_action * game_->stride(partition_->adversary());
  }
  /// Team index after team slot `slot` switches to `action`.
  std::size_t with_action(std::size_t t, std::size_t slot, std::size_t action) const {
    return t - team_actions_[t][slot] * team_stride_[slot] + action * team_stride_[slot];
  }
  const Rational& utility(std::size_t t, std::size_t adv_action, std::size_t player) const {
    return game_->payoff(joint_index(t, adv_action), player);
  }
  Rational team_utility(std::size_t t, std::size_t adv_action) const {
    Rational total = 0;
    const std::size_t idx = joint_index(t, adv_action);
    for (std::size_t p : partition_->team()) total += game_->payoff(idx, p);
    return total;
  }
  /// u_player(a_T, x_n).
  Rational utility_vs(std::size_t t, const MixedStrategy& adv, std::size_t player) const {
    Rational total = 0;
    for (std::size_t b = 0; b < num_adv_; ++b) {
      if (adv.probs[b] != 0) total += adv.probs[b] * utility(t, b, player);
    }
    return total;
  }
  Rational team_utility_vs(std::size_t t, const MixedStrategy& adv) const {
    Rational total = 0;
    for (std::size_t b = 0; b < num_adv_; ++b) {
      if (adv.probs[b] != 0) total += adv.probs[b] * team_utility(t, b);
    }
    return total;
  }

  /// Team-as-one-player payoff matrix: rows are team joint actions, columns
  /// adversary actions, entries u_T.
  std::vector<std::vector<Rational>> team_matrix() const {
    std::vector<std::vector<Rational>> m(num_team_, std::vector<Rational>(num_adv_));
    for (std::size_t t = 0; t < num_team_; ++t) {
      for (std::size_t b = 0; b < num_adv_; ++b) m[t][b] = team_utility(t, b);
    }
    return m;
  }

 private:
  const Game* game_;
  const TeamPartition* partition_;
  std::size_t num_team_ = 0;
  std::size_t num_adv_ = 0;
  std::vector<JointAction> team_actions_;
  std::vector<std::size_t> base_index_;
  std::vector<std::size_t> team_stride_;
};

/// u_player(x) under the product distribution of `profile`.
inline Rational expected_utility(const Game& game, const Profile& profile, std::size_t player) {
  validate_profile(game, profile);
  if (player >= game.num_players()) throw InputError("expected_utility: player id out of range");
  Rational total = 0;
  for (std::size_t idx = 0; idx < game.num_joint_actions(); ++idx) {
    Rational prob = 1;
    for (std::size_t p = 0; p < game.num_players() && prob != 0; ++p) {
      prob *= profile[p].probs[(idx / game.stride(p)) % game.num_actions(p)];
    }
    if (prob != 0) total += prob * game.payoff(idx, player);
  }
  return total;
}

/// u_player(action, x_{-player}): the payoff of a pure deviation.
inline Rational deviation_utility(const Game& game, const Profile& profile, std::size_t player,
                                  std::size_t action) {
  Rational total = 0;
  for (std::size_t idx = 0; idx < game.num_joint_actions(); ++idx) {
    if ((idx / game.stride(player)) % game.num_actions(player) != action) continue;
    Rational prob = 1;
    for (std::size_t p = 0; p < game.num_players() && prob != 0; ++p) {
      if (p == player) continue;
      prob *= profile[p].probs[(idx / game.stride(p)) % game.num_actions(p)];
    }
    if (prob != 0) total += prob * game.payoff(idx, player);
  }
  return total;
}

/// Expected utility of `player` when the team plays x_T and the adversary x_n.
inline Rational expected_utility_correlated(const Game& game, const TeamPartition& partition,
                                            const CoECandidate& cand, std::size_t player) {
  cand.validate(game, partition);
  if (player >= game.num_players()) {
    throw InputError("expected_utility_correlated: player id out of range");
  }
  TeamView view(game, partition);
  Rational total = 0;
  for (std::size_t t = 0; t < view.num_team_actions(); ++t) {
    const Rational& pt = cand.team_strategy.probs[t];
    if (pt == 0) continue;
    total += pt * view.utility_vs(t, cand.adversary_strategy, player);
  }
  return total;
}

/// u_T(x_T, x_n) = sum over team members of their expected utilities.
inline Rational team_utility(const Game& game, const TeamPartition& partition,
                             const CoECandidate& cand) {
  cand.validate(game, partition);
  TeamView view(game, partition);
  Rational total = 0;
  for (std::size_t t = 0; t < view.num_team_actions(); ++t) {
    const Rational& pt = cand.team_strategy.probs[t];
    if (pt != 0) total += pt * view.team_utility_vs(t, cand.adversary_strategy);
  }
  return total;
}

/// u_T of a product profile.
inline Rational team_utility(const Game& game, const TeamPartition& partition,
                             const Profile& profile) {
  Rational total = 0;
  for (std::size_t p : partition.team()) total += expected_utility(game, profile, p);
  return total;
}

/// Product distribution over the joint actions of the given players; the
/// strategies' players must be strictly ascending.
inline CorrelatedStrategy product_to_correlated(const Game& game,
                                                std::span<const MixedStrategy> strategies) {
  std::vector<std::size_t> players;
  for (const MixedStrategy& s : strategies) {
    s.validate(game);
    players.push_back(s.player);
  }
  if (players.empty()) throw InputError("product_to_correlated: no strategies");
  CorrelatedStrategy out{players, {}};
  if (!std::is_sorted(players.begin(), players.end()) ||
      std::adjacent_find(players.begin(), players.end()) != players.end()) {
    throw InputError("product_to_correlated: players must be strictly ascending");
  }
  const std::size_t size = CorrelatedStrategy::space_size(game, players);
  out.probs.resize(size);
  for (std::size_t idx = 0; idx < size; ++idx) {
    JointAction acts = CorrelatedStrategy::actions_of(game, players, idx);
    Rational prob = 1;
    for (std::size_t k = 0; k < players.size() && prob != 0; ++k) {
      prob *= strategies[k].probs[acts[k]];
    }
    out.probs[idx] = prob;
  }
  return out;
}

/// Team block of a product profile as a CoE candidate.
inline CoECandidate candidate_from_profile(const Game& game, const TeamPartition& partition,
                                           const Profile& profile) {
  validate_profile(game, profile);
  std::vector<MixedStrategy> team;
  for (std::size_t p : partition.team()) team.push_back(profile[p]);
  return {product_to_correlated(game, team), profile[partition.adversary()]};
}

/// Marginal of a correlated strategy on one of its players.
inline MixedStrategy marginal(const Game& game, const CorrelatedStrategy& s, std::size_t player) {
  auto it = std::find(s.players.begin(), s.players.end(), player);
  if (it == s.players.end()) throw InputError("marginal: player not covered by the strategy");
  const std::size_t slot = static_cast<std::size_t>(it - s.players.begin());
  MixedStrategy m{player, std::vector<Rational>(game.num_actions(player), Rational(0))};
  for (std::size_t idx = 0; idx < s.probs.size(); ++idx) {
    if (s.probs[idx] == 0) continue;
    m.probs[CorrelatedStrategy::actions_of(game, s.players, idx)[slot]] += s.probs[idx];
  }
  return m;
}

/// Full-joint distribution x_T x x_n over every player's actions, indexed like
/// the game tensor.
inline CorrelatedStrategy joint_distribution(const Game& game, const TeamPartition& partition,
                                             const CoECandidate& cand) {
  cand.validate(game, partition);
  TeamView view(game, partition);
  CorrelatedStrategy joint;
  for (std::size_t p = 0; p < game.num_players(); ++p) joint.players.push_back(p);
  joint.probs.assign(game.num_joint_actions(), Rational(0));
  for (std::size_t t = 0; t < view.num_team_actions(); ++t) {
    for (std::size_t b = 0; b < view.num_adversary_actions(); ++b) {
      joint.probs[view.joint_index(t, b)] =
          cand.team_strategy.probs[t] * cand.adversary_strategy.probs[b];
    }
  }
  return joint;
}

inline CorrelatedStrategy joint_distribution(const Game& game, const Profile& profile) {
  validate_profile(game, profile);
  return product_to_correlated(game, profile);
}

}  // namespace coop

#endif  // COOP_GAME_HPP_

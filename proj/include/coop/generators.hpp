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

// Worked-example games, the two-player -> three-player team reduction, the
// CNF game gadget and seeded random game families.

#ifndef COOP_GENERATORS_HPP_
#define COOP_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coop/error.hpp"
#include "coop/game.hpp"
#include "coop/rational.hpp"

namespace coop {

struct PartitionedGame {
  Game game;
  TeamPartition partition;
};

struct ChickenGames {
  PartitionedGame original;   // G_a
  PartitionedGame averaged;   // G_b
};

namespace detail {

// Team payoffs under the adversary's B; index = 2 * p1 + p2 with D = 0, C = 1.
inline Game chicken_tensor(const std::vector<std::pair<Rational, Rational>>& under_b,
                           std::string name) {
  return Game::from_function(
      {{"D", "C"}, {"D", "C"}, {"A", "B"}},
      [&](const JointAction& a) {
        Rational u1;
        Rational u2;
        if (a[2] == 0) {
          // Under A both team members receive 10, so B strictly dominates A.
          u1 = 10;
          u2 = 10;
        } else {
          u1 = under_b[2 * a[0] + a[1]].first;
          u2 = under_b[2 * a[0] + a[1]].second;
        }
        return std::vector<Rational>{u1, u2, -(u1 + u2)};
      },
      std::move(name));
}

}  // namespace detail

/// The chicken-based team games. Team players 1 and 2 choose Dare or
/// Chicken out; the adversary chooses A or B. Under B the team's payoffs are
/// the game of chicken (G_a) or its team-averaged version (G_b). The adversary
/// receives -(u_1 + u_2), and under A both team members receive 10.
inline ChickenGames chicken_games() {
  Game a = detail::chicken_tensor(
      {{0, 0}, {7, 2}, {2, 7}, {6, 6}}, "chicken-a");
  Game b = detail::chicken_tensor(
      {{0, 0}, {Rational(9, 2), Rational(9, 2)}, {Rational(9, 2), Rational(9, 2)}, {6, 6}},
      "chicken-b");
  TeamPartition pa = TeamPartition::last_is_adversary(a);
  TeamPartition pb = TeamPartition::last_is_adversary(b);
  return {{std::move(a), std::move(pa)}, {std::move(b), std::move(pb)}};
}

/// Two-player game of chicken (row, column), both with actions {D, C}.
inline Game chicken_bimatrix() {
  const std::vector<std::pair<int, int>> cells = {{0, 0}, {7, 2}, {2, 7}, {6, 6}};
  return Game::from_function(
      {{"D", "C"}, {"D", "C"}},
      [&](const JointAction& a) {
        auto [x, y] = cells[2 * a[0] + a[1]];
        return std::vector<Rational>{x, y};
      },
      "chicken");
}

/// Chicken embedded against an adversary: only profiles with player 1 on a1
/// pay anything; (a1,b1,c2) -> (0,7,2), (a1,b2,c2) -> (0,6,6),
/// (a1,b2,c1) -> (0,2,7), everything else 0.
inline PartitionedGame modified_chicken_game() {
  Game g = Game::from_function(
      {{"a1", "a2"}, {"b1", "b2"}, {"c1", "c2"}},
      [](const JointAction& a) -> std::vector<Rational> {
        if (a[0] == 0) {
          if (a[1] == 0 && a[2] == 1) return {0, 7, 2};
          if (a[1] == 1 && a[2] == 1) return {0, 6, 6};
          if (a[1] == 1 && a[2] == 0) return {0, 2, 7};
        }
        return {0, 0, 0};
      },
      "modified-chicken");
  TeamPartition p = TeamPartition::last_is_adversary(g);
  return {std::move(g), std::move(p)};
}

/// Zero-sum team game whose pure CoEs ((a2,b1),c1) and ((a1,b2),c2) are not
/// exchangeable.
inline PartitionedGame exchangeability_counterexample() {
  // [c][a][b] -> (u1, u2)
  const int table[2][2][2][2] = {
      {{{0, 0}, {0, 1}}, {{1, 0}, {0, 0}}},
      {{{0, 0}, {0, 1}}, {{1, 0}, {0, 1}}},
  };
  Game g = Game::from_function(
      {{"a1", "a2"}, {"b1", "b2"}, {"c1", "c2"}},
      [&](const JointAction& a) {
        const int u1 = table[a[2]][a[0]][a[1]][0];
        const int u2 = table[a[2]][a[0]][a[1]][1];
        return std::vector<Rational>{u1, u2, -(u1 + u2)};
      },
      "exchange-counter");
  TeamPartition p = TeamPartition::last_is_adversary(g);
  return {std::move(g), std::move(p)};
}

/// Adds a one-action dummy team member in front of a two-player game. The
/// dummy receives -(u_2 + u_3), so the result is zero-sum; team = {1, 2},
/// adversary = 3 (1-based).
inline PartitionedGame reduce_two_player(const Game& g2) {
  if (g2.num_players() != 2) {
    throw InputError("reduce_two_player: expected a 2-player game, got " +
                     std::to_string(g2.num_players()) + " players");
  }
  Game g = Game::from_function(
      {{"dummy"}, g2.action_labels(0), g2.action_labels(1)},
      [&](const JointAction& a) {
        const std::size_t idx = g2.index_of(std::vector<std::size_t>{a[1], a[2]});
        const Rational& u2 = g2.payoff(idx, 0);
        const Rational& u3 = g2.payoff(idx, 1);
        return std::vector<Rational>{-(u2 + u3), u2, u3};
      },
      g2.name().empty() ? std::string("reduced") : g2.name() + "-reduced");
  TeamPartition p(g, {0, 1}, 2);
  return {std::move(g), std::move(p)};
}

/// Lifts a two-player profile (x_2, x_3) to the reduction: x_T(dummy, a_2) =
/// x_2(a_2) and the adversary plays x_3.
inline CoECandidate lift_two_player_profile(const PartitionedGame& reduced,
                                            const Profile& profile2) {
  if (profile2.size() != 2) throw InputError("lift_two_player_profile: expected 2 strategies");
  CoECandidate cand{CorrelatedStrategy{{0, 1}, profile2[0].probs},
                    MixedStrategy{2, profile2[1].probs}};
  cand.validate(reduced.game, reduced.partition);
  return cand;
}

struct Literal {
  std::size_t var = 1;  // 1-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::vector<Literal>> clauses;

  void validate() const {
    if (num_vars == 0) throw InputError("cnf: formula has no variables");
    if (clauses.empty()) throw InputError("cnf: formula has no clauses");
    for (std::size_t c = 0; c < clauses.size(); ++c) {
      if (clauses[c].empty()) throw InputError("cnf: clause " + std::to_string(c + 1) + " is empty");
      for (const Literal& l : clauses[c]) {
        if (l.var == 0 || l.var > num_vars) {
          throw InputError("cnf: clause " + std::to_string(c + 1) + " references variable " +
                           std::to_string(l.var) + " outside 1.." + std::to_string(num_vars));
        }
      }
    }
  }
};

/// Action layout of the CNF game: literals z1, ~z1, ..., zk, ~zk; variables
/// y1..yk; clauses c1..cm; and the escape action f.
struct SatGameLayout {
  std::size_t num_vars = 0;
  std::size_t num_clauses = 0;

  std::size_t num_literals() const { return 2 * num_vars; }
  std::size_t literal(std::size_t var, bool positive) const {
    return 2 * (var - 1) + (positive ? 0 : 1);
  }
  std::size_t variable(std::size_t var) const { return num_literals() + var - 1; }
  std::size_t clause(std::size_t c) const { return num_literals() + num_vars + c; }
  std::size_t escape() const { return num_literals() + num_vars + num_clauses; }
  std::size_t num_actions() const { return escape() + 1; }
  bool is_literal(std::size_t a) const { return a < num_literals(); }
};

/// Symmetric two-player game built from a CNF formula: players who play the
/// literals of a satisfying assignment uniformly reach an equilibrium worth 1
/// each, while (f, f) is always an equilibrium worth 2 each.
///
/// The diagonal literal payoff u(l, l) is set to 1 (the literal-pair rule
/// otherwise only covers distinct literals).
inline Game sat_game(const CnfFormula& phi) {
  phi.validate();
  const SatGameLayout layout{phi.num_vars, phi.clauses.size()};
  const long k = static_cast<long>(phi.num_vars);

  std::vector<std::string> labels;
  for (std::size_t v = 1; v <= phi.num_vars; ++v) {
    labels.push_back("z" + std::to_string(v));
    labels.push_back("~z" + std::to_string(v));
  }
  for (std::size_t v = 1; v <= phi.num_vars; ++v) labels.push_back("y" + std::to_string(v));
  for (std::size_t c = 1; c <= phi.clauses.size(); ++c) labels.push_back("c" + std::to_string(c));
  labels.push_back("f");

  auto literal_var = [](std::size_t a) { return a / 2 + 1; };
  auto literal_positive = [](std::size_t a) { return a % 2 == 0; };
  auto clause_has = [&](std::size_t c, std::size_t lit) {
    for (const Literal& l : phi.clauses[c]) {
      if (l.var == literal_var(lit) && l.positive == literal_positive(lit)) return true;
    }
    return false;
  };

  // Row player's payoff for (own, other).
  auto u = [&](std::size_t own, std::size_t other) -> Rational {
    const bool other_lit = layout.is_literal(other);
    if (own == layout.escape()) return other == layout.escape() ? 2 : 1;
    if (!other_lit) return -2;
    if (layout.is_literal(own)) {
      if (own == other) return 1;
      if (literal_var(own) == literal_var(other)) return -2;  // l vs its negation
      return 1;
    }
    if (own < layout.clause(0)) {  // a variable
      const std::size_t var = own - layout.num_literals() + 1;
      return literal_var(other) == var ? Rational(2 - k) : Rational(2);
    }
    const std::size_t c = own - layout.clause(0);
    return clause_has(c, other) ? Rational(2 - k) : Rational(2);
  };

  return Game::from_function(
      {labels, labels},
      [&](const JointAction& a) { return std::vector<Rational>{u(a[0], a[1]), u(a[1], a[0])}; },
      "sat-game");
}

enum class RandomFlavor { kGeneral, kZeroSum, kConsistentZeroSum };

struct RandomGameSpec {
  std::vector<std::size_t> actions_per_player;
  std::uint64_t seed = 0;
  RandomFlavor flavor = RandomFlavor::kGeneral;
  /// Team constants for kConsistentZeroSum: u_i = u_T / k_i with
  /// sum_i 1/k_i = 1 and every k_i > 0.
  std::vector<Rational> k;
  /// Payoffs are drawn uniformly from [-payoff_range, payoff_range].
  long payoff_range = 9;
};

inline std::string default_action_label(std::size_t player, std::size_t action) {
  std::string prefix = player < 26 ? std::string(1, static_cast<char>('a' + player))
                                   : "p" + std::to_string(player + 1) + "_";
  return prefix + std::to_string(action + 1);
}

/// Seeded random game; the team is every player but the last. The tensor is
/// a deterministic function of the spec (mt19937_64 draws are consumed in
/// joint-action order).
inline PartitionedGame random_game(const RandomGameSpec& spec) {
  const std::size_t n = spec.actions_per_player.size();
  if (n < 2) throw InputError("random_game: need at least 2 players");
  if (spec.payoff_range < 0) throw InputError("random_game: payoff_range must be nonnegative");
  if (spec.flavor == RandomFlavor::kConsistentZeroSum) {
    if (spec.k.size() != n - 1) {
      throw InputError("random_game: expected " + std::to_string(n - 1) + " team constants, got " +
                       std::to_string(spec.k.size()));
    }
    Rational recip = 0;
    for (const Rational& ki : spec.k) {
      if (ki <= 0) throw InputError("random_game: team constant " + to_string(ki) + " is not positive");
      recip += 1 / ki;
    }
    if (recip != 1) {
      throw InputError("random_game: reciprocals of the team constants sum to " + to_string(recip) +
                       ", not 1");
    }
  }
  std::vector<std::vector<std::string>> actions(n);
  for (std::size_t p = 0; p < n; ++p) {
    if (spec.actions_per_player[p] == 0) throw InputError("random_game: player with no actions");
    for (std::size_t a = 0; a < spec.actions_per_player[p]; ++a) {
      actions[p].push_back(default_action_label(p, a));
    }
  }
  std::mt19937_64 rng(spec.seed);
  const std::uint64_t width = static_cast<std::uint64_t>(2 * spec.payoff_range + 1);
  auto draw = [&]() {
    return Rational(static_cast<long>(rng() % width) - spec.payoff_range);
  };

  std::string flavor_name = spec.flavor == RandomFlavor::kGeneral    ? "general"
                            : spec.flavor == RandomFlavor::kZeroSum ? "zero-sum"
                                                                     : "consistent-zero-sum";
  Game g = Game::from_function(
      std::move(actions),
      [&](const JointAction&) {
        std::vector<Rational> row(n);
        switch (spec.flavor) {
          case RandomFlavor::kGeneral:
            for (Rational& r : row) r = draw();
            break;
          case RandomFlavor::kZeroSum: {
            Rational total = 0;
            for (std::size_t p = 0; p + 1 < n; ++p) {
              row[p] = draw();
              total += row[p];
            }
            row[n - 1] = -total;
            break;
          }
          case RandomFlavor::kConsistentZeroSum: {
            const Rational team = draw();
            for (std::size_t p = 0; p + 1 < n; ++p) row[p] = team / spec.k[p];
            row[n - 1] = -team;
            break;
          }
        }
        return row;
      },
      "random-" + flavor_name + "-" + std::to_string(spec.seed));
  TeamPartition p = TeamPartition::last_is_adversary(g);
  return {std::move(g), std::move(p)};
}

}  // namespace coop

#endif  // COOP_GENERATORS_HPP_

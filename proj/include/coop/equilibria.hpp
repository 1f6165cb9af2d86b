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

// Exact verifiers for Nash, correlated and co-opetition equilibria, the
// NE -> CoE induction, consistency detection and exchangeability checks.

#ifndef COOP_EQUILIBRIA_HPP_
#define COOP_EQUILIBRIA_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coop/error.hpp"
#include "coop/game.hpp"
#include "coop/rational.hpp"

namespace coop {

enum class Concept { kNash, kCorrelated, kCoopetition, kBestResponse, kTmcoeCertificate };

inline const char* to_string(Concept c) {
  switch (c) {
    case Concept::kNash: return "ne";
    case Concept::kCorrelated: return "ce";
    case Concept::kCoopetition: return "coe";
    case Concept::kBestResponse: return "best-response";
    case Concept::kTmcoeCertificate: return "tmcoe-certificate";
  }
  return "?";
}

/// One violated deviation inequality. For recommendation-based concepts (CE,
/// CoE team constraints) `recommended` is the recommended action and `amount`
/// is the negated left-hand side of the violated inequality. For unilateral
/// checks (NE, adversary best response) `recommended` is empty and `amount`
/// is the exact gain of switching to `deviation`.
struct Violation {
  std::size_t player = 0;
  std::optional<std::size_t> recommended;
  std::size_t deviation = 0;
  Rational amount;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  Concept concept_kind = Concept::kNash;
  std::vector<Violation> violations;

  bool holds() const { return violations.empty(); }
};

/// Exact NE check: every player's every pure deviation gains nothing.
inline VerificationReport verify_ne(const Game& game, const Profile& profile) {
  validate_profile(game, profile);
  VerificationReport report{Concept::kNash, {}};
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    const Rational current = expected_utility(game, profile, p);
    for (std::size_t a = 0; a < game.num_actions(p); ++a) {
      Rational gain = deviation_utility(game, profile, p, a) - current;
      if (gain > 0) report.violations.push_back({p, std::nullopt, a, std::move(gain)});
    }
  }
  return report;
}

/// Exact CE check on a distribution over the full joint action space: for
/// every player i and actions a_i != a'_i,
///   sum_{a_-i} x(a_i, a_-i) (u_i(a_i, a_-i) - u_i(a'_i, a_-i)) >= 0.
inline VerificationReport verify_ce(const Game& game, const CorrelatedStrategy& x) {
  x.validate(game);
  if (x.players.size() != game.num_players()) {
    throw InputError("verify_ce: distribution must cover every player");
  }
  VerificationReport report{Concept::kCorrelated, {}};
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    const std::size_t m = game.num_actions(p);
    const std::size_t stride = game.stride(p);
    // lhs[a][b]: recommended a, deviation b.
    std::vector<std::vector<Rational>> lhs(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t idx = 0; idx < game.num_joint_actions(); ++idx) {
      const Rational& prob = x.probs[idx];
      if (prob == 0) continue;
      const std::size_t a = (idx / stride) % m;
      const std::size_t base = idx - a * stride;
      for (std::size_t b = 0; b < m; ++b) {
        if (b == a) continue;
        lhs[a][b] += prob * (game.payoff(idx, p) - game.payoff(base + b * stride, p));
      }
    }
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (a != b && lhs[a][b] < 0) report.violations.push_back({p, a, b, -lhs[a][b]});
      }
    }
  }
  return report;
}

/// u_n(x_T, a_n) for every adversary action.
inline std::vector<Rational> adversary_payoffs(const TeamView& view,
                                               const CorrelatedStrategy& team_strategy) {
  const std::size_t adv = view.partition().adversary();
  std::vector<Rational> out(view.num_adversary_actions(), Rational(0));
  for (std::size_t t = 0; t < view.num_team_actions(); ++t) {
    const Rational& pt = team_strategy.probs[t];
    if (pt == 0) continue;
    for (std::size_t b = 0; b < out.size(); ++b) out[b] += pt * view.utility(t, b, adv);
  }
  return out;
}

/// Whether x_n is a best response to x_T. Pure deviations suffice: if no
/// pure action beats x_n, no mixture does either.
inline VerificationReport is_best_response(const Game& game, const TeamPartition& partition,
                                           const CorrelatedStrategy& team_strategy,
                                           const MixedStrategy& adversary_strategy) {
  CoECandidate cand{team_strategy, adversary_strategy};
  cand.validate(game, partition);
  TeamView view(game, partition);
  std::vector<Rational> payoffs = adversary_payoffs(view, team_strategy);
  const Rational current = dot(adversary_strategy.probs, payoffs);
  VerificationReport report{Concept::kBestResponse, {}};
  for (std::size_t b = 0; b < payoffs.size(); ++b) {
    Rational gain = payoffs[b] - current;
    if (gain > 0) report.violations.push_back({partition.adversary(), std::nullopt, b, std::move(gain)});
  }
  return report;
}

/// Team-side CoE inequalities: for each team member i and a_i != a'_i,
///   sum_{a_T : a_T[i] = a_i} x_T(a_T) (u_i(a_T, x_n) - u_i(a_T[i <- a'_i], x_n)) >= 0.
inline std::vector<Violation> team_ce_violations(const TeamView& view, const CoECandidate& cand) {
  const Game& game = view.game();
  const auto& team = view.partition().team();
  std::vector<Violation> out;
  // Cache u_i(a_T, x_n) for every team action and member.
  std::vector<std::vector<Rational>> vs(team.size(), std::vector<Rational>(view.num_team_actions()));
  for (std::size_t k = 0; k < team.size(); ++k) {
    for (std::size_t t = 0; t < view.num_team_actions(); ++t) {
      vs[k][t] = view.utility_vs(t, cand.adversary_strategy, team[k]);
    }
  }
  for (std::size_t k = 0; k < team.size(); ++k) {
    const std::size_t m = game.num_actions(team[k]);
    std::vector<std::vector<Rational>> lhs(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t t = 0; t < view.num_team_actions(); ++t) {
      const Rational& pt = cand.team_strategy.probs[t];
      if (pt == 0) continue;
      const std::size_t a = view.team_action(t)[k];
      for (std::size_t b = 0; b < m; ++b) {
        if (b == a) continue;
        lhs[a][b] += pt * (vs[k][t] - vs[k][view.with_action(t, k, b)]);
      }
    }
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (a != b && lhs[a][b] < 0) out.push_back({team[k], a, b, -lhs[a][b]});
      }
    }
  }
  return out;
}

/// CoE: x_n is a best response to x_T, and x_T satisfies the correlated
/// deviation inequalities for every team member given x_n.
inline VerificationReport verify_coe(const Game& game, const TeamPartition& partition,
                                     const CoECandidate& cand) {
  VerificationReport report = is_best_response(game, partition, cand.team_strategy,
                                               cand.adversary_strategy);
  report.concept_kind = Concept::kCoopetition;
  TeamView view(game, partition);
  for (Violation& v : team_ce_violations(view, cand)) report.violations.push_back(std::move(v));
  return report;
}

/// Induces a CoE from a Nash equilibrium by taking the product of the team
/// members' strategies. Throws PreconditionError naming the first profitable
/// deviation when the profile is not an NE.
inline CoECandidate ne_to_coe(const Game& game, const TeamPartition& partition,
                              const Profile& profile) {
  VerificationReport ne = verify_ne(game, profile);
  if (!ne.holds()) {
    const Violation& v = ne.violations.front();
    throw PreconditionError("ne_to_coe: profile is not a Nash equilibrium; player " +
                            std::to_string(v.player + 1) + " gains " + to_string(v.amount) +
                            " by deviating to " + game.action_label(v.player, v.deviation));
  }
  CoECandidate cand = candidate_from_profile(game, partition, profile);
  if (!verify_coe(game, partition, cand).holds()) {
    throw std::logic_error("ne_to_coe: induced candidate failed verify_coe");
  }
  return cand;
}

/// A failed consistency check: for `player`, moving from joint action
/// `recommended` to `deviation` changes u_T and u_player in ways no positive
/// constant reconciles. When only the elementwise identity k*u_i = u_T fails
/// (all differences agree), deviation equals recommended.
struct ConsistencyWitness {
  std::size_t player = 0;
  JointAction recommended;
  JointAction deviation;
};

struct ConsistencyReport {
  bool consistent = false;
  /// k_i per team member (in team order), present when consistent.
  std::vector<Rational> constants;
  /// First witness of each inconsistent team member, in team order.
  std::vector<ConsistencyWitness> witnesses;
};

/// Detects team members whose utility is a positive multiple of the team
/// utility: k_i * u_i(a) = u_T(a) for every joint action a, with k_i > 0.
inline ConsistencyReport check_consistency(const Game& game, const TeamPartition& partition) {
  const auto& team = partition.team();
  std::vector<Rational> u_team(game.num_joint_actions(), Rational(0));
  for (std::size_t idx = 0; idx < game.num_joint_actions(); ++idx) {
    for (std::size_t p : team) u_team[idx] += game.payoff(idx, p);
  }

  ConsistencyReport report;
  for (std::size_t p : team) {
    // Difference scan over (a, a') pairs differing only in p's action, in
    // lexicographic order of a then a'_p.
    const std::size_t m = game.num_actions(p);
    const std::size_t stride = game.stride(p);
    std::optional<Rational> k;
    std::optional<ConsistencyWitness> witness;
    for (std::size_t idx = 0; idx < game.num_joint_actions() && !witness; ++idx) {
      const std::size_t a = (idx / stride) % m;
      for (std::size_t b = 0; b < m && !witness; ++b) {
        if (b == a) continue;
        const std::size_t other = idx - a * stride + b * stride;
        const Rational d_team = u_team[idx] - u_team[other];
        const Rational d_own = game.payoff(idx, p) - game.payoff(other, p);
        bool bad = false;
        if (d_own == 0) {
          bad = d_team != 0;
        } else if (!k) {
          Rational ratio = d_team / d_own;
          if (ratio <= 0) {
            bad = true;
          } else {
            k = ratio;
          }
        } else {
          bad = d_team != *k * d_own;
        }
        if (bad) witness = ConsistencyWitness{p, game.joint_action(idx), game.joint_action(other)};
      }
    }
    // Elementwise identity.
    if (!witness) {
      std::optional<Rational> scale = k;
      for (std::size_t idx = 0; idx < game.num_joint_actions() && !witness; ++idx) {
        const Rational& own = game.payoff(idx, p);
        if (!scale) {
          if (own == 0 && u_team[idx] == 0) continue;
          if (own == 0 || u_team[idx] / own <= 0) {
            witness = ConsistencyWitness{p, game.joint_action(idx), game.joint_action(idx)};
            break;
          }
          scale = u_team[idx] / own;
        }
        if (*scale * own != u_team[idx]) {
          witness = ConsistencyWitness{p, game.joint_action(idx), game.joint_action(idx)};
        }
      }
      k = scale ? scale : std::optional<Rational>(Rational(1));
    }
    if (witness) {
      report.witnesses.push_back(std::move(*witness));
    } else {
      report.constants.push_back(*k);
    }
  }
  report.consistent = report.witnesses.empty();
  if (!report.consistent) report.constants.clear();
  return report;
}

struct ExchangeabilityReport {
  bool exchangeable = false;
  /// (e1.team, e2.adversary)
  VerificationReport first_team_second_adversary;
  /// (e2.team, e1.adversary)
  VerificationReport second_team_first_adversary;
};

/// Swaps the adversary components of two CoEs and verifies both results.
inline ExchangeabilityReport check_exchangeable(const Game& game, const TeamPartition& partition,
                                                const CoECandidate& e1, const CoECandidate& e2) {
  if (!verify_coe(game, partition, e1).holds()) {
    throw PreconditionError("check_exchangeable: first candidate is not a CoE");
  }
  if (!verify_coe(game, partition, e2).holds()) {
    throw PreconditionError("check_exchangeable: second candidate is not a CoE");
  }
  ExchangeabilityReport report;
  report.first_team_second_adversary =
      verify_coe(game, partition, {e1.team_strategy, e2.adversary_strategy});
  report.second_team_first_adversary =
      verify_coe(game, partition, {e2.team_strategy, e1.adversary_strategy});
  report.exchangeable =
      report.first_team_second_adversary.holds() && report.second_team_first_adversary.holds();
  return report;
}

}  // namespace coop

#endif  // COOP_EQUILIBRIA_HPP_

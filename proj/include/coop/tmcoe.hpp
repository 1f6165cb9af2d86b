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

// Team-maximizing co-opetition equilibria.
//
// In general the search is a nonlinear program over (x_T, x_n). Once x_n is
// fixed, the adversary best-response constraints and the team's correlated
// deviation constraints are all linear in x_T, so the general solver sweeps
// a rational grid over the adversary simplex and solves one LP per point.
// For zero-sum games whose team members are consistent with the team utility
// the team-vs-adversary maxmin LP gives the exact answer directly.

#ifndef COOP_TMCOE_HPP_
#define COOP_TMCOE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coop/equilibria.hpp"
#include "coop/error.hpp"
#include "coop/game.hpp"
#include "coop/lp.hpp"
#include "coop/rational.hpp"

namespace coop {

/// Largest number of adversary grid points solve_tmcoe_grid will visit.
inline constexpr std::size_t kMaxGridPoints = 200'000;

enum class TmcoeMethod { kExactConsistentLp, kFixedAdversaryLp, kGridSearch };

inline const char* to_string(TmcoeMethod m) {
  switch (m) {
    case TmcoeMethod::kExactConsistentLp: return "exact-consistent-lp";
    case TmcoeMethod::kFixedAdversaryLp: return "fixed-adversary-lp";
    case TmcoeMethod::kGridSearch: return "grid-search";
  }
  return "?";
}

struct TmcoeResult {
  CoECandidate candidate;
  Rational team_value;
  TmcoeMethod method = TmcoeMethod::kGridSearch;
  /// True when the result provably solves the unrestricted problem.
  bool certified_exact = false;
  /// Grid denominator; set for kGridSearch only.
  std::optional<std::size_t> grid_resolution;
};

/// Whether pure adversary action `action` strictly beats every other
/// adversary action against every team joint action. A one-action adversary
/// qualifies vacuously.
inline bool strictly_dominant_adversary_action(const Game& game, const TeamPartition& partition,
                                               std::size_t action) {
  TeamView view(game, partition);
  const std::size_t adv = partition.adversary();
  for (std::size_t t = 0; t < view.num_team_actions(); ++t) {
    for (std::size_t b = 0; b < view.num_adversary_actions(); ++b) {
      if (b != action && view.utility(t, action, adv) <= view.utility(t, b, adv)) return false;
    }
  }
  return true;
}

inline bool certified_by_dominance(const Game& game, const TeamPartition& partition,
                                   const MixedStrategy& adversary) {
  std::optional<std::size_t> pure;
  for (std::size_t b = 0; b < adversary.probs.size(); ++b) {
    if (adversary.probs[b] == 1) pure = b;
  }
  return pure && strictly_dominant_adversary_action(game, partition, *pure);
}

/// Maximizes u_T(x_T, x_n) over x_T for a fixed adversary strategy, subject
/// to x_n being a best response to x_T and the team's correlated deviation
/// constraints. Returns nullopt when no x_T makes x_n a best response.
inline std::optional<TmcoeResult> solve_tmcoe_fixed_adversary(const Game& game,
                                                              const TeamPartition& partition,
                                                              const MixedStrategy& adversary) {
  if (adversary.player != partition.adversary()) {
    throw InputError("solve_tmcoe_fixed_adversary: strategy belongs to player " +
                     std::to_string(adversary.player + 1) + ", partition adversary is " +
                     std::to_string(partition.adversary() + 1));
  }
  adversary.validate(game);
  TeamView view(game, partition);
  const std::size_t nt = view.num_team_actions();
  const std::size_t adv = partition.adversary();
  const auto& team = partition.team();

  LinearProgram lp(nt, Sense::kMaximize);
  for (std::size_t t = 0; t < nt; ++t) lp.objective[t] = view.team_utility_vs(t, adversary);
  lp.add(std::vector<Rational>(nt, Rational(1)), Relation::kEqual, 1);

  // u_n(x_T, x_n) >= u_n(x_T, a_n) for every pure a_n.
  std::vector<Rational> adv_vs(nt);
  for (std::size_t t = 0; t < nt; ++t) adv_vs[t] = view.utility_vs(t, adversary, adv);
  for (std::size_t b = 0; b < view.num_adversary_actions(); ++b) {
    std::vector<Rational> row(nt);
    bool trivial = true;
    for (std::size_t t = 0; t < nt; ++t) {
      row[t] = adv_vs[t] - view.utility(t, b, adv);
      if (row[t] != 0) trivial = false;
    }
    if (!trivial) lp.add(std::move(row), Relation::kGreaterEqual, 0);
  }

  // Team deviation constraints, linear in x_T once x_n is fixed.
  for (std::size_t k = 0; k < team.size(); ++k) {
    std::vector<Rational> own(nt);
    for (std::size_t t = 0; t < nt; ++t) own[t] = view.utility_vs(t, adversary, team[k]);
    const std::size_t m = game.num_actions(team[k]);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (a == b) continue;
        std::vector<Rational> row(nt, Rational(0));
        bool trivial = true;
        for (std::size_t t = 0; t < nt; ++t) {
          if (view.team_action(t)[k] != a) continue;
          row[t] = own[t] - own[view.with_action(t, k, b)];
          if (row[t] != 0) trivial = false;
        }
        if (!trivial) lp.add(std::move(row), Relation::kGreaterEqual, 0);
      }
    }
  }

  LpSolution sol = solve_lp(lp);
  if (sol.status == LpStatus::kInfeasible) return std::nullopt;
  if (sol.status != LpStatus::kOptimal) {
    throw std::logic_error("solve_tmcoe_fixed_adversary: bounded LP reported unbounded");
  }
  TmcoeResult result;
  result.candidate = {CorrelatedStrategy{team, sol.primal}, adversary};
  result.team_value = sol.objective_value;
  result.method = TmcoeMethod::kFixedAdversaryLp;
  result.certified_exact = certified_by_dominance(game, partition, adversary);
  if (!verify_coe(game, partition, result.candidate).holds()) {
    throw std::logic_error("solve_tmcoe_fixed_adversary: LP optimum failed verify_coe");
  }
  return result;
}

/// Number of grid points: compositions of `resolution` into `parts` parts.
inline std::size_t grid_size(std::size_t parts, std::size_t resolution) {
  // C(resolution + parts - 1, parts - 1), saturating at SIZE_MAX.
  long double count = 1;
  for (std::size_t i = 1; i < parts; ++i) {
    count = count * static_cast<long double>(resolution + i) / static_cast<long double>(i);
    if (count > 1e18L) return SIZE_MAX;
  }
  return static_cast<std::size_t>(count + 0.5L);
}

/// Every adversary strategy whose probabilities are multiples of
/// 1/resolution, in lexicographic order of the probability vector.
inline std::vector<std::vector<Rational>> adversary_grid(std::size_t num_actions,
                                                         std::size_t resolution) {
  std::vector<std::vector<Rational>> out;
  std::vector<std::size_t> counts(num_actions, 0);
  const long den = static_cast<long>(resolution);
  // Recursive fill, smallest first entry first.
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == num_actions) {
      counts[pos] = left;
      std::vector<Rational> point(num_actions);
      for (std::size_t i = 0; i < num_actions; ++i) {
        point[i] = Rational(static_cast<long>(counts[i]), den);
      }
      out.push_back(std::move(point));
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[pos] = c;
      self(self, pos + 1, left - c);
    }
  };
  rec(rec, 0, resolution);
  return out;
}

/// Best fixed-adversary LP optimum over the adversary grid of the given
/// resolution. Ties go to the lexicographically smallest adversary strategy.
/// Returns nullopt when no grid point supports a CoE (every CoE of the game
/// then needs an adversary mixture finer than the grid).
inline std::optional<TmcoeResult> solve_tmcoe_grid(const Game& game, const TeamPartition& partition,
                                    std::size_t resolution) {
  if (resolution == 0) throw InputError("solve_tmcoe_grid: resolution must be positive");
  const std::size_t adv = partition.adversary();
  const std::size_t m = game.num_actions(adv);
  const std::size_t points = grid_size(m, resolution);
  if (points > kMaxGridPoints) {
    throw ScaleError("solve_tmcoe_grid: " +
                     (points == SIZE_MAX ? std::string("too many") : std::to_string(points)) +
                     " grid points exceeds the ceiling of " + std::to_string(kMaxGridPoints));
  }
  std::optional<TmcoeResult> best;
  for (std::vector<Rational>& point : adversary_grid(m, resolution)) {
    MixedStrategy x_n{adv, std::move(point)};
    auto r = solve_tmcoe_fixed_adversary(game, partition, x_n);
    if (!r) continue;
    // Points arrive in lexicographic order, so keeping the first of equals
    // implements the tie-break.
    if (!best || r->team_value > best->team_value) best = std::move(r);
  }
  if (!best) return std::nullopt;
  best->method = TmcoeMethod::kGridSearch;
  best->grid_resolution = resolution;
  best->certified_exact = certified_by_dominance(game, partition, best->candidate.adversary_strategy);
  return best;
}

/// Exact TMCoE for zero-sum games with consistent team utilities: the
/// team-as-one-player maxmin strategy pair. Throws PreconditionError naming
/// the failed precondition otherwise.
inline TmcoeResult solve_tmcoe_consistent_lp(const Game& game, const TeamPartition& partition) {
  if (!game.is_zero_sum()) {
    throw PreconditionError("solve_tmcoe_consistent_lp: game is not zero-sum");
  }
  if (!check_consistency(game, partition).consistent) {
    throw PreconditionError(
        "solve_tmcoe_consistent_lp: team utilities are not consistent with the team utility");
  }
  TeamView view(game, partition);
  MaxminSolution mm = solve_maxmin(view.team_matrix());
  TmcoeResult result;
  result.candidate = {CorrelatedStrategy{partition.team(), mm.row_strategy},
                      MixedStrategy{partition.adversary(), mm.col_strategy}};
  result.team_value = mm.value;
  result.method = TmcoeMethod::kExactConsistentLp;
  result.certified_exact = true;
  if (!verify_coe(game, partition, result.candidate).holds()) {
    throw std::logic_error("solve_tmcoe_consistent_lp: maxmin solution failed verify_coe");
  }
  return result;
}

}  // namespace coop

#endif  // COOP_TMCOE_HPP_

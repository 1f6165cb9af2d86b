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

#ifndef COOP_NASH_HPP_
#define COOP_NASH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "coop/algebraic_nash.hpp"
#include "coop/equilibria.hpp"
#include "coop/error.hpp"
#include "coop/game.hpp"
#include "coop/lp.hpp"
#include "coop/rational.hpp"

namespace coop {

/// Joint action ceiling for support enumeration.
inline constexpr std::size_t kMaxNashJointActions = 10'000;
/// Ceiling on the number of support profiles examined.
inline constexpr std::size_t kMaxSupportProfiles = 2'000'000;

struct SupportEnumerationOptions {
  /// Per player, which actions may appear in a support. Empty means all.
  /// Deviation checks always range over every action.
  std::vector<std::vector<bool>> allowed;
};

struct NashEnumeration {
  /// Distinct equilibria, pure profiles first, then by total support size.
  std::vector<Profile> equilibria;
  /// Equilibria with irrational probabilities, certified exactly.
  std::vector<AlgebraicNash> algebraic;
  std::size_t supports_examined = 0;
  /// Support profiles that were not fully decided: three or more mixers
  /// outside the reach of solve_three_mixers (more than three players, no
  /// usable pivot, or a degenerate slice). Equilibria certified for such a
  /// profile are still reported.
  std::size_t supports_skipped = 0;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> candidate_supports(std::size_t num_actions,
                                                                const std::vector<bool>& allowed,
                                                                std::size_t max_support) {
  if (num_actions > 24) throw ScaleError("support enumeration: more than 24 actions for a player");
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << num_actions); ++mask) {
    std::vector<std::size_t> s;
    bool ok = true;
    for (std::size_t a = 0; a < num_actions; ++a) {
      if (mask & (std::size_t{1} << a)) {
        if (!allowed.empty() && !allowed[a]) ok = false;
        s.push_back(a);
      }
    }
    if (ok && s.size() <= max_support) out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

// u_player at the joint action given by `pure` with the listed overrides.
inline const Rational& payoff_at(const Game& game, JointAction& pure, std::size_t player,
                                 std::size_t p1, std::size_t a1, std::size_t p2 = SIZE_MAX,
                                 std::size_t a2 = 0) {
  const std::size_t save1 = pure[p1];
  pure[p1] = a1;
  std::size_t save2 = 0;
  if (p2 != SIZE_MAX) {
    save2 = pure[p2];
    pure[p2] = a2;
  }
  const Rational& v = game.payoff(game.index_of(pure), player);
  pure[p1] = save1;
  if (p2 != SIZE_MAX) pure[p2] = save2;
  return v;
}

// Finds x_other on `support_other` such that every action in `support_owner`
// earns owner the same payoff v and no action earns more, with the remaining
// players fixed at `pure`.
inline std::optional<std::vector<Rational>> solve_indifference(
    const Game& game, JointAction pure, std::size_t owner,
    const std::vector<std::size_t>& support_owner, std::size_t other,
    const std::vector<std::size_t>& support_other) {
  const std::size_t k = support_other.size();
  LinearProgram lp(k + 1, Sense::kMaximize);
  lp.bounds.assign(k + 1, VariableBounds{});
  lp.bounds[k] = VariableBounds::free();
  for (std::size_t a = 0; a < game.num_actions(owner); ++a) {
    std::vector<Rational> row(k + 1);
    for (std::size_t c = 0; c < k; ++c) {
      row[c] = payoff_at(game, pure, owner, owner, a, other, support_other[c]);
    }
    row[k] = -1;
    bool in_support = std::find(support_owner.begin(), support_owner.end(), a) != support_owner.end();
    lp.add(std::move(row), in_support ? Relation::kEqual : Relation::kLessEqual, 0);
  }
  std::vector<Rational> simplex(k + 1, Rational(1));
  simplex[k] = 0;
  lp.add(std::move(simplex), Relation::kEqual, 1);
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) return std::nullopt;
  std::vector<Rational> x(game.num_actions(other), Rational(0));
  for (std::size_t c = 0; c < k; ++c) x[support_other[c]] = sol.primal[c];
  return x;
}

// Single mixing player j: find x_j on its support keeping every pure player's
// fixed action a best response.
inline std::optional<std::vector<Rational>> solve_single_mixer(
    const Game& game, JointAction pure, std::size_t mixer,
    const std::vector<std::size_t>& support) {
  const std::size_t k = support.size();
  LinearProgram lp(k, Sense::kMaximize);
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    if (i == mixer) continue;
    for (std::size_t b = 0; b < game.num_actions(i); ++b) {
      if (b == pure[i]) continue;
      std::vector<Rational> row(k);
      for (std::size_t c = 0; c < k; ++c) {
        row[c] = payoff_at(game, pure, i, mixer, support[c]) -
                 payoff_at(game, pure, i, mixer, support[c], i, b);
      }
      lp.add(std::move(row), Relation::kGreaterEqual, 0);
    }
  }
  lp.add(std::vector<Rational>(k, Rational(1)), Relation::kEqual, 1);
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) return std::nullopt;
  std::vector<Rational> x(game.num_actions(mixer), Rational(0));
  for (std::size_t c = 0; c < k; ++c) x[support[c]] = sol.primal[c];
  return x;
}

}  // namespace detail

/// Enumerates Nash equilibria by support profiles. For each profile with at
/// most two mixing players the exact indifference/feasibility systems are
/// linear and are solved with the rational LP; every candidate is then
/// re-verified with verify_ne. Three-player profiles where everyone mixes
/// go to solve_three_mixers. Degenerate games may have continua of
/// equilibria; one vertex per support profile is reported.
inline NashEnumeration find_nash_support_enumeration(const Game& game, std::size_t max_support,
                                                     const SupportEnumerationOptions& options = {}) {
  if (max_support == 0) throw InputError("support enumeration: max_support must be positive");
  if (game.num_joint_actions() > kMaxNashJointActions) {
    throw ScaleError("support enumeration: " + std::to_string(game.num_joint_actions()) +
                     " joint actions exceeds the ceiling of " +
                     std::to_string(kMaxNashJointActions));
  }
  const std::size_t n = game.num_players();
  if (!options.allowed.empty() && options.allowed.size() != n) {
    throw InputError("support enumeration: allowed mask must have one entry per player");
  }
  std::vector<std::vector<std::vector<std::size_t>>> supports(n);
  std::size_t total = 1;
  for (std::size_t p = 0; p < n; ++p) {
    const std::vector<bool> mask = options.allowed.empty() ? std::vector<bool>{} : options.allowed[p];
    if (!mask.empty() && mask.size() != game.num_actions(p)) {
      throw InputError("support enumeration: allowed mask for player " + std::to_string(p + 1) +
                       " has the wrong size");
    }
    supports[p] = detail::candidate_supports(game.num_actions(p), mask, max_support);
    if (supports[p].empty()) return {};
    if (total > kMaxSupportProfiles / supports[p].size()) {
      throw ScaleError("support enumeration: more than " + std::to_string(kMaxSupportProfiles) +
                       " support profiles");
    }
    total *= supports[p].size();
  }

  // Visit profiles by total support size, then lexicographically.
  std::vector<std::vector<std::size_t>> order;
  order.reserve(total);
  std::vector<std::size_t> pick(n, 0);
  for (std::size_t count = 0; count < total; ++count) {
    order.push_back(pick);
    for (std::size_t p = n; p-- > 0;) {
      if (++pick[p] < supports[p].size()) break;
      pick[p] = 0;
    }
  }
  auto size_of = [&](const std::vector<std::size_t>& prof) {
    std::size_t s = 0;
    for (std::size_t p = 0; p < n; ++p) s += supports[p][prof[p]].size();
    return s;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](const auto& x, const auto& y) { return size_of(x) < size_of(y); });

  NashEnumeration result;
  for (const auto& prof : order) {
    std::vector<std::size_t> mixers;
    JointAction pure(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
      const auto& s = supports[p][prof[p]];
      if (s.size() > 1) mixers.push_back(p);
      pure[p] = s.front();
    }
    if (mixers.size() > 2) {
      std::vector<std::vector<std::size_t>> chosen(n);
      for (std::size_t p = 0; p < n; ++p) chosen[p] = supports[p][prof[p]];
      ThreeMixerOutcome solved = solve_three_mixers(game, chosen);
      if (solved.handled) {
        ++result.supports_examined;
      } else {
        ++result.supports_skipped;
      }
      for (Profile& eq : solved.rational) {
        if (std::find(result.equilibria.begin(), result.equilibria.end(), eq) == result.equilibria.end()) {
          result.equilibria.push_back(std::move(eq));
        }
      }
      for (AlgebraicNash& eq : solved.algebraic) result.algebraic.push_back(std::move(eq));
      continue;
    }
    ++result.supports_examined;

    Profile profile;
    for (std::size_t p = 0; p < n; ++p) profile.push_back(MixedStrategy::pure(game, p, pure[p]));
    if (mixers.size() == 1) {
      const std::size_t j = mixers[0];
      const auto& sj = supports[j][prof[j]];
      auto x = detail::solve_single_mixer(game, pure, j, sj);
      if (!x) continue;
      profile[j].probs = std::move(*x);
    } else if (mixers.size() == 2) {
      const std::size_t j = mixers[0];
      const std::size_t k = mixers[1];
      const auto& sj = supports[j][prof[j]];
      const auto& sk = supports[k][prof[k]];
      auto xk = detail::solve_indifference(game, pure, j, sj, k, sk);
      if (!xk) continue;
      auto xj = detail::solve_indifference(game, pure, k, sk, j, sj);
      if (!xj) continue;
      profile[j].probs = std::move(*xj);
      profile[k].probs = std::move(*xk);
    }
    if (!verify_ne(game, profile).holds()) continue;
    if (std::find(result.equilibria.begin(), result.equilibria.end(), profile) !=
        result.equilibria.end()) {
      continue;
    }
    result.equilibria.push_back(std::move(profile));
  }
  return result;
}

}  // namespace coop

#endif  // COOP_NASH_HPP_

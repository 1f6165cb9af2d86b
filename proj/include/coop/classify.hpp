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

#ifndef COOP_CLASSIFY_HPP_
#define COOP_CLASSIFY_HPP_

#include <cstddef>
#include <optional>
#include <variant>

#include "coop/equilibria.hpp"
#include "coop/game.hpp"
#include "coop/lp.hpp"
#include "coop/rational.hpp"
#include "coop/tmcoe.hpp"

namespace coop {

/// A profile in one of the two forms a strategy table row can take.
using ProfileForm = std::variant<Profile, CoECandidate>;

enum class Tri { kNo, kYes, kNotApplicable };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::kNo: return "no";
    case Tri::kYes: return "yes";
    case Tri::kNotApplicable: return "n/a";
  }
  return "?";
}

inline Tri tri(bool b) { return b ? Tri::kYes : Tri::kNo; }

/// One strategy-table row.
///
/// NE is judged for product profiles and CoE/TMCoE for correlated ones; the
/// other columns are n/a. `stable` is NE-or-CoE in the profile's own form.
/// TMCoE compares the value against a reference optimum: the exact maxmin
/// solution when the game is zero-sum and consistent, otherwise the grid
/// optimum at `grid_resolution`.
struct Classification {
  bool correlated = false;
  Rational team_utility;
  Tri stable = Tri::kNo;
  Tri ne = Tri::kNotApplicable;
  Tri coe = Tri::kNotApplicable;
  Tri tmcoe = Tri::kNotApplicable;
  /// The team's correlated strategy attains the maxmin value of the
  /// team-vs-adversary matrix, and the adversary's strategy keeps u_T there.
  bool team_maxmin = false;
  Rational maxmin_value;
  std::size_t grid_resolution = 1;
  std::optional<TmcoeMethod> reference_method;
  std::optional<Rational> reference_optimum;
  bool reference_certified = false;
  /// Report behind ne or coe.
  VerificationReport report;
};

inline Classification classify_profile(const Game& game, const TeamPartition& partition,
                                       const ProfileForm& form, std::size_t grid_resolution) {
  Classification out;
  out.grid_resolution = grid_resolution;
  CoECandidate cand;
  if (const auto* profile = std::get_if<Profile>(&form)) {
    validate_profile(game, *profile);
    cand = candidate_from_profile(game, partition, *profile);
    out.report = verify_ne(game, *profile);
    out.ne = tri(out.report.holds());
    out.stable = out.ne;
  } else {
    out.correlated = true;
    cand = std::get<CoECandidate>(form);
    cand.validate(game, partition);
    out.report = verify_coe(game, partition, cand);
    out.coe = tri(out.report.holds());
    out.stable = out.coe;
  }
  out.team_utility = team_utility(game, partition, cand);

  TeamView view(game, partition);
  const MaxminSolution mm = solve_maxmin(view.team_matrix());
  out.maxmin_value = mm.value;
  {
    bool guarantees = true;
    for (std::size_t b = 0; b < view.num_adversary_actions(); ++b) {
      Rational v = 0;
      for (std::size_t t = 0; t < view.num_team_actions(); ++t) {
        v += cand.team_strategy.probs[t] * view.team_utility(t, b);
      }
      if (v < mm.value) guarantees = false;
    }
    out.team_maxmin = guarantees && out.team_utility == mm.value;
  }

  if (out.correlated) {
    std::optional<TmcoeResult> ref;
    if (game.is_zero_sum() && check_consistency(game, partition).consistent) {
      ref = solve_tmcoe_consistent_lp(game, partition);
    } else {
      ref = solve_tmcoe_grid(game, partition, grid_resolution);
    }
    if (ref) {
      out.reference_method = ref->method;
      out.reference_optimum = ref->team_value;
      out.reference_certified = ref->certified_exact;
    }
    out.tmcoe = tri(out.coe == Tri::kYes &&
                    (!out.reference_optimum || out.team_utility >= *out.reference_optimum));
  }
  return out;
}

}  // namespace coop

#endif  // COOP_CLASSIFY_HPP_

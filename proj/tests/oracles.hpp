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

// Brute-force reference implementations. Each one is written directly from
// the definitions and shares no solver or verifier code with the library; the
// tests compare library output against them.

#ifndef COOP_TESTS_ORACLES_HPP_
#define COOP_TESTS_ORACLES_HPP_

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "coop/coop.hpp"

namespace coop::oracle {

/// Solves a square system by Gaussian elimination; nullopt when singular.
inline std::optional<std::vector<Rational>> gauss(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

/// max c.x subject to rows (coeffs . x <= rhs, or == rhs when equality) and
/// x >= 0, by enumerating every basic solution. Assumes the feasible region
/// is bounded; returns nullopt when it is empty.
struct VertexLp {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<bool> equality;
};

struct VertexOptimum {
  Rational value;
  std::vector<std::vector<Rational>> argmax;  // every optimal vertex
};

inline std::optional<VertexOptimum> vertex_enumeration(const VertexLp& lp) {
  const std::size_t n = lp.objective.size();
  // All candidate tight constraints: the rows, then x_j >= 0.
  std::vector<std::vector<Rational>> tight_rows = lp.rows;
  std::vector<Rational> tight_rhs = lp.rhs;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    tight_rows.push_back(e);
    tight_rhs.push_back(0);
  }
  const std::size_t total = tight_rows.size();
  auto feasible = [&](const std::vector<Rational>& x) {
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] < 0) return false;
    }
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
      Rational v = 0;
      for (std::size_t j = 0; j < n; ++j) v += lp.rows[i][j] * x[j];
      if (lp.equality[i] ? v != lp.rhs[i] : v > lp.rhs[i]) return false;
    }
    return true;
  };
  std::optional<VertexOptimum> best;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == n) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (std::size_t i : pick) {
        a.push_back(tight_rows[i]);
        b.push_back(tight_rhs[i]);
      }
      auto x = gauss(a, b);
      if (!x || !feasible(*x)) return;
      Rational v = 0;
      for (std::size_t j = 0; j < n; ++j) v += lp.objective[j] * (*x)[j];
      if (!best || v > best->value) {
        best = VertexOptimum{v, {*x}};
      } else if (v == best->value) {
        best->argmax.push_back(*x);
      }
      return;
    }
    for (std::size_t i = start; i < total; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

/// Value of max_x min_c x'Mc for a matrix with exactly two rows: the lower
/// envelope of the column lines is concave in x = P(row 0), so the maximum
/// sits at x in {0, 1} or where two column lines cross.
inline Rational maxmin_two_rows(const std::vector<std::vector<Rational>>& m) {
  const std::size_t cols = m[0].size();
  auto envelope = [&](const Rational& x) {
    std::optional<Rational> low;
    for (std::size_t c = 0; c < cols; ++c) {
      Rational v = x * m[0][c] + (1 - x) * m[1][c];
      if (!low || v < *low) low = v;
    }
    return *low;
  };
  std::vector<Rational> candidates = {0, 1};
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t d = c + 1; d < cols; ++d) {
      // x*m0c + (1-x)*m1c = x*m0d + (1-x)*m1d
      const Rational slope = (m[0][c] - m[1][c]) - (m[0][d] - m[1][d]);
      if (slope == 0) continue;
      const Rational x = (m[1][d] - m[1][c]) / slope;
      if (x >= 0 && x <= 1) candidates.push_back(x);
    }
  }
  Rational best = envelope(candidates[0]);
  for (const Rational& x : candidates) best = std::max(best, envelope(x));
  return best;
}

/// min_y max_r r'My for a matrix with exactly two columns, mirroring the above.
inline Rational minmax_two_cols(const std::vector<std::vector<Rational>>& m) {
  std::vector<std::vector<Rational>> t(2, std::vector<Rational>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r) {
    t[0][r] = -m[r][0];
    t[1][r] = -m[r][1];
  }
  return -maxmin_two_rows(t);
}

/// All Nash equilibria of a nondegenerate 2x2 bimatrix game in closed form,
/// as (P(row 0), P(col 0)) pairs. Returns nullopt for degenerate games (a
/// payoff tie for some player against some opponent action).
inline std::optional<std::vector<std::pair<Rational, Rational>>> nash_2x2(const Game& g) {
  auto u = [&](std::size_t r, std::size_t c, std::size_t p) {
    return g.payoff(std::vector<std::size_t>{r, c}, p);
  };
  for (std::size_t c = 0; c < 2; ++c) {
    if (u(0, c, 0) == u(1, c, 0)) return std::nullopt;
  }
  for (std::size_t r = 0; r < 2; ++r) {
    if (u(r, 0, 1) == u(r, 1, 1)) return std::nullopt;
  }
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      if (u(r, c, 0) > u(1 - r, c, 0) && u(r, c, 1) > u(r, 1 - c, 1)) {
        out.emplace_back(r == 0 ? 1 : 0, c == 0 ? 1 : 0);
      }
    }
  }
  // Row mixes p so the column player is indifferent, and vice versa.
  const Rational dp = u(0, 0, 1) - u(0, 1, 1) - u(1, 0, 1) + u(1, 1, 1);
  const Rational dq = u(0, 0, 0) - u(1, 0, 0) - u(0, 1, 0) + u(1, 1, 0);
  if (dp != 0 && dq != 0) {
    const Rational p = (u(1, 1, 1) - u(1, 0, 1)) / dp;
    const Rational q = (u(1, 1, 0) - u(0, 1, 0)) / dq;
    if (p > 0 && p < 1 && q > 0 && q < 1) out.emplace_back(p, q);
  }
  return out;
}

/// u_i at a pure joint action, read from the tensor.
inline Rational at(const Game& g, const std::vector<std::size_t>& a, std::size_t i) {
  return g.payoff(a, i);
}

/// Expected payoff of player i under a product profile, with player i's
/// strategy optionally replaced by a pure action. Direct sum over the tensor.
inline Rational product_payoff(const Game& g, const Profile& x, std::size_t i,
                               std::optional<std::size_t> forced = std::nullopt) {
  Rational total = 0;
  for (std::size_t idx = 0; idx < g.num_joint_actions(); ++idx) {
    const auto a = g.joint_action(idx);
    if (forced && a[i] != *forced) continue;
    Rational p = 1;
    for (std::size_t j = 0; j < g.num_players(); ++j) {
      if (forced && j == i) continue;
      p *= x[j].probs[a[j]];
    }
    total += p * g.payoff(idx, i);
  }
  return total;
}

/// NE straight from the definition: no pure deviation improves any player.
inline bool is_ne(const Game& g, const Profile& x) {
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    const Rational v = product_payoff(g, x, i);
    for (std::size_t a = 0; a < g.num_actions(i); ++a) {
      if (product_payoff(g, x, i, a) > v) return false;
    }
  }
  return true;
}

/// CoE straight from the deviation inequalities. Team joint actions are
/// enumerated over partition.team() with the first member most significant.
inline bool is_coe(const Game& g, const TeamPartition& part, const CoECandidate& c) {
  const auto& team = part.team();
  const std::size_t adv = part.adversary();
  const std::size_t n = g.num_players();
  auto team_actions = [&](std::size_t t) {
    std::vector<std::size_t> acts(team.size());
    for (std::size_t k = team.size(); k-- > 0;) {
      acts[k] = t % g.num_actions(team[k]);
      t /= g.num_actions(team[k]);
    }
    return acts;
  };
  auto full = [&](const std::vector<std::size_t>& acts, std::size_t b) {
    std::vector<std::size_t> a(n);
    for (std::size_t k = 0; k < team.size(); ++k) a[team[k]] = acts[k];
    a[adv] = b;
    return a;
  };
  const std::size_t nt = c.team_strategy.probs.size();
  const std::size_t nb = g.num_actions(adv);
  // Adversary: no pure action beats the current mixture.
  auto adv_value = [&](std::size_t b) {
    Rational v = 0;
    for (std::size_t t = 0; t < nt; ++t) v += c.team_strategy.probs[t] * at(g, full(team_actions(t), b), adv);
    return v;
  };
  Rational current = 0;
  for (std::size_t b = 0; b < nb; ++b) current += c.adversary_strategy.probs[b] * adv_value(b);
  for (std::size_t b = 0; b < nb; ++b) {
    if (adv_value(b) > current) return false;
  }
  // Team: sum over a_T with a_i recommended of x_T(a_T) * E_b[u_i(a_T,b) - u_i(a_T[a_i->d],b)] >= 0.
  for (std::size_t k = 0; k < team.size(); ++k) {
    const std::size_t i = team[k];
    for (std::size_t rec = 0; rec < g.num_actions(i); ++rec) {
      for (std::size_t dev = 0; dev < g.num_actions(i); ++dev) {
        if (dev == rec) continue;
        Rational lhs = 0;
        for (std::size_t t = 0; t < nt; ++t) {
          auto acts = team_actions(t);
          if (acts[k] != rec || c.team_strategy.probs[t] == 0) continue;
          auto moved = acts;
          moved[k] = dev;
          for (std::size_t b = 0; b < nb; ++b) {
            lhs += c.team_strategy.probs[t] * c.adversary_strategy.probs[b] *
                   (at(g, full(acts, b), i) - at(g, full(moved, b), i));
          }
        }
        if (lhs < 0) return false;
      }
    }
  }
  return true;
}

/// Every pure (team joint action, adversary action) pair that is a CoE,
/// found by checking pure deviations on the tensor. A pure CoE is exactly a
/// pure NE, so this also enumerates pure NE.
inline std::vector<std::vector<std::size_t>> pure_coes(const Game& g) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t idx = 0; idx < g.num_joint_actions(); ++idx) {
    const auto a = g.joint_action(idx);
    bool ok = true;
    for (std::size_t i = 0; i < g.num_players() && ok; ++i) {
      auto b = a;
      for (std::size_t d = 0; d < g.num_actions(i) && ok; ++d) {
        b[i] = d;
        if (at(g, b, i) > at(g, a, i)) ok = false;
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

/// Floating-point cross-check of an algebraic equilibrium: locate the root by
/// bisection in long double, rebuild the profile from the stored
/// parametrization, and return the largest pure-deviation gain (and the
/// smallest support probability) in floating point.
struct NumericCheck {
  long double max_gain = 0;
  long double min_support_prob = 1;
  long double root = 0;
};

inline long double to_ld(const Rational& r) { return static_cast<long double>(r); }

inline long double eval_ld(const Polynomial& p, long double x) {
  long double v = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + to_ld(c[i]);
  return v;
}

inline NumericCheck check_algebraic(const Game& g, const AlgebraicNash& eq) {
  long double lo = to_ld(eq.lo);
  long double hi = to_ld(eq.hi);
  const long double flo = eval_ld(eq.polynomial, lo);
  for (int it = 0; it < 200; ++it) {
    const long double mid = (lo + hi) / 2;
    const long double fm = eval_ld(eq.polynomial, mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  NumericCheck out;
  out.root = (lo + hi) / 2;
  const std::size_t n = g.num_players();
  std::vector<std::vector<long double>> x(n);
  for (std::size_t p = 0; p < n; ++p) {
    x[p].assign(g.num_actions(p), 0);
    if (p == eq.pivot) {
      x[p][eq.supports[p][0]] = out.root;
      x[p][eq.supports[p][1]] = 1 - out.root;
    } else {
      const long double d = eval_ld(eq.denominators[p], out.root);
      for (std::size_t a = 0; a < x[p].size(); ++a) x[p][a] = eval_ld(eq.numerators[p][a], out.root) / d;
    }
    for (std::size_t a : eq.supports[p]) out.min_support_prob = std::min(out.min_support_prob, x[p][a]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long double> value(g.num_actions(i), 0);
    long double current = 0;
    for (std::size_t idx = 0; idx < g.num_joint_actions(); ++idx) {
      const auto a = g.joint_action(idx);
      long double prob = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) prob *= x[j][a[j]];
      }
      const long double u = to_ld(g.payoff(idx, i));
      value[a[i]] += prob * u;
      current += prob * x[i][a[i]] * u;
    }
    for (long double v : value) out.max_gain = std::max(out.max_gain, v - current);
  }
  return out;
}

}  // namespace coop::oracle

#endif  // COOP_TESTS_ORACLES_HPP_

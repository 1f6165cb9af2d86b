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

// Three-player support profiles in which every player mixes.
//
// Such equilibria solve polynomial rather than linear systems and are often
// irrational. When one player (the pivot) mixes over exactly two actions with
// probability q on the first, and the other two players have supports of
// equal size, each of those two players' strategies is a rational function
// of q fixed by the other's indifference conditions. The pivot's own
// indifference then becomes a univariate polynomial P(q). Each root of P in
// (0, 1) is isolated with Sturm sequences and every remaining equilibrium
// condition is decided by its sign on the isolating interval, using only
// rational arithmetic.

#ifndef COOP_ALGEBRAIC_NASH_HPP_
#define COOP_ALGEBRAIC_NASH_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "coop/equilibria.hpp"
#include "coop/game.hpp"
#include "coop/lp.hpp"
#include "coop/polynomial.hpp"
#include "coop/rational.hpp"

namespace coop {

/// A Nash equilibrium with (possibly) irrational probabilities.
///
/// The pivot plays its two support actions with probabilities q and 1 - q,
/// where q is the unique root of `polynomial` in the open interval (lo, hi).
/// Every other player's probability of action a is
/// numerators[p][a](q) / denominators[p](q). On [lo, hi] each support
/// probability is strictly positive and no off-support action does better.
struct AlgebraicNash {
  std::vector<std::vector<std::size_t>> supports;
  std::size_t pivot = 0;
  Polynomial polynomial;
  Rational lo;
  Rational hi;
  std::vector<std::vector<Polynomial>> numerators;
  std::vector<Polynomial> denominators;

  /// The parametrized profile at a rational point; an exact equilibrium only
  /// at the root itself.
  Profile at(const Rational& q) const {
    Profile profile;
    for (std::size_t p = 0; p < numerators.size(); ++p) {
      MixedStrategy s{p, std::vector<Rational>(numerators[p].size(), Rational(0))};
      if (p == pivot) {
        s.probs[supports[p][0]] = q;
        s.probs[supports[p][1]] = 1 - q;
      } else {
        const Rational d = denominators[p](q);
        for (std::size_t a = 0; a < s.probs.size(); ++a) s.probs[a] = numerators[p][a](q) / d;
      }
      profile.push_back(std::move(s));
    }
    return profile;
  }
};

struct ThreeMixerOutcome {
  /// False when the support shape is outside the method's reach.
  bool handled = false;
  std::vector<Profile> rational;
  std::vector<AlgebraicNash> algebraic;
};

namespace detail {

inline constexpr int kMaxRefinements = 4000;

// Smallest integer multiplier making every coefficient integral, then the
// leading coefficient.
inline Integer integral_leading(const Polynomial& p) {
  Integer l = 1;
  for (const Rational& c : p.coeffs()) l = boost::multiprecision::lcm(l, denominator_of(c));
  Integer lead = numerator_of(p.leading() * Rational(l));
  return lead < 0 ? Integer(-lead) : lead;
}

inline Integer floor_of(const Rational& r) {
  Integer n = numerator_of(r);
  Integer d = denominator_of(r);
  Integer q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

class RootInterval {
 public:
  RootInterval(const Polynomial& p, Rational lo, Rational hi)
      : p_(p), sturm_(sturm_sequence(p)), lo_(std::move(lo)), hi_(std::move(hi)) {}

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  const std::optional<Rational>& exact() const { return exact_; }

  // Halves the interval, keeping the root. Detects rational midpoints.
  void narrow() {
    if (exact_) return;
    const Rational mid = (lo_ + hi_) / 2;
    if (p_(mid) == 0) {
      exact_ = mid;
      return;
    }
    if (count_roots(sturm_, lo_, mid) >= 1) {
      hi_ = mid;
    } else {
      lo_ = mid;
    }
  }

  // Decides whether the root is rational. Any rational root m/n of an
  // integer polynomial has n dividing the leading coefficient, so once the
  // interval is narrower than 1/lead at most one candidate remains.
  void resolve_rationality() {
    const Integer lead = integral_leading(p_);
    const Rational width_limit = Rational(Integer(1), lead);
    int guard = 0;
    while (!exact_ && hi_ - lo_ >= width_limit && guard++ < kMaxRefinements) narrow();
    if (exact_ || hi_ - lo_ >= width_limit) return;
    const Integer m = floor_of(hi_ * Rational(lead));
    const Rational candidate(m, lead);
    if (candidate > lo_ && candidate < hi_ && p_(candidate) == 0) exact_ = candidate;
  }

  // Sign of g at the root, or nullopt when refinement gave up.
  std::optional<int> sign_at_root(const Polynomial& g) {
    if (exact_) return sign(g(*exact_));
    if (g.is_zero()) return 0;
    const Polynomial common = gcd(p_, g);
    if (common.degree() >= 1 && count_roots(sturm_sequence(common), lo_, hi_) >= 1) return 0;
    if (g.degree() == 0) return sign(g.leading());
    const auto sg = sturm_sequence(g);
    for (int i = 0; i < kMaxRefinements; ++i) {
      if (exact_) return sign(g(*exact_));
      if (g(lo_) != 0 && count_roots(sg, lo_, hi_) == 0) return sign(g(lo_));
      narrow();
    }
    return std::nullopt;
  }

 private:
  Polynomial p_;
  std::vector<Polynomial> sturm_;
  Rational lo_;
  Rational hi_;
  std::optional<Rational> exact_;
};

}  // namespace detail

namespace detail {

// Strategies of two mixing players as rational functions of the pivot's q:
// probs[p][a] = num[p][a] / den[p]. `root` is the polynomial whose roots
// in (0, 1) are the candidate values of q.
struct Parametrization {
  Polynomial root;
  std::array<std::vector<Polynomial>, 3> num;
  std::array<Polynomial, 3> den;
};

// Cramer's rule for a square polynomial system m z = e: numerators of the
// first `count` unknowns, and the determinant.
inline std::pair<std::vector<Polynomial>, Polynomial> cramer(
    const std::vector<std::vector<Polynomial>>& m, const std::vector<Rational>& rhs, std::size_t count) {
  std::vector<Polynomial> num(count);
  for (std::size_t c = 0; c < count; ++c) {
    auto replaced = m;
    for (std::size_t r = 0; r < m.size(); ++r) replaced[r][c] = Polynomial(rhs[r]);
    num[c] = determinant(replaced);
  }
  return {std::move(num), determinant(m)};
}

}  // namespace detail

namespace detail {

// One three-mixer support profile with pivot k (support of size two): the
// pivot plays q on its first support action and the other two strategies are
// rational functions of q.
inline ThreeMixerOutcome solve_with_pivot(const Game& game,
                                          const std::vector<std::vector<std::size_t>>& supports,
                                          std::size_t k) {
  ThreeMixerOutcome out;
  const std::size_t p1 = k == 0 ? 1 : 0;
  const std::size_t p2 = 3 - k - p1;
  // big/small: |S_big| = |S_small| or |S_small| + 1.
  std::size_t big = p1;
  std::size_t small = p2;
  if (supports[p2].size() > supports[p1].size()) std::swap(big, small);
  if (supports[big].size() > supports[small].size() + 1) return out;

  const std::size_t c1 = supports[k][0];
  const std::size_t c2 = supports[k][1];
  auto other_of = [&](std::size_t p) { return p == big ? small : big; };
  // Payoff to `player` when `p` plays a_p, the other non-pivot plays a_o and
  // the pivot plays a_k.
  auto u = [&](std::size_t player, std::size_t p, std::size_t a_p, std::size_t a_o,
               std::size_t a_k) -> const Rational& {
    std::array<std::size_t, 3> a{};
    a[p] = a_p;
    a[other_of(p)] = a_o;
    a[k] = a_k;
    return game.payoff(std::span<const std::size_t>(a), player);
  };
  // Payoff to `player` at (p: a_p, other: a_o) when the pivot mixes q on c1.
  auto mixed = [&](std::size_t player, std::size_t p, std::size_t a_p, std::size_t a_o) {
    const Rational& v1 = u(player, p, a_p, a_o, c1);
    const Rational& v2 = u(player, p, a_p, a_o, c2);
    return Polynomial::linear(v2, v1 - v2);
  };
  auto contains = [](const std::vector<std::size_t>& v, std::size_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  // Pivot's payoff gain of c1 over `alt`, scaled by den[big] * den[small].
  auto pivot_gap = [&](const Parametrization& par, std::size_t alt) {
    Polynomial g;
    for (std::size_t a : supports[big]) {
      for (std::size_t b : supports[small]) {
        const Rational d = u(k, big, a, b, c1) - u(k, big, a, b, alt);
        if (d != 0) g += par.num[big][a] * par.num[small][b] * Polynomial(d);
      }
    }
    return g;
  };
  // Indifference rows of `owner` over its support in the unknowns (x_other
  // on its support, v_owner), followed by the sum row.
  auto indifference_rows = [&](std::size_t owner) {
    const std::size_t other = other_of(owner);
    std::vector<std::vector<Polynomial>> rows;
    for (std::size_t a : supports[owner]) {
      std::vector<Polynomial> row;
      for (std::size_t b : supports[other]) row.push_back(mixed(owner, owner, a, b));
      row.push_back(Polynomial(Rational(-1)));
      rows.push_back(std::move(row));
    }
    std::vector<Polynomial> sum_row(supports[other].size(), Polynomial(Rational(1)));
    sum_row.push_back(Polynomial());
    rows.push_back(std::move(sum_row));
    return rows;
  };
  auto scatter = [&](const std::vector<Polynomial>& on_support, std::size_t player) {
    const auto& support = supports[player];
    std::vector<Polynomial> full(game.num_actions(player));
    for (std::size_t c = 0; c < support.size(); ++c) full[support[c]] = on_support[c];
    return full;
  };
  // det [rows | e_sum]: zero exactly where the overdetermined system with the
  // sum row at `sum_index` is consistent (given a full-rank subsystem).
  auto consistency = [](std::vector<std::vector<Polynomial>> rows, std::size_t sum_index) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      rows[r].push_back(Polynomial(Rational(r == sum_index ? 1 : 0)));
    }
    return determinant(rows);
  };
  // Solves a (possibly one-row-too-many) system with the sum row at
  // `sum_index`, dropping each other row in turn when overdetermined.
  auto solutions = [](const std::vector<std::vector<Polynomial>>& rows, std::size_t sum_index,
                      std::size_t unknowns) {
    std::vector<std::pair<std::vector<Polynomial>, Polynomial>> sols;
    const std::size_t cols = rows.front().size();
    if (rows.size() == cols) {
      std::vector<Rational> e(rows.size(), Rational(0));
      e[sum_index] = 1;
      auto sol = cramer(rows, e, unknowns);
      if (!sol.second.is_zero()) sols.push_back(std::move(sol));
      return sols;
    }
    for (std::size_t drop = rows.size(); drop-- > 0;) {
      if (drop == sum_index) continue;
      std::vector<std::vector<Polynomial>> square;
      std::vector<Rational> e;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == drop) continue;
        square.push_back(rows[r]);
        e.push_back(Rational(r == sum_index ? 1 : 0));
      }
      auto sol = cramer(square, e, unknowns);
      if (!sol.second.is_zero()) sols.push_back(std::move(sol));
    }
    return sols;
  };

  // x_first from second's indifference, then x_second from first's
  // indifference plus the pivot's indifference row. Exactly one of the two
  // systems has a spare row; its consistency determinant is the root
  // polynomial.
  auto solve_pair = [&](std::size_t first, std::size_t second) {
    std::vector<Parametrization> opts;
    const std::size_t nf = supports[first].size();
    const std::size_t ns = supports[second].size();
    if (ns != nf && ns != nf + 1) return opts;
    const auto rows1 = indifference_rows(second);  // (ns + 1) x (nf + 1)
    const std::optional<Polynomial> root1 =
        ns == nf + 1 ? std::optional<Polynomial>(consistency(rows1, ns)) : std::nullopt;
    for (auto& [n1, d1] : solutions(rows1, ns, nf)) {
      Parametrization par;
      par.num[first] = scatter(n1, first);
      par.den[first] = d1;
      auto rows2 = indifference_rows(first);  // (nf + 1) x (ns + 1)
      std::vector<Polynomial> pivot_row;
      for (std::size_t a : supports[second]) {
        Polynomial coeff;
        for (std::size_t b : supports[first]) {
          const Rational d = u(k, second, a, b, c1) - u(k, second, a, b, c2);
          if (d != 0) coeff += par.num[first][b] * Polynomial(d);
        }
        pivot_row.push_back(std::move(coeff));
      }
      pivot_row.push_back(Polynomial());
      rows2.push_back(std::move(pivot_row));
      const Polynomial root = root1 ? *root1 : consistency(rows2, nf);
      for (auto& [n2, d2] : solutions(rows2, nf, ns)) {
        Parametrization full = par;
        full.num[second] = scatter(n2, second);
        full.den[second] = d2;
        full.root = root;
        opts.push_back(std::move(full));
      }
    }
    return opts;
  };

  std::vector<Parametrization> options;
  if (supports[big].size() == supports[small].size()) {
    // Each player's indifference fixes the other's strategy; the pivot's
    // indifference is the root condition.
    Parametrization par;
    const std::size_t s = supports[big].size();
    std::vector<Rational> e(s + 1, Rational(0));
    e[s] = 1;
    auto [ns, ds] = cramer(indifference_rows(big), e, s);
    auto [nb, db] = cramer(indifference_rows(small), e, s);
    if (!ds.is_zero() && !db.is_zero()) {
      par.num[small] = scatter(ns, small);
      par.den[small] = ds;
      par.num[big] = scatter(nb, big);
      par.den[big] = db;
      par.root = pivot_gap(par, c2);
      options.push_back(std::move(par));
    } else {
      // A singular indifference system: replace it by the pivot's row.
      options = solve_pair(small, big);
      if (options.empty()) options = solve_pair(big, small);
    }
  } else {
    options = solve_pair(small, big);
  }
  if (options.empty()) return out;
  out.handled = true;

  auto build = [&](const Parametrization& par) {
    AlgebraicNash eq;
    eq.supports = supports;
    eq.pivot = k;
    eq.polynomial = par.root;
    eq.numerators.assign(3, {});
    eq.denominators.assign(3, Polynomial(Rational(1)));
    for (std::size_t p : {big, small}) {
      eq.numerators[p] = par.num[p];
      eq.denominators[p] = par.den[p];
    }
    eq.numerators[k].assign(game.num_actions(k), Polynomial());
    return eq;
  };
  auto exact_candidate = [&](const Parametrization& par, const Rational& q) -> std::optional<Profile> {
    if (par.den[big](q) == 0 || par.den[small](q) == 0) return std::nullopt;
    Profile candidate = build(par).at(q);
    for (std::size_t p = 0; p < 3; ++p) {
      for (std::size_t a : supports[p]) {
        if (candidate[p].probs[a] <= 0) return std::nullopt;
      }
      for (const Rational& x : candidate[p].probs) {
        if (x < 0) return std::nullopt;
      }
    }
    if (!verify_ne(game, candidate).holds()) return std::nullopt;
    return candidate;
  };

  // The slice at a rational q where every parametrization degenerates. With
  // the pivot fixed, `target`'s strategy is cut out linearly by its opponent's
  // indifference and, once `fixed` is known, by the pivot's own conditions.
  auto slice_lp = [&](std::size_t target, const std::vector<Rational>* fixed, const Rational& q) {
    const std::size_t owner = other_of(target);
    const auto& st = supports[target];
    const std::size_t m = st.size();
    LinearProgram lp(m + 1, Sense::kMaximize);
    lp.bounds.assign(m + 1, VariableBounds{});
    lp.bounds[m] = VariableBounds::free();
    for (std::size_t a = 0; a < game.num_actions(owner); ++a) {
      std::vector<Rational> row(m + 1);
      for (std::size_t c = 0; c < m; ++c) row[c] = mixed(owner, owner, a, st[c])(q);
      row[m] = -1;
      lp.add(std::move(row), contains(supports[owner], a) ? Relation::kEqual : Relation::kLessEqual, 0);
    }
    std::vector<Rational> sum(m + 1, Rational(1));
    sum[m] = 0;
    lp.add(std::move(sum), Relation::kEqual, 1);
    if (fixed != nullptr) {
      for (std::size_t alt = 0; alt < game.num_actions(k); ++alt) {
        if (alt == c1) continue;
        std::vector<Rational> row(m + 1, Rational(0));
        for (std::size_t c = 0; c < m; ++c) {
          for (std::size_t o : supports[owner]) {
            row[c] += (*fixed)[o] * (u(k, target, st[c], o, c1) - u(k, target, st[c], o, alt));
          }
        }
        const Relation rel = alt == c2 ? Relation::kEqual : Relation::kGreaterEqual;
        lp.add(std::move(row), rel, 0);
      }
    }
    return lp;
  };
  auto spread = [&](const std::vector<Rational>& primal, std::size_t player) {
    std::vector<Rational> x(game.num_actions(player), Rational(0));
    for (std::size_t c = 0; c < supports[player].size(); ++c) x[supports[player][c]] = primal[c];
    return x;
  };
  // nullopt: undecided. Otherwise the equilibrium found in the slice, if any.
  auto solve_slice = [&](const Rational& q) -> std::optional<std::optional<Profile>> {
    auto finish = [&](std::size_t first, const std::vector<Rational>& x_first)
        -> std::optional<Profile> {
      const std::size_t second = other_of(first);
      LpSolution sol = solve_lp(slice_lp(second, &x_first, q));
      if (sol.status != LpStatus::kOptimal) return std::nullopt;
      Profile candidate(3);
      candidate[first] = MixedStrategy{first, x_first};
      candidate[second] = MixedStrategy{second, spread(sol.primal, second)};
      std::vector<Rational> xk(game.num_actions(k), Rational(0));
      xk[c1] = q;
      xk[c2] = 1 - q;
      candidate[k] = MixedStrategy{k, std::move(xk)};
      if (!verify_ne(game, candidate).holds()) return std::nullopt;
      return candidate;
    };
    std::optional<std::vector<Rational>> vertex[2];
    std::size_t idx = 0;
    for (std::size_t first : {small, big}) {
      LinearProgram lp = slice_lp(first, nullptr, q);
      LpSolution sol = solve_lp(lp);
      if (sol.status != LpStatus::kOptimal) return std::optional<Profile>();
      const std::vector<Rational> x = spread(sol.primal, first);
      vertex[idx++] = x;
      // The slice pins x_first when every coordinate has equal min and max.
      bool pinned = true;
      for (std::size_t c = 0; c < supports[first].size() && pinned; ++c) {
        for (Sense sense : {Sense::kMaximize, Sense::kMinimize}) {
          lp.sense = sense;
          lp.objective.assign(lp.num_variables(), Rational(0));
          lp.objective[c] = 1;
          if (solve_lp(lp).objective_value != sol.primal[c]) pinned = false;
        }
      }
      if (pinned) return finish(first, x);
    }
    // A continuum on both sides: a verified vertex still settles the slice.
    if (auto c = finish(small, *vertex[0])) return c;
    if (auto c = finish(big, *vertex[1])) return c;
    return std::nullopt;
  };

  // Sign conditions: positive, or nonnegative when not strict. Together with
  // the root condition they make the profile an equilibrium.
  auto conditions_for = [&](const Parametrization& par) {
    std::vector<std::pair<Polynomial, bool>> conds;
    for (std::size_t p : {big, small}) {
      for (std::size_t a : supports[p]) conds.emplace_back(par.num[p][a] * par.den[p], true);
    }
    for (std::size_t p : {big, small}) {
      const std::size_t o = other_of(p);
      for (std::size_t alt = 0; alt < game.num_actions(p); ++alt) {
        if (contains(supports[p], alt)) continue;
        Polynomial g;
        for (std::size_t b : supports[o]) {
          g += par.num[o][b] * (mixed(p, p, supports[p][0], b) - mixed(p, p, alt, b));
        }
        conds.emplace_back(g * par.den[o], false);
      }
    }
    for (std::size_t alt = 0; alt < game.num_actions(k); ++alt) {
      if (alt == c1 || alt == c2) continue;
      conds.emplace_back(pivot_gap(par, alt) * par.den[big] * par.den[small], false);
    }
    return conds;
  };

  const Polynomial& root_poly = options.front().root;
  if (root_poly.is_zero()) {
    // Every q satisfies the root condition; try a few rational points and
    // give the profile up when none works.
    for (const auto& par : options) {
      for (long t = 1; t < 16; ++t) {
        if (auto c = exact_candidate(par, Rational(t, 16))) {
          out.rational.push_back(std::move(*c));
          return out;
        }
      }
    }
    out.handled = false;
    return out;
  }

  // A root is decided by an option whose denominators are nonzero there:
  // that option's solution is then the only one in the slice. A root where
  // every option degenerates leaves the profile undecided for this pivot.
  bool undecided = false;
  for (auto& [lo, hi] : isolate_roots(root_poly, Rational(0), Rational(1))) {
    RootInterval root(root_poly, lo, hi);
    root.resolve_rationality();
    bool decided = false;
    if (root.exact()) {
      const Rational& q = *root.exact();
      for (const auto& par : options) {
        if (par.den[big](q) == 0 || par.den[small](q) == 0) continue;
        decided = true;
        if (auto c = exact_candidate(par, q)) out.rational.push_back(std::move(*c));
        break;
      }
      if (!decided) {
        if (auto found = solve_slice(q)) {
          decided = true;
          if (*found) out.rational.push_back(std::move(**found));
        }
      }
    } else {
      for (const auto& par : options) {
        const std::optional<int> sb = root.sign_at_root(par.den[big]);
        const std::optional<int> ss = root.sign_at_root(par.den[small]);
        if (!sb || !ss || *sb == 0 || *ss == 0) continue;
        decided = true;
        bool ok = true;
        for (const auto& [g, strict] : conditions_for(par)) {
          const std::optional<int> sg = root.sign_at_root(g);
          if (!sg) decided = false;
          if (!sg || *sg < 0 || (strict && *sg == 0)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          AlgebraicNash eq = build(par);
          eq.lo = root.lo();
          eq.hi = root.hi();
          out.algebraic.push_back(std::move(eq));
        }
        break;
      }
    }
    if (!decided) undecided = true;
  }
  if (undecided) out.handled = false;
  return out;
}

}  // namespace detail

/// Solves one three-player support profile in which all players mix.
/// Candidates are re-checked exactly: rational roots through verify_ne,
/// irrational ones through the sign certificate. `handled` is false when no
/// pivot decides the profile: every parametrization is singular, the root
/// condition holds identically with no sampled equilibrium, or some root
/// makes every parametrization degenerate. Equilibria certified along the
/// way are returned either way.
inline ThreeMixerOutcome solve_three_mixers(const Game& game,
                                            const std::vector<std::vector<std::size_t>>& supports) {
  ThreeMixerOutcome partial;
  if (game.num_players() != 3) return partial;
  for (std::size_t k = 3; k-- > 0;) {
    if (supports[k].size() != 2) continue;
    ThreeMixerOutcome out = detail::solve_with_pivot(game, supports, k);
    if (out.handled) return out;
    if (partial.rational.empty() && partial.algebraic.empty()) partial = std::move(out);
  }
  return partial;
}

/// Narrows the root interval to width at most `max_width` and returns the
/// profile at its midpoint. Close to, but not exactly, an equilibrium.
inline Profile approximate(const AlgebraicNash& eq, const Rational& max_width) {
  detail::RootInterval root(eq.polynomial, eq.lo, eq.hi);
  while (!root.exact() && root.hi() - root.lo() > max_width) root.narrow();
  return eq.at(root.exact() ? *root.exact() : (root.lo() + root.hi()) / 2);
}

}  // namespace coop

#endif  // COOP_ALGEBRAIC_NASH_HPP_

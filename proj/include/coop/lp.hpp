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

#ifndef COOP_LP_HPP_
#define COOP_LP_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coop/error.hpp"
#include "coop/rational.hpp"

namespace coop {

/// Largest LP (variables or constraints) the exact solver accepts.
inline constexpr std::size_t kMaxLpDimension = 10'000;

enum class Sense { kMaximize, kMinimize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "?";
}

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

/// Missing bound means unbounded in that direction.
struct VariableBounds {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;

  static VariableBounds free() { return {std::nullopt, std::nullopt}; }
};

/// A linear program over rationals. Bounds default to [0, +inf) when the
/// bounds vector is left empty.
struct LinearProgram {
  Sense sense = Sense::kMaximize;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<VariableBounds> bounds;

  explicit LinearProgram(std::size_t num_variables = 0, Sense s = Sense::kMaximize)
      : sense(s), objective(num_variables, Rational(0)) {}

  std::size_t num_variables() const { return objective.size(); }

  void add(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }

  VariableBounds bound(std::size_t j) const { return bounds.empty() ? VariableBounds{} : bounds[j]; }

  void validate() const {
    const std::size_t n = num_variables();
    if (n == 0) throw InputError("lp: no variables");
    if (n > kMaxLpDimension || constraints.size() > kMaxLpDimension) {
      throw ScaleError("lp: more than " + std::to_string(kMaxLpDimension) +
                       " variables or constraints");
    }
    if (!bounds.empty() && bounds.size() != n) {
      throw InputError("lp: bounds vector has " + std::to_string(bounds.size()) + " entries, expected " +
                       std::to_string(n));
    }
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      if (constraints[i].coeffs.size() != n) {
        throw InputError("lp: constraint " + std::to_string(i) + " has width " +
                         std::to_string(constraints[i].coeffs.size()) + ", expected " +
                         std::to_string(n));
      }
    }
  }
};

/// When optimal, `dual` holds one multiplier per constraint with the sign
/// convention objective_value = sum_i rhs_i * dual_i for programs whose
/// variables all carry the default [0, +inf) bounds.
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> primal;
  Rational objective_value;
  std::vector<Rational> dual;
  std::size_t pivots = 0;
};

namespace detail {

// Dense two-phase tableau simplex with Bland's least-index rule.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
          std::vector<std::size_t> basis, std::size_t num_cols)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)),
        num_cols_(num_cols), banned_(num_cols, false) {}

  void ban(std::size_t col) { banned_[col] = true; }

  // Installs objective max c.x and prices out the current basis.
  void set_objective(const std::vector<Rational>& cost) {
    cost_ = cost;
    reduced_.assign(num_cols_, Rational(0));
    for (std::size_t j = 0; j < num_cols_; ++j) reduced_[j] = -cost_[j];
    value_ = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (rows_[i][j] != 0) reduced_[j] += cb * rows_[i][j];
      }
      value_ += cb * rhs_[i];
    }
  }

  // Runs to optimality. Returns false when the objective is unbounded.
  bool optimize() {
    for (;;) {
      std::size_t enter = num_cols_;
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (!banned_[j] && reduced_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == num_cols_) return true;
      std::size_t leave = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t s) {
    ++pivots_;
    const Rational piv = rows_[r][s];
    for (std::size_t j = 0; j < num_cols_; ++j) {
      if (rows_[r][j] != 0) rows_[r][j] /= piv;
    }
    rhs_[r] /= piv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][s] == 0) continue;
      const Rational f = rows_[i][s];
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    if (reduced_[s] != 0) {
      const Rational f = reduced_[s];
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (rows_[r][j] != 0) reduced_[j] -= f * rows_[r][j];
      }
      value_ -= f * rhs_[r];
    }
    basis_[r] = s;
  }

  std::size_t num_rows() const { return rows_.size(); }
  const Rational& entry(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const Rational& rhs(std::size_t i) const { return rhs_[i]; }
  std::size_t basic(std::size_t i) const { return basis_[i]; }
  const Rational& reduced(std::size_t j) const { return reduced_[j]; }
  const Rational& value() const { return value_; }
  std::size_t pivots() const { return pivots_; }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::size_t num_cols_;
  std::vector<bool> banned_;
  std::vector<Rational> cost_;
  std::vector<Rational> reduced_;
  Rational value_;
  std::size_t pivots_ = 0;
};

}  // namespace detail

/// Solves `lp` exactly. Pivoting follows Bland's rule, so the result is a
/// deterministic function of the input.
inline LpSolution solve_lp(const LinearProgram& lp) {
  lp.validate();
  const std::size_t n = lp.num_variables();

  // Express each original variable through nonnegative structural columns:
  // x_j = offset_j + sum(sign * column).
  struct Substitution {
    Rational offset;
    std::vector<std::pair<std::size_t, int>> terms;
  };
  std::vector<Substitution> subst(n);
  std::size_t num_struct = 0;
  struct Row {
    std::vector<Rational> coeffs;  // over structural columns, filled later
    Relation relation;
    Rational rhs;
    bool original;
  };
  std::vector<std::pair<std::size_t, Rational>> upper_rows;  // (column, bound)
  for (std::size_t j = 0; j < n; ++j) {
    VariableBounds b = lp.bound(j);
    if (b.lower && b.upper && *b.upper < *b.lower) {
      LpSolution out;
      out.status = LpStatus::kInfeasible;
      return out;
    }
    if (b.lower) {
      subst[j].offset = *b.lower;
      subst[j].terms.push_back({num_struct, 1});
      if (b.upper) upper_rows.push_back({num_struct, *b.upper - *b.lower});
      ++num_struct;
    } else if (b.upper) {
      subst[j].offset = *b.upper;
      subst[j].terms.push_back({num_struct++, -1});
    } else {
      subst[j].terms.push_back({num_struct++, 1});
      subst[j].terms.push_back({num_struct++, -1});
    }
  }

  std::vector<Row> rows;
  rows.reserve(lp.constraints.size() + upper_rows.size());
  for (const Constraint& c : lp.constraints) {
    Row row{std::vector<Rational>(num_struct, Rational(0)), c.relation, c.rhs, true};
    for (std::size_t j = 0; j < n; ++j) {
      if (c.coeffs[j] == 0) continue;
      row.rhs -= c.coeffs[j] * subst[j].offset;
      for (auto [col, sign] : subst[j].terms) row.coeffs[col] += sign * c.coeffs[j];
    }
    rows.push_back(std::move(row));
  }
  for (auto& [col, ub] : upper_rows) {
    Row row{std::vector<Rational>(num_struct, Rational(0)), Relation::kLessEqual, ub, false};
    row.coeffs[col] = 1;
    rows.push_back(std::move(row));
  }

  // Normalize to nonnegative right-hand sides.
  const std::size_t m = rows.size();
  std::vector<int> flip(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].rhs < 0) {
      flip[i] = -1;
      rows[i].rhs = -rows[i].rhs;
      for (Rational& v : rows[i].coeffs) v = -v;
      if (rows[i].relation == Relation::kLessEqual) {
        rows[i].relation = Relation::kGreaterEqual;
      } else if (rows[i].relation == Relation::kGreaterEqual) {
        rows[i].relation = Relation::kLessEqual;
      }
    }
  }

  // Column layout: structural | slack/surplus | artificial.
  std::size_t num_slack = 0;
  std::size_t num_art = 0;
  for (const Row& r : rows) {
    if (r.relation != Relation::kEqual) ++num_slack;
    if (r.relation != Relation::kLessEqual) ++num_art;
  }
  const std::size_t first_slack = num_struct;
  const std::size_t first_art = num_struct + num_slack;
  const std::size_t num_cols = first_art + num_art;

  std::vector<std::vector<Rational>> table(m, std::vector<Rational>(num_cols, Rational(0)));
  std::vector<Rational> rhs(m);
  std::vector<std::size_t> basis(m);
  std::vector<std::size_t> identity_col(m);
  std::size_t next_slack = first_slack;
  std::size_t next_art = first_art;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < num_struct; ++j) table[i][j] = rows[i].coeffs[j];
    rhs[i] = rows[i].rhs;
    switch (rows[i].relation) {
      case Relation::kLessEqual:
        table[i][next_slack] = 1;
        basis[i] = identity_col[i] = next_slack++;
        break;
      case Relation::kGreaterEqual:
        table[i][next_slack++] = -1;
        table[i][next_art] = 1;
        basis[i] = identity_col[i] = next_art++;
        break;
      case Relation::kEqual:
        table[i][next_art] = 1;
        basis[i] = identity_col[i] = next_art++;
        break;
    }
  }

  detail::Tableau tab(std::move(table), std::move(rhs), std::move(basis), num_cols);
  LpSolution out;

  if (num_art > 0) {
    std::vector<Rational> phase1(num_cols, Rational(0));
    for (std::size_t j = first_art; j < num_cols; ++j) phase1[j] = -1;
    tab.set_objective(phase1);
    tab.optimize();  // bounded above by zero
    if (tab.value() < 0) {
      out.status = LpStatus::kInfeasible;
      out.pivots = tab.pivots();
      return out;
    }
    // Drive zero-valued artificials out of the basis where possible; rows
    // where that fails are redundant and stay inert.
    for (std::size_t i = 0; i < tab.num_rows(); ++i) {
      if (tab.basic(i) < first_art) continue;
      for (std::size_t j = 0; j < first_art; ++j) {
        if (tab.entry(i, j) != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
    for (std::size_t j = first_art; j < num_cols; ++j) tab.ban(j);
  }

  std::vector<Rational> cost(num_cols, Rational(0));
  const Rational direction = lp.sense == Sense::kMaximize ? 1 : -1;
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.objective[j] == 0) continue;
    for (auto [col, sign] : subst[j].terms) cost[col] += direction * sign * lp.objective[j];
  }
  tab.set_objective(cost);
  if (!tab.optimize()) {
    out.status = LpStatus::kUnbounded;
    out.pivots = tab.pivots();
    return out;
  }

  std::vector<Rational> column_value(num_cols, Rational(0));
  for (std::size_t i = 0; i < tab.num_rows(); ++i) column_value[tab.basic(i)] = tab.rhs(i);
  out.status = LpStatus::kOptimal;
  out.primal.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational x = subst[j].offset;
    for (auto [col, sign] : subst[j].terms) x += sign * column_value[col];
    out.primal[j] = std::move(x);
  }
  out.objective_value = dot(lp.objective, out.primal);
  out.dual.resize(lp.constraints.size());
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    out.dual[i] = direction * flip[i] * tab.reduced(identity_col[i]);
  }
  out.pivots = tab.pivots();
  return out;
}

/// Optimal strategies and value of a two-player zero-sum matrix game in which
/// the row player maximizes.
struct MaxminSolution {
  Rational value;
  std::vector<Rational> row_strategy;
  std::vector<Rational> col_strategy;
};

/// Solves max_x min_y x'My. The row strategy comes from the primal LP
///   max v  s.t.  v <= sum_r x_r M[r][c] for every column c,  sum x = 1,
/// and the column strategy from its dual multipliers.
inline MaxminSolution solve_maxmin(const std::vector<std::vector<Rational>>& matrix) {
  if (matrix.empty() || matrix.front().empty()) throw InputError("maxmin: empty matrix");
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();
  for (const auto& row : matrix) {
    if (row.size() != cols) throw InputError("maxmin: ragged matrix");
  }
  LinearProgram lp(rows + 1, Sense::kMaximize);
  lp.objective[rows] = 1;
  lp.bounds.assign(rows + 1, VariableBounds{});
  lp.bounds[rows] = VariableBounds::free();
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<Rational> coeffs(rows + 1);
    for (std::size_t r = 0; r < rows; ++r) coeffs[r] = -matrix[r][c];
    coeffs[rows] = 1;
    lp.add(std::move(coeffs), Relation::kLessEqual, 0);
  }
  std::vector<Rational> simplex(rows + 1, Rational(1));
  simplex[rows] = 0;
  lp.add(std::move(simplex), Relation::kEqual, 1);

  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw std::logic_error("maxmin: matrix game LP was not optimal");
  }
  MaxminSolution out;
  out.value = sol.primal[rows];
  out.row_strategy.assign(sol.primal.begin(), sol.primal.begin() + static_cast<long>(rows));
  out.col_strategy.assign(sol.dual.begin(), sol.dual.begin() + static_cast<long>(cols));

  // Saddle-point certificate.
  Rational worst_col;
  for (std::size_t c = 0; c < cols; ++c) {
    Rational v = 0;
    for (std::size_t r = 0; r < rows; ++r) v += out.row_strategy[r] * matrix[r][c];
    if (c == 0 || v < worst_col) worst_col = v;
  }
  Rational best_row;
  for (std::size_t r = 0; r < rows; ++r) {
    Rational v = 0;
    for (std::size_t c = 0; c < cols; ++c) v += matrix[r][c] * out.col_strategy[c];
    if (r == 0 || v > best_row) best_row = v;
  }
  if (worst_col != out.value || best_row != out.value || sum(out.col_strategy) != 1) {
    throw std::logic_error("maxmin: solution failed the saddle-point certificate");
  }
  return out;
}

}  // namespace coop

#endif  // COOP_LP_HPP_

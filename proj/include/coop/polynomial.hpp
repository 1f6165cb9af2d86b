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

// Univariate rational polynomials with Sturm-sequence root counting.
// Used to certify equilibria whose probabilities are irrational algebraic
// numbers.

#ifndef COOP_POLYNOMIAL_HPP_
#define COOP_POLYNOMIAL_HPP_

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coop/rational.hpp"

namespace coop {

/// Coefficients from the constant term up; no trailing zeros. The zero
/// polynomial is the empty vector.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(const Rational& constant) : c_{constant} { trim(); }  // NOLINT: implicit by design

  static Polynomial linear(const Rational& c0, const Rational& c1) {
    return Polynomial(std::vector<Rational>{c0, c1});
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
  }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Rational> r = a.c_;
    for (Rational& x : r) x = -x;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Quotient and remainder of a / b; b must be nonzero.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    if (rem.size() < b.c_.size()) return {Polynomial(), a};
    std::vector<Rational> quot(rem.size() - b.c_.size() + 1, Rational(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
      const Rational f = rem[k + b.c_.size() - 1] / b.leading();
      quot[k] = f;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
    }
    rem.resize(b.c_.size() - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational lead = a.leading();
  std::vector<Rational> c = a.coeffs();
  for (Rational& x : c) x /= lead;
  return Polynomial(std::move(c));
}

inline int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

/// Sturm sequence of p (p, p', -rem, ...).
inline std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  Polynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    Polynomial r = -divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

inline int sign_variations(const std::vector<Polynomial>& seq, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const Polynomial& p : seq) {
    const int s = sign(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Number of distinct real roots in the half-open interval (lo, hi].
inline int count_roots(const std::vector<Polynomial>& sturm, const Rational& lo, const Rational& hi) {
  if (sturm.empty()) throw std::domain_error("count_roots: zero polynomial");
  return sign_variations(sturm, lo) - sign_variations(sturm, hi);
}

/// Disjoint intervals (a, b) covering every root of p strictly inside
/// (lo, hi), one distinct root each, with p(a) and p(b) nonzero. Sorted.
inline std::vector<std::pair<Rational, Rational>> isolate_roots(const Polynomial& p, Rational lo,
                                                                Rational hi) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  const auto sturm = sturm_sequence(p);
  std::vector<std::pair<Rational, Rational>> stack;
  stack.emplace_back(std::move(lo), std::move(hi));
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    // Roots strictly inside (a, b).
    const int n = count_roots(sturm, a, b) - (p(b) == 0 ? 1 : 0);
    if (n == 0) continue;
    if (n == 1 && p(b) != 0 && p(a) != 0) {
      out.emplace_back(a, b);
      continue;
    }
    const Rational mid = (a + b) / 2;
    if (p(mid) == 0) {
      // A rational root: isolate it in a tiny interval around mid.
      Rational eps = (b - a) / 4;
      while (count_roots(sturm, mid - eps, mid + eps) > 1 || p(mid - eps) == 0 || p(mid + eps) == 0) {
        eps /= 2;
      }
      out.emplace_back(mid - eps, mid + eps);
      stack.emplace_back(mid + eps, b);
      stack.emplace_back(a, mid - eps);
      continue;
    }
    stack.emplace_back(mid, b);
    stack.emplace_back(a, mid);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Determinant of a small square matrix of polynomials by cofactor expansion.
inline Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(Rational(1));
  if (n == 1) return m[0][0];
  if (n > 8) throw std::domain_error("determinant: matrix larger than 8x8");
  Polynomial det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * determinant(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace coop

#endif  // COOP_POLYNOMIAL_HPP_

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

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace coop {
namespace {

using testing::R;

Polynomial P(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

// (x - r1)(x - r2)...
Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p(Rational(1));
  for (const Rational& r : roots) p *= Polynomial::linear(-r, 1);
  return p;
}

TEST(Polynomial, TrimsAndReportsDegree) {
  EXPECT_TRUE(P({0, 0}).is_zero());
  EXPECT_EQ(P({0, 0}).degree(), -1);
  EXPECT_EQ(P({1, 2, 0}).degree(), 1);
  EXPECT_EQ(Polynomial(R(5)).degree(), 0);
}

TEST(Polynomial, Arithmetic) {
  const Polynomial a = P({1, 1});   // 1 + x
  const Polynomial b = P({-1, 1});  // -1 + x
  EXPECT_EQ(a * b, P({-1, 0, 1}));
  EXPECT_EQ(a + b, P({0, 2}));
  EXPECT_EQ(a - a, Polynomial());
  EXPECT_EQ((a * b)(R(3)), 8);
  EXPECT_EQ(P({5, 3, 2}).derivative(), P({3, 4}));
}

TEST(Polynomial, DivisionWithRemainder) {
  const Polynomial a = P({1, 2, 3, 4});
  const Polynomial b = P({1, 1});
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_THROW(divmod(a, Polynomial()), std::domain_error);
}

TEST(Polynomial, GcdIsMonic) {
  const Polynomial g = gcd(from_roots({R(1, 2), 3}) * Polynomial(R(4)), from_roots({R(1, 2), -1}));
  EXPECT_EQ(g, from_roots({R(1, 2)}));
  EXPECT_EQ(gcd(from_roots({1}), from_roots({2})), Polynomial(R(1)));
}

TEST(Sturm, CountsDistinctRootsInHalfOpenInterval) {
  const Polynomial p = from_roots({R(1, 3), R(1, 2), R(1, 2), 2});
  const auto s = sturm_sequence(p);
  EXPECT_EQ(count_roots(s, R(0), R(1)), 2);
  EXPECT_EQ(count_roots(s, R(1, 3), R(1)), 1);  // (1/3, 1] excludes 1/3
  EXPECT_EQ(count_roots(s, R(0), R(1, 3)), 1);  // includes 1/3
  EXPECT_EQ(count_roots(s, R(-10), R(10)), 3);
  EXPECT_THROW(count_roots({}, R(0), R(1)), std::domain_error);
}

TEST(Sturm, IrrationalRoots) {
  // x^2 - 2 has roots +-sqrt(2).
  const Polynomial p = P({-2, 0, 1});
  const auto iv = isolate_roots(p, R(0), R(2));
  ASSERT_EQ(iv.size(), 1u);
  EXPECT_LT(iv[0].first * iv[0].first, 2);
  EXPECT_GT(iv[0].second * iv[0].second, 2);
}

TEST(Sturm, IsolatesEveryRootIncludingRationalMidpoints) {
  // Root 1/2 is exactly the first bisection midpoint of (0, 1).
  const Polynomial p = from_roots({R(1, 2), R(1, 4), R(3, 4), R(9, 10)}) * P({-2, 0, 1});
  const auto iv = isolate_roots(p, R(0), R(1));
  ASSERT_EQ(iv.size(), 4u);
  const std::vector<Rational> roots = {R(1, 4), R(1, 2), R(3, 4), R(9, 10)};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_LT(iv[i].first, roots[i]);
    EXPECT_GT(iv[i].second, roots[i]);
    EXPECT_NE(p(iv[i].first), 0);
    EXPECT_NE(p(iv[i].second), 0);
    if (i > 0) {
      EXPECT_LE(iv[i - 1].second, iv[i].first);
    }
  }
}

TEST(SturmProperties, RandomProductsOfLinearFactors) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> roots;
    const std::size_t k = 1 + rng() % 4;
    for (std::size_t i = 0; i < k; ++i) roots.push_back(R(static_cast<long>(rng() % 19) - 9, 1 + rng() % 5));
    const Polynomial p = from_roots(roots);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    std::size_t inside = 0;
    for (const Rational& r : roots) inside += (r > -5 && r < 5) ? 1 : 0;
    const auto iv = isolate_roots(p, R(-5), R(5));
    EXPECT_EQ(iv.size(), inside);
    EXPECT_EQ(static_cast<std::size_t>(count_roots(sturm_sequence(p), R(-100), R(100))), roots.size());
  }
}

TEST(Determinant, PolynomialMatrices) {
  // [[x, 1], [1, x]] -> x^2 - 1
  const Polynomial x = Polynomial::linear(0, 1);
  EXPECT_EQ(determinant({{x, Polynomial(R(1))}, {Polynomial(R(1)), x}}), P({-1, 0, 1}));
  EXPECT_EQ(determinant({}), Polynomial(R(1)));
  // Constant 3x3 with determinant -3.
  std::vector<std::vector<Polynomial>> m = {
      {R(1), R(2), R(3)}, {R(4), R(5), R(6)}, {R(7), R(8), R(10)}};
  EXPECT_EQ(determinant(m), Polynomial(R(-3)));
  std::vector<std::vector<Polynomial>> big(9, std::vector<Polynomial>(9, Polynomial(R(1))));
  EXPECT_THROW(determinant(big), std::domain_error);
}

}  // namespace
}  // namespace coop

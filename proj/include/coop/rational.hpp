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

#ifndef COOP_RATIONAL_HPP_
#define COOP_RATIONAL_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coop {

/// Exact arbitrary-precision rational. The GMP backend keeps every value in
/// lowest terms with a positive denominator, so equality is structural.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

/// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  Integer den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

/// Parses an integer "p", a fraction "p/q", or a finite decimal "p.d".
/// Non-canonical input such as "6/4" or "+3" is accepted and reduced.
/// Returns nullopt on anything else (including a zero denominator).
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
      return std::nullopt;
    }
    Integer d = to_int(den);
    if (d == 0) return std::nullopt;
    return Rational(to_int(num), d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) return std::nullopt;
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    }
    bool negative = !whole.empty() && whole.front() == '-';
    std::string_view digits = whole;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
      digits.remove_prefix(1);
    }
    if (!digits.empty() && !is_int(digits)) return std::nullopt;
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer magnitude = (digits.empty() ? Integer(0) : to_int(digits)) * scale +
                        to_int(frac);
    Rational value(magnitude, scale);
    return negative ? Rational(-value) : value;
  }
  if (!is_int(text)) return std::nullopt;
  return Rational(to_int(text));
}

inline Rational sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const Rational& v : values) total += v;
  return total;
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) total += a[i] * b[i];
  return total;
}

/// Decimal rendering truncated toward zero after `digits` fractional digits.
/// For display only; exact values are always printed with to_string.
inline std::string to_decimal(const Rational& r, unsigned digits) {
  Integer num = numerator_of(r);
  const Integer den = denominator_of(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  Integer scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const Integer scaled = num * scale / den;
  std::string frac = (scaled % scale).str();
  std::string out = (negative && scaled != 0 ? "-" : "") + (scaled / scale).str();
  if (digits > 0) out += "." + std::string(digits - frac.size(), '0') + frac;
  return out;
}

}  // namespace coop

#endif  // COOP_RATIONAL_HPP_

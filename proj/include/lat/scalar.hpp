/*
 *   Copyright 2026 the lat authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "lat/error.hpp"

namespace lat {

/// Exact arbitrary-precision rational. Always kept in canonical form:
/// gcd(num, den) = 1 and den > 0; equality is exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// p/q with the sign normalized into the numerator.
inline Rational rat(long long p, long long q = 1) {
  if (q == 0) throw Error("rational with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rational(BigInt(p), BigInt(q));
}

inline constexpr double kDefaultTolerance = 1e-9;

namespace detail {

inline bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

/// Decimal string to integer. Leading zeros are stripped first; cpp_int's
/// string constructor would read them as an octal prefix.
inline BigInt big_from_token(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  BigInt v{std::string(s)};
  return neg ? BigInt(-v) : v;
}

inline Rational parse_rational_token(std::string_view text, std::size_t pos_for_errors) {
  const std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
      throw ParseError("bad rational '" + s + "'", pos_for_errors);
    BigInt p = big_from_token(num), q = big_from_token(den);
    if (q == 0) throw ParseError("zero denominator in '" + s + "'", pos_for_errors);
    if (q < 0) {
      p = -p;
      q = -q;
    }
    return Rational(p, q);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (!valid_integer_token(whole.empty() ? "0" : whole) || frac.empty() ||
        !valid_integer_token(frac))
      throw ParseError("bad decimal '" + s + "'", pos_for_errors);
    const bool neg = !whole.empty() && whole.front() == '-';
    std::string digits = whole;
    digits.erase(std::remove(digits.begin(), digits.end(), '+'), digits.end());
    digits.erase(std::remove(digits.begin(), digits.end(), '-'), digits.end());
    BigInt p = big_from_token(digits + frac);
    BigInt q(1);
    for (std::size_t i = 0; i < frac.size(); ++i) q *= 10;
    if (neg) p = -p;
    return Rational(p, q);
  }
  if (!valid_integer_token(s)) throw ParseError("bad number '" + s + "'", pos_for_errors);
  return Rational(big_from_token(s));
}

}  // namespace detail

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static const char* name() { return "rational"; }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static bool equal(const Rational& a, const Rational& b, double /*tol*/ = 0.0) {
    return a == b;
  }
  static Rational parse(std::string_view token, std::size_t pos = 0) {
    return detail::parse_rational_token(token, pos);
  }
  static std::string format(const Rational& a) {
    if (denominator(a) == 1) return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
  }
  static double to_double(const Rational& a) { return a.convert_to<double>(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static const char* name() { return "f64"; }
  static bool is_zero(double a) { return a == 0.0; }
  static bool equal(double a, double b, double tol = kDefaultTolerance) {
    return std::abs(a - b) <= tol;
  }
  static double parse(std::string_view token, std::size_t pos = 0) {
    const Rational r = detail::parse_rational_token(token, pos);
    return scalar_traits<Rational>::to_double(r);
  }
  static std::string format(double a) {
    std::ostringstream os;
    os.precision(17);
    os << a;
    return os.str();
  }
  static double to_double(double a) { return a; }
};

}  // namespace lat

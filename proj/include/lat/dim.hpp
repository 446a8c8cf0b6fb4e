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

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

namespace lat {

/// Symbolic matrix dimension: a multivariate polynomial over dimension
/// variables with natural coefficients, kept in normal form (sorted monomial
/// map). Two dimensions are equal iff their normal forms are identical.
/// Variables range over positive naturals; concrete zero extents only enter
/// as constants.
class Dim {
 public:
  // monomial: variable -> exponent, e.g. {k:2, m:1} is k^2*m
  using Monomial = std::map<std::string, std::uint64_t>;
  using Terms = std::map<Monomial, std::uint64_t>;

  Dim() = default;  // zero

  static Dim constant(std::uint64_t c) {
    Dim d;
    if (c != 0) d.terms_[{}] = c;
    return d;
  }

  static Dim variable(std::string name) {
    Dim d;
    d.terms_[{{std::move(name), 1}}] = 1;
    return d;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }

  std::optional<std::uint64_t> as_constant() const {
    if (terms_.empty()) return 0;
    if (is_constant()) return terms_.begin()->second;
    return std::nullopt;
  }

  /// The bare variable v (coefficient 1, exponent 1, nothing else), if any.
  std::optional<std::string> as_variable() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [mono, coeff] = *terms_.begin();
    if (coeff != 1 || mono.size() != 1 || mono.begin()->second != 1) return std::nullopt;
    return mono.begin()->first;
  }

  std::set<std::string> variables() const {
    std::set<std::string> out;
    for (const auto& [mono, _] : terms_)
      for (const auto& [v, __] : mono) out.insert(v);
    return out;
  }

  bool contains(const std::string& v) const { return variables().count(v) > 0; }

  friend Dim operator+(const Dim& a, const Dim& b) {
    Dim out = a;
    for (const auto& [mono, coeff] : b.terms_) {
      auto& c = out.terms_[mono];
      c += coeff;
      if (c == 0) out.terms_.erase(mono);
    }
    return out;
  }

  friend Dim operator*(const Dim& a, const Dim& b) {
    Dim out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (const auto& [v, e] : mb) m[v] += e;
        out.terms_[m] += ca * cb;
      }
    }
    return out;
  }

  bool operator==(const Dim&) const = default;
  bool operator<(const Dim& o) const { return terms_ < o.terms_; }

  Dim substituted(const std::string& v, const Dim& replacement) const {
    Dim out;
    for (const auto& [mono, coeff] : terms_) {
      Dim term = Dim::constant(coeff);
      for (const auto& [var, exp] : mono) {
        const Dim base = var == v ? replacement : Dim::variable(var);
        for (std::uint64_t e = 0; e < exp; ++e) term = term * base;
      }
      out = out + term;
    }
    return out;
  }

  /// True if every monomial contains v (so one power of v can be cancelled).
  /// The zero polynomial is divisible by anything.
  bool divisible_by(const std::string& v) const {
    for (const auto& [mono, _] : terms_)
      if (!mono.count(v)) return false;
    return true;
  }

  Dim divided_by(const std::string& v) const {
    Dim out;
    for (const auto& [mono, coeff] : terms_) {
      Monomial m = mono;
      auto it = m.find(v);
      if (it->second == 1)
        m.erase(it);
      else
        --it->second;
      out.terms_[m] = coeff;
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
      if (!first) os << " + ";
      first = false;
      bool printed = false;
      if (coeff != 1 || mono.empty()) {
        os << coeff;
        printed = true;
      }
      for (const auto& [v, e] : mono) {
        if (printed) os << "*";
        os << v;
        if (e > 1) os << "^" << e;
        printed = true;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

/// The type of a matrix read as an arrow: target <- source
/// (target = rows, source = columns).
struct ArrowType {
  Dim target, source;
  bool operator==(const ArrowType&) const = default;
  /// Rendered the way matrix users write shapes: "rows x cols".
  std::string str() const { return target.str() + " x " + source.str(); }
};

}  // namespace lat

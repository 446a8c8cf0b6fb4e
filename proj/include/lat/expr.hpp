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
#include <string>
#include <vector>

#include "lat/dim.hpp"

namespace lat {

/// Byte range of a node in the source text, for diagnostics.
struct Span {
  std::size_t begin = 0, end = 0;
};

/// A dimension argument in the surface syntax: a natural literal or a
/// dimension variable name.
struct DimArg {
  bool is_var = false;
  std::uint64_t value = 0;
  std::string name;

  static DimArg lit(std::uint64_t v) { return {false, v, {}}; }
  static DimArg var(std::string n) { return {true, 0, std::move(n)}; }

  Dim dim() const { return is_var ? Dim::variable(name) : Dim::constant(value); }
  std::string str() const { return is_var ? name : std::to_string(value); }
  bool operator==(const DimArg&) const = default;
};

enum class ExprKind {
  Var,        // named matrix
  Id,         // id d
  Zero,       // zero r c
  Bang,       // bang d
  Eps,        // eps k m
  Eta,        // eta k m
  Comm,       // K n m
  Vec,        // vec k e
  Unvec,      // unvec k e
  Transpose,  // e^T
  Compose,    // a . b
  Add,        // a + b
  Junc,       // [a | b]
  Split,      // [a ; b]
  Kron,       // a x b
  DirectSum,  // a (+) b
  Hadamard,   // a .* b
  KhatriRao,  // a fork b
};

/// Expression AST. Leaf payloads: `name` for Var, `dims` for the generator
/// forms (id/zero/bang/eps/eta/K) and the thinning factor of vec/unvec.
struct Expr {
  ExprKind kind = ExprKind::Var;
  Span span;
  std::string name;
  std::vector<DimArg> dims;
  std::vector<Expr> children;
};

/// Structural equality, ignoring spans.
inline bool same_ast(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.name != b.name || a.dims != b.dims ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_ast(a.children[i], b.children[i])) return false;
  return true;
}

}  // namespace lat

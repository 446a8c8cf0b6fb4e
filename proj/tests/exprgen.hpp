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

#include <string>
#include <vector>

#include "lat/eval.hpp"
#include "lat/expr.hpp"
#include "lat/rng.hpp"

namespace lattest {

/// Generates random well-typed expressions together with matrix bindings,
/// for fuzzing the inference/evaluation pair: shapes are chosen top-down so
/// every node fits by construction.
struct ExprGen {
  lat::Rng& rng;
  lat::MatrixEnv<lat::Rational> env;
  int counter = 0;

  explicit ExprGen(lat::Rng& r) : rng(r) {}

  static std::vector<std::size_t> divisors(std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t d = 1; d <= v; ++d)
      if (v % d == 0) out.push_back(d);
    return out;
  }

  lat::Expr leaf(std::size_t rows, std::size_t cols) {
    lat::Expr e;
    if (rows == cols && rows > 0 && rng.uniform(0, 4) == 0) {
      e.kind = lat::ExprKind::Id;
      e.dims.push_back(lat::DimArg::lit(rows));
      return e;
    }
    if (rng.uniform(0, 5) == 0) {
      e.kind = lat::ExprKind::Zero;
      e.dims.push_back(lat::DimArg::lit(rows));
      e.dims.push_back(lat::DimArg::lit(cols));
      return e;
    }
    const std::string name = "m" + std::to_string(counter++);
    env.emplace(name, lat::random_matrix<lat::Rational>(rng, rows, cols));
    e.kind = lat::ExprKind::Var;
    e.name = name;
    return e;
  }

  lat::Expr gen(std::size_t rows, std::size_t cols, int depth) {
    using lat::DimArg;
    using lat::Expr;
    using lat::ExprKind;
    if (depth <= 0) return leaf(rows, cols);
    auto child2 = [&](ExprKind k, Expr a, Expr b) {
      Expr e;
      e.kind = k;
      e.children.push_back(std::move(a));
      e.children.push_back(std::move(b));
      return e;
    };
    switch (rng.uniform(0, 9)) {
      case 0: {  // transpose
        Expr e;
        e.kind = ExprKind::Transpose;
        e.children.push_back(gen(cols, rows, depth - 1));
        return e;
      }
      case 1:
        return child2(ExprKind::Add, gen(rows, cols, depth - 1), gen(rows, cols, depth - 1));
      case 2: {
        const std::size_t t = rng.dim(4);
        return child2(ExprKind::Compose, gen(rows, t, depth - 1), gen(t, cols, depth - 1));
      }
      case 3: {
        const std::size_t c1 = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(cols)));
        return child2(ExprKind::Junc, gen(rows, c1, depth - 1), gen(rows, cols - c1, depth - 1));
      }
      case 4: {
        const std::size_t r1 = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(rows)));
        return child2(ExprKind::Split, gen(r1, cols, depth - 1), gen(rows - r1, cols, depth - 1));
      }
      case 5:
        return child2(ExprKind::Hadamard, gen(rows, cols, depth - 1), gen(rows, cols, depth - 1));
      case 6: {
        if (rows == 0 || cols == 0) return leaf(rows, cols);
        const auto rd = divisors(rows), cd = divisors(cols);
        const std::size_t r1 = rd[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(rd.size() - 1)))];
        const std::size_t c1 = cd[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(cd.size() - 1)))];
        return child2(ExprKind::Kron, gen(r1, c1, depth - 1), gen(rows / r1, cols / c1, depth - 1));
      }
      case 7: {
        if (rows == 0) return leaf(rows, cols);
        const auto rd = divisors(rows);
        const std::size_t r1 = rd[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(rd.size() - 1)))];
        return child2(ExprKind::KhatriRao, gen(r1, cols, depth - 1), gen(rows / r1, cols, depth - 1));
      }
      case 8: {  // vec k of a (rows/k) x (k*cols) child
        if (rows == 0) return leaf(rows, cols);
        const auto rd = divisors(rows);
        const std::size_t k = rd[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(rd.size() - 1)))];
        Expr e;
        e.kind = ExprKind::Vec;
        e.dims.push_back(DimArg::lit(k));
        e.children.push_back(gen(rows / k, k * cols, depth - 1));
        return e;
      }
      case 9: {  // unvec k of a (k*rows) x (cols/k) child
        if (cols == 0) return leaf(rows, cols);
        const auto cd = divisors(cols);
        const std::size_t k = cd[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(cd.size() - 1)))];
        Expr e;
        e.kind = ExprKind::Unvec;
        e.dims.push_back(DimArg::lit(k));
        e.children.push_back(gen(k * rows, cols / k, depth - 1));
        return e;
      }
    }
    return leaf(rows, cols);
  }
};

}  // namespace lattest

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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lat/dim.hpp"
#include "lat/expr.hpp"

namespace lat {

using TypeEnv = std::map<std::string, ArrowType>;
using DimSubst = std::map<std::string, Dim>;

struct Constraint {
  Dim left, right;
  Span span;
  std::string rule;
};

struct TypeErrorInfo {
  enum class Kind { Mismatch, Unresolved, Unbound };
  Kind kind;
  std::string message;
  Dim lhs, rhs;
  Span origin;
  std::string rule;
};

struct InferResult {
  std::optional<ArrowType> type;
  DimSubst substitution;
  std::vector<TypeErrorInfo> errors;
  bool ok() const { return errors.empty() && type.has_value(); }
};

namespace detail {

inline Dim apply_subst(const Dim& d, const DimSubst& subst) {
  Dim out = d;
  for (const auto& v : d.variables()) {
    auto it = subst.find(v);
    if (it != subst.end()) out = out.substituted(v, it->second);
  }
  return out;
}

inline Dim monomial_dim(const Dim::Monomial& m) {
  Dim out = Dim::constant(1);
  for (const auto& [v, e] : m)
    for (std::uint64_t i = 0; i < e; ++i) out = out * Dim::variable(v);
  return out;
}

/// Drops monomials common to both sides (matching coefficients cancel),
/// which is sound because dimensions are naturals.
inline void cancel_common(Dim& l, Dim& r) {
  Dim::Terms lt = l.terms(), rt = r.terms();
  for (auto it = lt.begin(); it != lt.end();) {
    auto jt = rt.find(it->first);
    if (jt == rt.end()) {
      ++it;
      continue;
    }
    const std::uint64_t d = std::min(it->second, jt->second);
    it->second -= d;
    jt->second -= d;
    if (jt->second == 0) rt.erase(jt);
    if (it->second == 0)
      it = lt.erase(it);
    else
      ++it;
  }
  Dim nl, nr;
  for (const auto& [m, c] : lt) nl = nl + Dim::constant(c) * monomial_dim(m);
  for (const auto& [m, c] : rt) nr = nr + Dim::constant(c) * monomial_dim(m);
  l = nl;
  r = nr;
}

/// a*v + b with a single variable at power one; nullopt otherwise.
struct LinearForm {
  std::uint64_t a = 0, b = 0;
  std::string var;
};

inline std::optional<LinearForm> as_linear_single_var(const Dim& d) {
  LinearForm f;
  for (const auto& [mono, coeff] : d.terms()) {
    if (mono.empty()) {
      f.b = coeff;
    } else if (mono.size() == 1 && mono.begin()->second == 1) {
      if (f.a != 0) return std::nullopt;  // two variable terms
      f.a = coeff;
      f.var = mono.begin()->first;
    } else {
      return std::nullopt;
    }
  }
  if (f.a == 0) return std::nullopt;
  return f;
}

class ConstraintGen {
 public:
  ConstraintGen(const TypeEnv& env, std::vector<Constraint>& out,
                std::vector<TypeErrorInfo>& errors)
      : env_(env), out_(out), errors_(errors) {}

  ArrowType walk(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Var: {
        auto it = env_.find(e.name);
        if (it == env_.end()) {
          errors_.push_back({TypeErrorInfo::Kind::Unbound, "unbound matrix name '" + e.name + "'",
                             Dim(), Dim(), e.span, "lookup"});
          return {fresh(), fresh()};
        }
        return it->second;
      }
      case ExprKind::Id: {
        const Dim d = e.dims[0].dim();
        return {d, d};
      }
      case ExprKind::Zero:
        return {e.dims[0].dim(), e.dims[1].dim()};
      case ExprKind::Bang:
        return {Dim::constant(1), e.dims[0].dim()};
      case ExprKind::Eps: {
        const Dim k = e.dims[0].dim(), m = e.dims[1].dim();
        return {m, k * k * m};
      }
      case ExprKind::Eta: {
        const Dim k = e.dims[0].dim(), m = e.dims[1].dim();
        return {k * k * m, m};
      }
      case ExprKind::Comm: {
        const Dim n = e.dims[0].dim(), m = e.dims[1].dim();
        return {n * m, m * n};
      }
      case ExprKind::Transpose: {
        const ArrowType t = walk(e.children[0]);
        return {t.source, t.target};
      }
      case ExprKind::Compose: {
        const ArrowType a = walk(e.children[0]), b = walk(e.children[1]);
        constrain(a.source, b.target, e.span, "compose: source of the left factor vs target of the right");
        return {a.target, b.source};
      }
      case ExprKind::Add: {
        const ArrowType a = walk(e.children[0]), b = walk(e.children[1]);
        constrain(a.target, b.target, e.span, "add: targets");
        constrain(a.source, b.source, e.span, "add: sources");
        return a;
      }
      case ExprKind::Junc: {
        const ArrowType a = walk(e.children[0]), b = walk(e.children[1]);
        constrain(a.target, b.target, e.span, "junc: targets");
        return {a.target, a.source + b.source};
      }
      case ExprKind::Split: {
        const ArrowType a = walk(e.children[0]), b = walk(e.children[1]);
        constrain(a.source, b.source, e.span, "split: sources");
        return {a.target + b.target, a.source};
      }
      case ExprKind::Kron: {
        const ArrowType a = walk(e.children[0]), b = walk(e.children[1]);
        return {a.target * b.target, a.source * b.source};
      }
      case ExprKind::DirectSum: {
        const ArrowType a = walk(e.children[0]), b = walk(e.children[1]);
        return {a.target + b.target, a.source + b.source};
      }
      case ExprKind::Hadamard: {
        const ArrowType a = walk(e.children[0]), b = walk(e.children[1]);
        constrain(a.target, b.target, e.span, "hadamard: targets");
        constrain(a.source, b.source, e.span, "hadamard: sources");
        return a;
      }
      case ExprKind::KhatriRao: {
        const ArrowType a = walk(e.children[0]), b = walk(e.children[1]);
        constrain(a.source, b.source, e.span, "fork: sources");
        return {a.target * b.target, a.source};
      }
      case ExprKind::Vec: {
        const ArrowType a = walk(e.children[0]);
        const Dim k = e.dims[0].dim();
        const Dim x = fresh();
        constrain(a.source, k * x, e.span, "vec: source must factor through the thinning");
        return {k * a.target, x};
      }
      case ExprKind::Unvec: {
        const ArrowType a = walk(e.children[0]);
        const Dim k = e.dims[0].dim();
        const Dim x = fresh();
        constrain(a.target, k * x, e.span, "unvec: target must factor through the thinning");
        return {x, k * a.source};
      }
    }
    return {fresh(), fresh()};  // unreachable
  }

 private:
  Dim fresh() { return Dim::variable("_" + std::to_string(++counter_)); }

  void constrain(Dim l, Dim r, Span span, std::string rule) {
    out_.push_back({std::move(l), std::move(r), span, std::move(rule)});
  }

  const TypeEnv& env_;
  std::vector<Constraint>& out_;
  std::vector<TypeErrorInfo>& errors_;
  std::size_t counter_ = 0;
};

}  // namespace detail

/// Infers the principal arrow type of an expression under the given
/// environment. Solving is deliberately incomplete: constant equations,
/// isolated variables, single-variable linear equations and cancellation of
/// shared monomials/variable factors are solved; anything else is reported
/// as unresolved, never guessed. Dimension variables are taken to range over
/// positive naturals; zero extents enter as constants only.
inline InferResult infer_type(const Expr& e, const TypeEnv& env) {
  InferResult result;
  std::vector<Constraint> constraints;
  detail::ConstraintGen gen(env, constraints, result.errors);
  ArrowType type = gen.walk(e);

  DimSubst& subst = result.substitution;
  auto bind = [&](const std::string& v, const Dim& d) {
    for (auto& [w, img] : subst) img = img.substituted(v, d);
    subst[v] = d;
  };

  std::vector<Constraint> pending = std::move(constraints);
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<Constraint> next;
    for (auto& c : pending) {
      const Dim l0 = detail::apply_subst(c.left, subst);
      const Dim r0 = detail::apply_subst(c.right, subst);
      Dim l = l0, r = r0;
      detail::cancel_common(l, r);
      // Cancel a user dimension variable appearing in every monomial on both
      // sides. Sound because user variables denote positive naturals; the
      // `_`-prefixed internal variables may be zero and are never cancelled.
      bool cancelled = true;
      while (cancelled && !(l.is_zero() && r.is_zero())) {
        cancelled = false;
        auto vars = l.variables();
        vars.merge(r.variables());
        for (const auto& v : vars) {
          if (v.starts_with('_')) continue;
          if (l.divisible_by(v) && r.divisible_by(v)) {
            l = l.divided_by(v);
            r = r.divided_by(v);
            cancelled = true;
            break;
          }
        }
      }
      if (l == r) {
        progress = true;
        continue;
      }
      const auto lc = l.as_constant(), rc = r.as_constant();
      if (lc && rc) {
        // report the uncancelled sides, which are what the user wrote
        result.errors.push_back({TypeErrorInfo::Kind::Mismatch,
                                 c.rule + ": " + l0.str() + " != " + r0.str(), l0, r0, c.span,
                                 c.rule});
        progress = true;
        continue;
      }
      if (auto v = l.as_variable(); v && !r.contains(*v)) {
        bind(*v, r);
        progress = true;
        continue;
      }
      if (auto v = r.as_variable(); v && !l.contains(*v)) {
        bind(*v, l);
        progress = true;
        continue;
      }
      // a*v + b = c  with a single variable: v = (c - b) / a when exact
      auto try_linear = [&](const Dim& side, const Dim& other) -> bool {
        const auto form = detail::as_linear_single_var(side);
        const auto k = other.as_constant();
        if (!form || !k) return false;
        if (*k < form->b || (*k - form->b) % form->a != 0) {
          result.errors.push_back({TypeErrorInfo::Kind::Mismatch,
                                   c.rule + ": " + side.str() + " != " + other.str(), side, other,
                                   c.span, c.rule});
          return true;
        }
        bind(form->var, Dim::constant((*k - form->b) / form->a));
        return true;
      };
      if (try_linear(l, r) || try_linear(r, l)) {
        progress = true;
        continue;
      }
      next.push_back({l, r, c.span, c.rule});
    }
    pending = std::move(next);
  }

  for (const auto& c : pending) {
    result.errors.push_back({TypeErrorInfo::Kind::Unresolved,
                             c.rule + ": cannot solve " + c.left.str() + " = " + c.right.str(),
                             c.left, c.right, c.span, c.rule});
  }

  if (result.errors.empty()) {
    type.target = detail::apply_subst(type.target, subst);
    type.source = detail::apply_subst(type.source, subst);
    result.type = std::move(type);
  }
  return result;
}

}  // namespace lat

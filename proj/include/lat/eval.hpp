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
#include <string>

#include "lat/biproduct.hpp"
#include "lat/expr.hpp"
#include "lat/infer.hpp"
#include "lat/matrix.hpp"
#include "lat/tensor.hpp"
#include "lat/vectorize.hpp"

namespace lat {

template <class S>
using MatrixEnv = std::map<std::string, Matrix<S>>;

namespace detail {

inline std::uint64_t ground_dim(const DimArg& arg, const DimSubst& subst) {
  const Dim d = apply_subst(arg.dim(), subst);
  if (auto c = d.as_constant()) return *c;
  throw Error("dimension '" + arg.str() + "' is not ground (resolved to " + d.str() + ")");
}

template <class S>
Matrix<S> eval_rec(const Expr& e, const MatrixEnv<S>& env, const DimSubst& subst) {
  switch (e.kind) {
    case ExprKind::Var:
      return env.at(e.name);
    case ExprKind::Id:
      return identity<S>(ground_dim(e.dims[0], subst));
    case ExprKind::Zero:
      return zero<S>(ground_dim(e.dims[0], subst), ground_dim(e.dims[1], subst));
    case ExprKind::Bang:
      return bang<S>(ground_dim(e.dims[0], subst));
    case ExprKind::Eps:
      return epsilon<S>(ground_dim(e.dims[0], subst), ground_dim(e.dims[1], subst));
    case ExprKind::Eta:
      return eta<S>(ground_dim(e.dims[0], subst), ground_dim(e.dims[1], subst));
    case ExprKind::Comm:
      return commutation<S>(ground_dim(e.dims[0], subst), ground_dim(e.dims[1], subst));
    case ExprKind::Vec:
      return vec_k(ground_dim(e.dims[0], subst), eval_rec(e.children[0], env, subst));
    case ExprKind::Unvec:
      return unvec_k(ground_dim(e.dims[0], subst), eval_rec(e.children[0], env, subst));
    case ExprKind::Transpose:
      return transpose(eval_rec(e.children[0], env, subst));
    case ExprKind::Compose:
      return compose(eval_rec(e.children[0], env, subst), eval_rec(e.children[1], env, subst));
    case ExprKind::Add:
      return add(eval_rec(e.children[0], env, subst), eval_rec(e.children[1], env, subst));
    case ExprKind::Junc:
      return junc(eval_rec(e.children[0], env, subst), eval_rec(e.children[1], env, subst));
    case ExprKind::Split:
      return split(eval_rec(e.children[0], env, subst), eval_rec(e.children[1], env, subst));
    case ExprKind::Kron:
      return kron(eval_rec(e.children[0], env, subst), eval_rec(e.children[1], env, subst));
    case ExprKind::DirectSum:
      return direct_sum(eval_rec(e.children[0], env, subst), eval_rec(e.children[1], env, subst));
    case ExprKind::Hadamard:
      return hadamard(eval_rec(e.children[0], env, subst), eval_rec(e.children[1], env, subst));
    case ExprKind::KhatriRao:
      return khatri_rao(eval_rec(e.children[0], env, subst), eval_rec(e.children[1], env, subst));
  }
  throw Error("unreachable expression kind");
}

}  // namespace detail

/// Type environment induced by matrix bindings: every shape is ground.
template <class S>
TypeEnv type_env_of(const MatrixEnv<S>& env) {
  TypeEnv out;
  for (const auto& [name, m] : env)
    out[name] = ArrowType{Dim::constant(m.rows()), Dim::constant(m.cols())};
  return out;
}

/// Infers first, then evaluates bottom-up. After a successful inference over
/// ground bindings the evaluation cannot raise a shape mismatch; one would
/// be a bug, and the test suite asserts it.
template <class S>
Matrix<S> eval_expr(const Expr& e, const MatrixEnv<S>& env) {
  const InferResult inferred = infer_type(e, type_env_of(env));
  if (!inferred.ok())
    throw Error("type error: " +
                (inferred.errors.empty() ? std::string("no principal type")
                                         : inferred.errors.front().message));
  return detail::eval_rec(e, env, inferred.substitution);
}

}  // namespace lat

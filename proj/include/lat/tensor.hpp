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

#include <utility>

#include "lat/biproduct.hpp"
#include "lat/kron.hpp"
#include "lat/matrix.hpp"

namespace lat {

/// Block-diagonal bifunctor [[A,0],[0,B]], built as the junc of the standard
/// injections applied to each operand.
template <class S>
Matrix<S> direct_sum(const Matrix<S>& a, const Matrix<S>& b) {
  const Biproduct<S> bp = standard_biproduct<S>(a.rows(), b.rows());
  return junc(compose(bp.i1, a), compose(bp.i2, b));
}

/// Fork projections p1 = id_m (x) ! and p2 = ! (x) id_k, of shapes
/// m x (m*k) and k x (m*k).
template <class S>
std::pair<Matrix<S>, Matrix<S>> kr_projections(std::size_t m, std::size_t k) {
  return {kron(identity<S>(m), bang<S>(k)), kron(bang<S>(m), identity<S>(k))};
}

/// Khatri-Rao product (fork) of two arrows out of the same source:
/// (p1^T . A) * (p2^T . B), of shape (A.rows * B.rows) x n.
template <class S>
Matrix<S> khatri_rao(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.cols()) throw ShapeMismatch("khatri_rao", a.shape(), b.shape());
  auto [p1, p2] = kr_projections<S>(a.rows(), b.rows());
  return hadamard(compose(transpose(p1), a), compose(transpose(p2), b));
}

}  // namespace lat

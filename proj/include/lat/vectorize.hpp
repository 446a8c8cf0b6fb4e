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

#include "lat/biproduct.hpp"
#include "lat/kron.hpp"
#include "lat/matrix.hpp"

namespace lat {

/// Column-major vectorization with thinning factor k: reshapes the arrow
/// n <- k*m into k*n <- m by moving the factor k from source to target.
/// For m = 1 this is the classic column-stacking vec. Implemented by direct
/// index remapping; the categorical closed form (id_k (x) X) . eta_k is kept
/// as a law, not as the implementation.
template <class S>
Matrix<S> vec_k(std::size_t k, const Matrix<S>& a) {
  if (k == 0 || a.cols() % k != 0) throw IndivisibleThinning("vec_k", k, a.cols());
  const std::size_t n = a.rows(), m = a.cols() / k;
  return Matrix<S>(k * n, m,
                   [&](std::size_t i, std::size_t j) { return a(i % n, (i / n) * m + j); });
}

/// Inverse of vec_k: moves the factor k back from target to source.
template <class S>
Matrix<S> unvec_k(std::size_t k, const Matrix<S>& x) {
  if (k == 0 || x.rows() % k != 0) throw IndivisibleThinning("unvec_k", k, x.rows());
  const std::size_t n = x.rows() / k, m = x.cols();
  return Matrix<S>(n, k * m,
                   [&](std::size_t i, std::size_t j) { return x((j / m) * n + i, j % m); });
}

/// Rectangular [0;id] / [0|id] companion of eye: the off-corner projection
/// and injection blocks.
template <class S>
Matrix<S> jay(std::size_t r, std::size_t c) {
  if (r >= c) return vcat(zero<S>(r - c, c), identity<S>(c));
  return hcat(zero<S>(r, c - r), identity<S>(r));
}

/// Counit of the vectorization self-adjunction, of shape m x (k^2*m), built
/// by recursion on the thinning factor:
///
///   eps_1 = id        eps_{k+1} = [ eps_k . (id_k (x) pi1) | pi2 ]
///
/// where (pi1, pi2) project from the biproduct k*m + m. Satisfies the
/// reflection law vec_k eps_k = id and the cancellation law
/// A = eps_k . (id_k (x) vec_k A).
template <class S>
Matrix<S> epsilon(std::size_t k, std::size_t m) {
  if (k == 0) throw DegenerateScale("epsilon");
  if (k == 1) return identity<S>(m);
  const std::size_t n = k - 1;
  const Matrix<S> p1 = eye<S>(n * m, k * m);
  const Matrix<S> p2 = jay<S>(m, k * m);
  return junc(mul_block_diag_right(epsilon<S>(n, m), n, p1), p2);
}

/// Unit of the self-adjunction: eta = eps^T = vec_k id_{k*m}, of shape
/// (k^2*m) x m.
template <class S>
Matrix<S> eta(std::size_t k, std::size_t m) {
  return transpose(epsilon<S>(k, m));
}

namespace detail {

// Closed forms of the adjunction constants, eps = unvec id and eta = vec id.
// Equal to the recursive builders (a law of the suite); used internally where
// the recursion's cost would dominate.
template <class S>
Matrix<S> epsilon_closed(std::size_t k, std::size_t m) {
  if (k == 0) throw DegenerateScale("epsilon");
  return unvec_k(k, identity<S>(k * m));
}

template <class S>
Matrix<S> eta_closed(std::size_t k, std::size_t m) {
  if (k == 0) throw DegenerateScale("eta");
  return vec_k(k, identity<S>(k * m));
}

}  // namespace detail

/// Commutation (stride permutation) matrix K_{nm} of shape (n*m) x (m*n),
/// the unique solution of K . vec_m A = vec_n (A^T) for A of shape n x m.
/// Closed form: vec_{n*m} (unvec_n eps_m).
template <class S>
Matrix<S> commutation(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw DegenerateScale("commutation");
  return vec_k(n * m, unvec_k(n, epsilon<S>(m, n)));
}

/// The same matrix with the vec/unvec isomorphisms unfolded:
///
///   K_{nm} = (id_{nm} (x) eps_n) . (id_{nm*n} (x) eps_m) . eta_{nm}
///
/// The two Kronecker factors are applied blockwise rather than materialized.
template <class S>
Matrix<S> commutation_factored(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw DegenerateScale("commutation_factored");
  const Matrix<S> h = detail::eta_closed<S>(n * m, m * n);
  const Matrix<S> t = mul_block_diag_left(n * m * n, epsilon<S>(m, n), h);
  return mul_block_diag_left(n * m, epsilon<S>(n, 1), t);
}

/// Index-wise double summation sum_i sum_j H_ij (x) H_ij^T over the n x m
/// unit matrices H_ij. Shares no code with the categorical encodings, so it
/// serves as their independent oracle.
template <class S>
Matrix<S> commutation_sum(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw DegenerateScale("commutation_sum");
  Matrix<S> acc = zero<S>(n * m, m * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Matrix<S> h(n, m,
                        [&](std::size_t r, std::size_t c) { return S(r == i && c == j ? 1 : 0); });
      acc = add(acc, kron(h, transpose(h)));
    }
  }
  return acc;
}

/// Transposition expressed solely through the vec/unvec combinators:
/// A^T = unvec_r (vec_{r*c} (unvec_r A)) for A of shape r x c.
template <class S>
Matrix<S> transpose_via_vec(const Matrix<S>& a) {
  const std::size_t r = a.rows(), c = a.cols();
  if (r == 0 || c == 0) return Matrix<S>(c, r, std::vector<S>{});  // vec route degenerates
  return unvec_k(r, vec_k(r * c, unvec_k(r, a)));
}

/// Matrix multiplication under vector representation. Given vB = vec_n B
/// (B of shape j x n) and vC = vec_k C (C of shape n x k) as column vectors,
/// computes vec_k (B . C) = (id_k (x) eps_n) . (id_{k*n} (x) vB) . vC.
/// Both compositions are matrix-vector applications evaluated blockwise.
template <class S>
Matrix<S> vec_mmm(std::size_t n, const Matrix<S>& vb, const Matrix<S>& vc) {
  if (vb.cols() != 1 || vc.cols() != 1) throw ShapeMismatch("vec_mmm", vb.shape(), vc.shape());
  if (n == 0 || vb.rows() % n != 0 || vc.rows() % n != 0) throw LengthFactor();
  const std::size_t j = vb.rows() / n, k = vc.rows() / n;
  const Matrix<S> w = mul_block_diag_left(k * n, vb, vc);
  return mul_block_diag_left(k, epsilon<S>(n, j), w);
}

/// Multiplication of the vectorization monad T n = k^2*n, following the
/// standard theory: mu_n = id_k (x) eps taken at base k*n, of shape
/// (k^2*n) x (k^4*n). Both monad unit laws hold for this arrangement
/// (mu . eta_T = id and mu . T eta = id).
template <class S>
Matrix<S> mu(std::size_t k, std::size_t n) {
  if (k == 0) throw DegenerateScale("mu");
  return kron(identity<S>(k), epsilon<S>(k, k * n));
}

}  // namespace lat

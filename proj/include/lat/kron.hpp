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

#include "lat/matrix.hpp"

namespace lat {

/// Kronecker product: replaces each entry a_ij of A by the block a_ij * B.
/// Monoidal structure of the matrix category; the unit is identity(1).
template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  const std::size_t br = b.rows(), bc = b.cols();
  return Matrix<S>(a.rows() * br, a.cols() * bc, [&](std::size_t i, std::size_t j) {
    return a(i / br, j / bc) * b(i % br, j % bc);
  });
}

/// Entrywise (Hadamard) product.
template <class S>
Matrix<S> hadamard(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.shape() != b.shape()) throw ShapeMismatch("hadamard", a.shape(), b.shape());
  return Matrix<S>(a.rows(), a.cols(),
                   [&](std::size_t i, std::size_t j) { return a(i, j) * b(i, j); });
}

/// The 1-by-n row vector of ones, written "!".
template <class S>
Matrix<S> bang(std::size_t n) {
  return filled<S>(1, n, S(1));
}

/// (id_p (x) M) . N evaluated blockwise, without materializing the Kronecker
/// factor: row-block b of the result is M times row-block b of N.
template <class S>
Matrix<S> mul_block_diag_left(std::size_t p, const Matrix<S>& m, const Matrix<S>& n) {
  if (n.rows() != p * m.cols())
    throw ShapeMismatch("mul_block_diag_left", Shape{p * m.rows(), p * m.cols()}, n.shape());
  std::vector<S> out(p * m.rows() * n.cols(), S(0));
  const std::size_t w = n.cols();
  for (std::size_t b = 0; b < p; ++b) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t l = 0; l < m.cols(); ++l) {
        const S& x = m(i, l);
        if (scalar_traits<S>::is_zero(x)) continue;
        const std::size_t src = b * m.cols() + l, dst = b * m.rows() + i;
        for (std::size_t j = 0; j < w; ++j) out[dst * w + j] += x * n(src, j);
      }
    }
  }
  return Matrix<S>(p * m.rows(), n.cols(), std::move(out));
}

/// M . (id_p (x) K) evaluated blockwise: column-block b of the result is the
/// matching column-block of M times K.
template <class S>
Matrix<S> mul_block_diag_right(const Matrix<S>& m, std::size_t p, const Matrix<S>& k) {
  if (m.cols() != p * k.rows())
    throw ShapeMismatch("mul_block_diag_right", m.shape(), Shape{p * k.rows(), p * k.cols()});
  const std::size_t w = p * k.cols();
  std::vector<S> out(m.rows() * w, S(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t b = 0; b < p; ++b) {
      for (std::size_t l = 0; l < k.rows(); ++l) {
        const S& x = m(i, b * k.rows() + l);
        if (scalar_traits<S>::is_zero(x)) continue;
        for (std::size_t t = 0; t < k.cols(); ++t) out[i * w + b * k.cols() + t] += x * k(l, t);
      }
    }
  }
  return Matrix<S>(m.rows(), w, std::move(out));
}

}  // namespace lat

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

#include <initializer_list>
#include <vector>

#include "lat/matrix.hpp"
#include "lat/rng.hpp"
#include "lat/scalar.hpp"

namespace lattest {

using lat::Matrix;
using lat::Rational;

inline Rational q(long long p, long long d = 1) { return lat::rat(p, d); }

/// Rational matrix from integer rows.
inline Matrix<Rational> mat(std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<Rational> entries;
  entries.reserve(r * c);
  for (const auto& row : rows)
    for (long long v : row) entries.push_back(Rational(v));
  return Matrix<Rational>(r, c, std::move(entries));
}

/// Index-wise triple-sum product, the independent oracle for every
/// multiplication route in the library.
inline Matrix<Rational> naive_product(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  Matrix<Rational> out = lat::zero<Rational>(a.rows(), b.cols());
  std::vector<Rational> entries;
  entries.reserve(a.rows() * b.cols());
  for (std::size_t j = 0; j < a.rows(); ++j) {
    for (std::size_t k = 0; k < b.cols(); ++k) {
      Rational acc(0);
      for (std::size_t l = 0; l < a.cols(); ++l) acc += a(j, l) * b(l, k);
      entries.push_back(acc);
    }
  }
  return Matrix<Rational>(a.rows(), b.cols(), std::move(entries));
}

/// Classical reduced-row-echelon rank, computed by straightforward in-place
/// elimination; independent of the library's gje recursion.
inline std::size_t rref_rank(const Matrix<Rational>& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][col].is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    const Rational inv = Rational(1) / a[rank][col];
    for (std::size_t j = col; j < m.cols(); ++j) a[rank][j] *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace lattest

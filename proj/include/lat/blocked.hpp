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
#include <vector>

#include "lat/biproduct.hpp"
#include "lat/matrix.hpp"

namespace lat {

/// Divide-and-conquer matrix multiplication: [A|B] . [C;D] = A.C + B.D,
/// splitting the shared dimension at round(k/2) until it degenerates to an
/// outer product (k = 1).
template <class S>
Matrix<S> mmm_dc(const Matrix<S>& x, const Matrix<S>& y) {
  if (x.cols() != y.rows()) throw ShapeMismatch("mmm_dc", x.shape(), y.shape());
  const std::size_t k = x.cols();
  if (k == 0) return zero<S>(x.rows(), y.cols());
  if (k == 1)
    return Matrix<S>(x.rows(), y.cols(),
                     [&](std::size_t i, std::size_t j) { return x(i, 0) * y(0, j); });
  const std::size_t k1 = (k + 1) / 2;  // round(k/2)
  const Matrix<S> a = slice(x, 0, 0, x.rows(), k1), b = slice(x, 0, k1, x.rows(), k - k1);
  const Matrix<S> c = slice(y, 0, 0, k1, y.cols()), d = slice(y, k1, 0, k - k1, y.cols());
  return add(mmm_dc(a, c), mmm_dc(b, d));
}

enum class LoopOrder { jkl, kjl, jlk };

/// Naive triple-for-loop multiplication: two navigation loops over the output
/// and one accumulation loop over the shared dimension. The alternative loop
/// orders come from interchanging the traversals.
template <class S>
Matrix<S> mmm_naive(const Matrix<S>& a, const Matrix<S>& b, LoopOrder order = LoopOrder::jkl) {
  if (a.cols() != b.rows()) throw ShapeMismatch("mmm_naive", a.shape(), b.shape());
  const std::size_t m = a.rows(), n = b.cols(), p = a.cols();
  std::vector<S> c(m * n, S(0));
  switch (order) {
    case LoopOrder::jkl:
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          c[j * n + k] = S(0);
          for (std::size_t l = 0; l < p; ++l) c[j * n + k] += a(j, l) * b(l, k);
        }
      break;
    case LoopOrder::kjl:
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < m; ++j) {
          c[j * n + k] = S(0);
          for (std::size_t l = 0; l < p; ++l) c[j * n + k] += a(j, l) * b(l, k);
        }
      break;
    case LoopOrder::jlk:
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < p; ++l)
          for (std::size_t k = 0; k < n; ++k) c[j * n + k] += a(j, l) * b(l, k);
      break;
  }
  return Matrix<S>(m, n, std::move(c));
}

template <class S>
struct Blocks2x2 {
  Matrix<S> tl, tr, bl, br;
};

/// Blockwise product of 2x2-partitioned operands:
/// (R.A+S.C, R.B+S.D, T.A+U.C, T.B+U.D).
template <class S>
Blocks2x2<S> mmm_blocked_2x2(const Matrix<S>& r, const Matrix<S>& s, const Matrix<S>& t,
                             const Matrix<S>& u, const Matrix<S>& a, const Matrix<S>& b,
                             const Matrix<S>& c, const Matrix<S>& d) {
  return Blocks2x2<S>{add(compose(r, a), compose(s, c)), add(compose(r, b), compose(s, d)),
                      add(compose(t, a), compose(u, c)), add(compose(t, b), compose(u, d))};
}

/// The row-addition transform t(alpha, [A;B]) = [A ; alpha.A + B], the split
/// arising from the elementary matrix [[1,0],[alpha,1]].
template <class S>
Matrix<S> gauss_t(const S& alpha, const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.cols()) throw ShapeMismatch("gauss_t", a.shape(), b.shape());
  return split(a, add(scale(alpha, a), b));
}

/// True iff pivot columns strictly increase down the rows and no nonzero row
/// follows a zero row.
template <class S>
bool is_row_echelon(const Matrix<S>& m) {
  bool seen_zero_row = false;
  // one past the last pivot column; starts at 0 so the first pivot may sit anywhere
  std::size_t min_col = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t lead = m.cols();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!scalar_traits<S>::is_zero(m(i, j))) {
        lead = j;
        break;
      }
    }
    if (lead == m.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row || lead < min_col) return false;
    min_col = lead + 1;
  }
  return true;
}

/// Size of the largest topmost-leftmost block that is in row-echelon form
/// with all diagonal pivots nonzero (hence invertible): the largest k with
/// M(i,i) != 0 and M(i,j) = 0 for j < i < k.
template <class S>
std::size_t mpref(const Matrix<S>& m) {
  const std::size_t bound = std::min(m.rows(), m.cols());
  std::size_t k = 0;
  while (k < bound) {
    if (scalar_traits<S>::is_zero(m(k, k))) break;
    bool below_clear = true;
    for (std::size_t j = 0; j < k && below_clear; ++j)
      if (!scalar_traits<S>::is_zero(m(k, j))) below_clear = false;
    if (!below_clear) break;
    ++k;
  }
  return k;
}

/// Exact inverse of a square row-echelon matrix with nonzero diagonal, by
/// back-substitution. X . inv(X) = inv(X) . X = id.
template <class S>
Matrix<S> inv_row_echelon(const Matrix<S>& x) {
  if (x.rows() != x.cols()) throw ShapeMismatch("inv_row_echelon", x.shape(), x.shape());
  const std::size_t n = x.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (scalar_traits<S>::is_zero(x(i, i))) throw Singular("inv_row_echelon: zero pivot");
  std::vector<S> out(n * n, S(0));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      S acc = S(ii == c ? 1 : 0);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= x(ii, j) * out[j * n + c];
      out[ii * n + c] = acc / x(ii, ii);
    }
  }
  return Matrix<S>(n, n, std::move(out));
}

/// Result of Gauss-Jordan elimination: `result` is in row-echelon form,
/// `witness` is the invertible matrix with result = witness . input, and
/// `pivot_cols` lists the pivot column indices in order.
template <class S>
struct GjeResult {
  Matrix<S> result, witness;
  std::vector<std::size_t> pivot_cols;
};

namespace detail {

template <class S>
Matrix<S> row_swap_permutation(std::size_t n, std::size_t a, std::size_t b) {
  return Matrix<S>(n, n, [&](std::size_t i, std::size_t j) {
    std::size_t want = i == a ? b : (i == b ? a : i);
    return S(j == want ? 1 : 0);
  });
}

}  // namespace detail

/// Blocked Gauss-Jordan elimination:
///
///   gje [[X,B],[A,D]] = [[X,B],[0, gje(D - A.inv(X).B)]]
///
/// where X is the largest leading row-echelon block (mpref). When the leading
/// entry is zero, the first row with a nonzero head is swapped up (swap
/// biproduct); an all-zero leading column is left in place and elimination
/// proceeds on the remaining columns. Total: the zero matrix eliminates to
/// itself with an identity witness.
template <class S>
GjeResult<S> gje(const Matrix<S>& m) {
  const std::size_t r = m.rows(), c = m.cols();
  if (r == 0 || c == 0) return {m, identity<S>(r), {}};
  if (scalar_traits<S>::is_zero(m(0, 0))) {
    std::size_t nz = r;
    for (std::size_t i = 1; i < r; ++i) {
      if (!scalar_traits<S>::is_zero(m(i, 0))) {
        nz = i;
        break;
      }
    }
    if (nz < r) {
      const Matrix<S> p = detail::row_swap_permutation<S>(r, 0, nz);
      GjeResult<S> out = gje(compose(p, m));
      out.witness = compose(out.witness, p);
      return out;
    }
    // dead column: skip it and re-attach
    GjeResult<S> inner = gje(slice(m, 0, 1, r, c - 1));
    std::vector<std::size_t> pivots;
    for (std::size_t p : inner.pivot_cols) pivots.push_back(p + 1);
    return {junc(zero<S>(r, 1), inner.result), inner.witness, std::move(pivots)};
  }
  const std::size_t k = mpref(m);
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < k; ++i) pivots.push_back(i);
  if (k == r) return {m, identity<S>(r), std::move(pivots)};
  const Matrix<S> x = slice(m, 0, 0, k, k), b = slice(m, 0, k, k, c - k);
  const Matrix<S> a = slice(m, k, 0, r - k, k), d = slice(m, k, k, r - k, c - k);
  const Matrix<S> cg = compose(a, inv_row_echelon(x));
  GjeResult<S> inner = gje(sub(d, compose(cg, b)));
  for (std::size_t p : inner.pivot_cols) pivots.push_back(p + k);
  const Matrix<S> step =
      block(identity<S>(k), zero<S>(k, r - k), negate(cg), identity<S>(r - k));
  const Matrix<S> lift =
      block(identity<S>(k), zero<S>(k, r - k), zero<S>(r - k, k), inner.witness);
  return {block(x, b, zero<S>(r - k, k), inner.result), compose(lift, step),
          std::move(pivots)};
}

/// Classical Gaussian elimination, the scalar-pivot specialization:
///
///   ge [[x,B],[A,D]] = [[x,B],[0, ge(D - (A/x).B)]]      ge [x] = [x]
///
/// with the same pivoting pass as gje.
template <class S>
Matrix<S> ge(const Matrix<S>& m) {
  const std::size_t r = m.rows(), c = m.cols();
  if (r == 0 || c == 0) return m;
  if (scalar_traits<S>::is_zero(m(0, 0))) {
    std::size_t nz = r;
    for (std::size_t i = 1; i < r; ++i) {
      if (!scalar_traits<S>::is_zero(m(i, 0))) {
        nz = i;
        break;
      }
    }
    if (nz < r) return ge(compose(detail::row_swap_permutation<S>(r, 0, nz), m));
    return junc(zero<S>(r, 1), ge(slice(m, 0, 1, r, c - 1)));
  }
  if (r == 1) return m;
  const S& x = m(0, 0);
  const Matrix<S> b = slice(m, 0, 1, 1, c - 1);
  const Matrix<S> a = slice(m, 1, 0, r - 1, 1), d = slice(m, 1, 1, r - 1, c - 1);
  const S inv_x = S(1) / x;
  const Matrix<S> reduced = ge(sub(d, scale(inv_x, compose(a, b))));
  return block(slice(m, 0, 0, 1, 1), b, zero<S>(r - 1, 1), reduced);
}

}  // namespace lat

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

#include <span>
#include <string>
#include <vector>

#include "lat/kron.hpp"
#include "lat/matrix.hpp"

namespace lat {

/// A biproduct diagram over objects m, n: projections pi1 (m x m+n),
/// pi2 (n x m+n) and injections i1 (m+n x m), i2 (m+n x n) satisfying
///
///   pi1 . i1 = id_m        pi2 . i2 = id_n
///   i1 . pi1 + i2 . pi2 = id_{m+n}
///
/// from which orthogonality (pi1 . i2 = 0, pi2 . i1 = 0) follows. The record
/// is extensional (four explicit matrices), so one representation serves the
/// standard, swapped, self-cancellable and scaled constructions uniformly.
template <class S>
struct Biproduct {
  std::size_t m = 0, n = 0;
  Matrix<S> pi1, pi2, i1, i2;
};

/// Projections/injections assembled from identity and zero blocks. Its junc
/// and split are plain horizontal/vertical gluing.
template <class S>
Biproduct<S> standard_biproduct(std::size_t m, std::size_t n) {
  Biproduct<S> bp;
  bp.m = m;
  bp.n = n;
  bp.pi1 = hcat(identity<S>(m), zero<S>(m, n));
  bp.pi2 = hcat(zero<S>(n, m), identity<S>(n));
  bp.i1 = vcat(identity<S>(m), zero<S>(n, m));
  bp.i2 = vcat(zero<S>(m, n), identity<S>(n));
  return bp;
}

/// Swapping projections and injections with each other yields another
/// biproduct; its combinators flip argument order ([A;B] becomes [B;A]).
template <class S>
Biproduct<S> swap_biproduct(const Biproduct<S>& bp) {
  return Biproduct<S>{bp.n, bp.m, bp.pi2, bp.pi1, bp.i2, bp.i1};
}

/// Biproduct parametric on a matrix C (shape n x m, the arrow m -> n):
///
///   pi1 = [1|0]   pi2 = [C|1]   i1 = [1;-C]   i2 = [0;1]
///
/// Its split computes [A ; B - C.A], the block version of the elementary
/// row operation of Gaussian elimination; C = 0 gives back the standard
/// biproduct.
template <class S>
Biproduct<S> self_cancellable_biproduct(const Matrix<S>& c) {
  const std::size_t m = c.cols(), n = c.rows();
  Biproduct<S> bp;
  bp.m = m;
  bp.n = n;
  bp.pi1 = hcat(identity<S>(m), zero<S>(m, n));
  bp.pi2 = hcat(c, identity<S>(n));
  bp.i1 = vcat(identity<S>(m), negate(c));
  bp.i2 = vcat(zero<S>(m, n), identity<S>(n));
  return bp;
}

/// Scales a biproduct's dimensions k times by Kronecker-multiplying each of
/// the four matrices on the right with identity(k).
template <class S>
Biproduct<S> scale_biproduct(const Biproduct<S>& bp, std::size_t k) {
  if (k == 0) throw DegenerateScale("scale_biproduct");
  const Matrix<S> idk = identity<S>(k);
  return Biproduct<S>{bp.m * k,          bp.n * k,          kron(bp.pi1, idk),
                      kron(bp.pi2, idk), kron(bp.i1, idk),  kron(bp.i2, idk)};
}

/// Outcome of checking the biproduct identities; on failure `got` holds what
/// the left-hand side actually evaluated to.
template <class S>
struct BiproductCheck {
  struct Item {
    std::string name;
    bool pass;
    Matrix<S> got;
  };
  std::vector<Item> items;
  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

/// Evaluates the three biproduct identities plus the two derived
/// orthogonality facts, reporting each one by name.
template <class S>
BiproductCheck<S> check_biproduct(const Biproduct<S>& bp, double tol = kDefaultTolerance) {
  const std::size_t m = bp.m, n = bp.n, r = m + n;
  if (bp.pi1.shape() != Shape{m, r} || bp.i1.shape() != Shape{r, m})
    throw ShapeMismatch("check_biproduct", bp.pi1.shape(), bp.i1.shape());
  if (bp.pi2.shape() != Shape{n, r} || bp.i2.shape() != Shape{r, n})
    throw ShapeMismatch("check_biproduct", bp.pi2.shape(), bp.i2.shape());
  BiproductCheck<S> report;
  auto check = [&](std::string name, Matrix<S> got, const Matrix<S>& want) {
    report.items.push_back({std::move(name), equals(got, want, tol), std::move(got)});
  };
  check("pi1 . i1 = id", compose(bp.pi1, bp.i1), identity<S>(m));
  check("pi2 . i2 = id", compose(bp.pi2, bp.i2), identity<S>(n));
  check("i1 . pi1 + i2 . pi2 = id",
        add(compose(bp.i1, bp.pi1), compose(bp.i2, bp.pi2)), identity<S>(r));
  check("pi1 . i2 = 0", compose(bp.pi1, bp.i2), zero<S>(m, n));
  check("pi2 . i1 = 0", compose(bp.pi2, bp.i1), zero<S>(n, m));
  return report;
}

/// [A|B] over an arbitrary biproduct: A . pi1 + B . pi2.
template <class S>
Matrix<S> junc(const Biproduct<S>& bp, const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != bp.m || b.cols() != bp.n || a.rows() != b.rows())
    throw ShapeMismatch("junc", a.shape(), b.shape());
  return add(compose(a, bp.pi1), compose(b, bp.pi2));
}

/// [C;D] over an arbitrary biproduct: i1 . C + i2 . D.
template <class S>
Matrix<S> split(const Biproduct<S>& bp, const Matrix<S>& c, const Matrix<S>& d) {
  if (c.rows() != bp.m || d.rows() != bp.n || c.cols() != d.cols())
    throw ShapeMismatch("split", c.shape(), d.shape());
  return add(compose(bp.i1, c), compose(bp.i2, d));
}

/// [A|B] over the standard biproduct; gluing is the fast path and agrees
/// with the definitional A . pi1 + B . pi2.
template <class S>
Matrix<S> junc(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("junc", a.shape(), b.shape());
  return hcat(a, b);
}

/// [C;D] over the standard biproduct (stacking fast path).
template <class S>
Matrix<S> split(const Matrix<S>& c, const Matrix<S>& d) {
  if (c.cols() != d.cols()) throw ShapeMismatch("split", c.shape(), d.shape());
  return vcat(c, d);
}

/// [[A B],[C D]] over standard biproducts, built column-major as
/// [ [A;C] | [B;D] ]; the exchange law makes this equal to the row-major
/// [ [A|B] ; [C|D] ].
template <class S>
Matrix<S> block(const Matrix<S>& a, const Matrix<S>& b, const Matrix<S>& c, const Matrix<S>& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows()) throw ShapeMismatch("block", a.shape(), b.shape());
  if (a.cols() != c.cols() || b.cols() != d.cols()) throw ShapeMismatch("block", a.shape(), c.shape());
  return junc(split(a, c), split(b, d));
}

/// n-ary junc over standard biproducts, folded left-nested; nesting order is
/// observationally irrelevant by the exchange law.
template <class S>
Matrix<S> junc_n(std::span<const Matrix<S>> parts) {
  if (parts.empty()) throw EmptyList("junc_n");
  Matrix<S> acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = junc(acc, parts[i]);
  return acc;
}

template <class S>
Matrix<S> split_n(std::span<const Matrix<S>> parts) {
  if (parts.empty()) throw EmptyList("split_n");
  Matrix<S> acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = split(acc, parts[i]);
  return acc;
}

template <class S>
Matrix<S> junc_n(const std::vector<Matrix<S>>& parts) {
  return junc_n(std::span<const Matrix<S>>(parts));
}

template <class S>
Matrix<S> split_n(const std::vector<Matrix<S>>& parts) {
  return split_n(std::span<const Matrix<S>>(parts));
}

/// The m x n grid of 1x1 cells pi_j . A . i_k of the fully iterated
/// biproduct decomposition of A.
template <class S>
struct CellGrid {
  std::size_t rows = 0, cols = 0;
  std::vector<Matrix<S>> cells;  // row-major, each 1x1
  const Matrix<S>& at(std::size_t j, std::size_t k) const { return cells[j * cols + k]; }
};

template <class S>
CellGrid<S> cells(const Matrix<S>& a) {
  CellGrid<S> grid;
  grid.rows = a.rows();
  grid.cols = a.cols();
  grid.cells.reserve(a.rows() * a.cols());
  for (std::size_t j = 0; j < a.rows(); ++j) {
    const Matrix<S> pj = slice(eye<S>(a.rows(), a.rows()), j, 0, 1, a.rows());
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Matrix<S> ik = slice(eye<S>(a.cols(), a.cols()), 0, k, a.cols(), 1);
      grid.cells.push_back(compose(compose(pj, a), ik));
    }
  }
  return grid;
}

/// Reassembles sum_{j,k} i_j . cell(j,k) . pi_k, the identity that cell
/// decomposition loses no information.
template <class S>
Matrix<S> recompose(const CellGrid<S>& grid) {
  Matrix<S> acc = zero<S>(grid.rows, grid.cols);
  for (std::size_t j = 0; j < grid.rows; ++j) {
    const Matrix<S> ij = slice(eye<S>(grid.rows, grid.rows), 0, j, grid.rows, 1);
    for (std::size_t k = 0; k < grid.cols; ++k) {
      const Matrix<S> pk = slice(eye<S>(grid.cols, grid.cols), k, 0, 1, grid.cols);
      acc = add(acc, compose(compose(ij, grid.at(j, k)), pk));
    }
  }
  return acc;
}

}  // namespace lat

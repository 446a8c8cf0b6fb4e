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

#include <concepts>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "lat/error.hpp"
#include "lat/scalar.hpp"

namespace lat {

/// Dense, shape-tagged matrix over a field S, stored row-major.
///
/// A matrix with m rows and n columns is read as the arrow n -> m:
/// source() is the column count, target() the row count, and compose(A, B)
/// is "A after B". Matrices are immutable values; every operation below is a
/// pure function returning a fresh matrix, so values can be shared freely
/// across threads.
template <class S>
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, std::vector<S> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw LengthMismatch(rows_ * cols_, data_.size());
  }

  template <class Fn>
    requires std::invocable<Fn, std::size_t, std::size_t>
  Matrix(std::size_t rows, std::size_t cols, Fn&& fn) : rows_(rows), cols_(cols) {
    data_.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) data_.push_back(fn(i, j));
  }

  Matrix(std::initializer_list<std::initializer_list<S>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw LengthMismatch(cols_, row.size());
      for (const auto& v : row) data_.push_back(v);
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Shape shape() const { return {rows_, cols_}; }
  bool is_empty() const { return data_.empty(); }

  /// Arrow reading: an m-by-n matrix is the arrow n -> m.
  std::size_t source() const { return cols_; }
  std::size_t target() const { return rows_; }

  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<S>& entries() const { return data_; }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> data_;
};

template <class S>
Matrix<S> filled(std::size_t rows, std::size_t cols, const S& value) {
  return Matrix<S>(rows, cols, std::vector<S>(rows * cols, value));
}

template <class S>
Matrix<S> zero(std::size_t rows, std::size_t cols) {
  return filled<S>(rows, cols, S(0));
}

/// Rectangular identity: ones on the main diagonal, zeros elsewhere.
template <class S>
Matrix<S> eye(std::size_t rows, std::size_t cols) {
  return Matrix<S>(rows, cols, [](std::size_t i, std::size_t j) { return S(i == j ? 1 : 0); });
}

template <class S>
Matrix<S> identity(std::size_t n) {
  return eye<S>(n, n);
}

/// Matrix product, the categorical composition "A after B".
template <class S>
Matrix<S> compose(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("compose", a.shape(), b.shape());
  std::vector<S> out(a.rows() * b.cols(), S(0));
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const S& x = a(i, l);
      if (scalar_traits<S>::is_zero(x)) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += x * b(l, j);
    }
  }
  return Matrix<S>(a.rows(), b.cols(), std::move(out));
}

template <class S>
Matrix<S> add(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.shape() != b.shape()) throw ShapeMismatch("add", a.shape(), b.shape());
  return Matrix<S>(a.rows(), a.cols(),
                   [&](std::size_t i, std::size_t j) { return a(i, j) + b(i, j); });
}

template <class S>
Matrix<S> sub(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.shape() != b.shape()) throw ShapeMismatch("sub", a.shape(), b.shape());
  return Matrix<S>(a.rows(), a.cols(),
                   [&](std::size_t i, std::size_t j) { return a(i, j) - b(i, j); });
}

template <class S>
Matrix<S> negate(const Matrix<S>& a) {
  return Matrix<S>(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) { return -a(i, j); });
}

template <class S>
Matrix<S> scale(const S& alpha, const Matrix<S>& a) {
  return Matrix<S>(a.rows(), a.cols(),
                   [&](std::size_t i, std::size_t j) { return alpha * a(i, j); });
}

template <class S>
Matrix<S> transpose(const Matrix<S>& a) {
  return Matrix<S>(a.cols(), a.rows(), [&](std::size_t i, std::size_t j) { return a(j, i); });
}

/// Entrywise equality: exact for exact scalars, within `tol` otherwise.
template <class S>
bool equals(const Matrix<S>& a, const Matrix<S>& b, double tol = kDefaultTolerance) {
  if (a.shape() != b.shape()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (!scalar_traits<S>::equal(a.entries()[i], b.entries()[i], tol)) return false;
  return true;
}

/// Side-by-side gluing [A|B].
template <class S>
Matrix<S> hcat(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("hcat", a.shape(), b.shape());
  return Matrix<S>(a.rows(), a.cols() + b.cols(), [&](std::size_t i, std::size_t j) {
    return j < a.cols() ? a(i, j) : b(i, j - a.cols());
  });
}

/// Stacking [A;B].
template <class S>
Matrix<S> vcat(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.cols()) throw ShapeMismatch("vcat", a.shape(), b.shape());
  return Matrix<S>(a.rows() + b.rows(), a.cols(), [&](std::size_t i, std::size_t j) {
    return i < a.rows() ? a(i, j) : b(i - a.rows(), j);
  });
}

template <class S>
Matrix<S> slice(const Matrix<S>& a, std::size_t row0, std::size_t col0, std::size_t rows,
                std::size_t cols) {
  return Matrix<S>(rows, cols,
                   [&](std::size_t i, std::size_t j) { return a(row0 + i, col0 + j); });
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Matrix<S>& a) {
  os << a.rows() << " " << a.cols() << "\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << " ";
      os << scalar_traits<S>::format(a(i, j));
    }
    os << "\n";
  }
  return os;
}

}  // namespace lat

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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lat {

/// Extent of a matrix. Zero-extent shapes (0xn, mx0) are legal and denote
/// the unique empty matrix of that shape.
struct Shape {
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool operator==(const Shape&) const = default;
};

inline std::string to_string(const Shape& s) {
  return std::to_string(s.rows) + "x" + std::to_string(s.cols);
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands whose shapes do not fit the operation. Carries the operation
/// name and both shapes so front ends can print a precise diagnostic.
class ShapeMismatch : public Error {
 public:
  ShapeMismatch(std::string operation, Shape lhs_shape, Shape rhs_shape)
      : Error(operation + ": shape mismatch (" + to_string(lhs_shape) + " vs " +
              to_string(rhs_shape) + ")"),
        op(std::move(operation)),
        lhs(lhs_shape),
        rhs(rhs_shape) {}
  std::string op;
  Shape lhs, rhs;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t expected_len, std::size_t got_len)
      : Error("entry count " + std::to_string(got_len) + " does not match shape (expected " +
              std::to_string(expected_len) + ")"),
        expected(expected_len),
        got(got_len) {}
  std::size_t expected, got;
};

class DegenerateScale : public Error {
 public:
  explicit DegenerateScale(const std::string& where)
      : Error(where + ": scale factor must be at least 1") {}
};

class IndivisibleThinning : public Error {
 public:
  IndivisibleThinning(const std::string& where, std::size_t k, std::size_t extent)
      : Error(where + ": thinning factor " + std::to_string(k) + " does not divide " +
              std::to_string(extent)) {}
};

class Singular : public Error {
 public:
  explicit Singular(const std::string& what) : Error(what) {}
};

class EmptyList : public Error {
 public:
  explicit EmptyList(const std::string& where) : Error(where + ": empty argument list") {}
};

class LengthFactor : public Error {
 public:
  LengthFactor() : Error("n must be a common length factor") {}
};

/// Malformed textual input (expression or matrix file); position is a byte
/// offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t pos)
      : Error(message + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace lat

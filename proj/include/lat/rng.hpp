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

#include <cstdint>
#include <random>
#include <string_view>

#include "lat/matrix.hpp"
#include "lat/scalar.hpp"

namespace lat {

/// splitmix64 finalizer; used to derive independent seeds.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }

  std::size_t dim(std::size_t max_dim) {
    return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(max_dim)));
  }

  std::size_t positive(std::size_t max_value) {
    return static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_value)));
  }

  std::mt19937_64& raw() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Random scalar with numerator in [-9, 9] and denominator in [1, 9].
template <class S>
S random_scalar(Rng& rng);

template <>
inline Rational random_scalar<Rational>(Rng& rng) {
  return rat(rng.uniform(-9, 9), rng.uniform(1, 9));
}

template <>
inline double random_scalar<double>(Rng& rng) {
  return static_cast<double>(rng.uniform(-9, 9)) / static_cast<double>(rng.uniform(1, 9));
}

template <class S>
Matrix<S> random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  return Matrix<S>(rows, cols, [&](std::size_t, std::size_t) { return random_scalar<S>(rng); });
}

}  // namespace lat

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
#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "lat/rng.hpp"
#include "lat/vectorize.hpp"

using namespace lat;
using lattest::mat;
using lattest::naive_product;

TEST_CASE("column-major vectorization") {
  const auto a = mat({{1, 2, 3}, {4, 5, 6}});
  CHECK(vec_k(3, a) == mat({{1}, {4}, {2}, {5}, {3}, {6}}));
  CHECK(vec_k(1, a) == a);

  // blocked form: vec_2 [A|B] = [A;B]
  Rng rng(101);
  const auto l = random_matrix<Rational>(rng, 3, 2), r = random_matrix<Rational>(rng, 3, 2);
  CHECK(vec_k(2, junc(l, r)) == split(l, r));

  CHECK_THROWS_AS(vec_k(2, a), IndivisibleThinning);
  CHECK_THROWS_AS(vec_k(0, a), IndivisibleThinning);
}

TEST_CASE("devectorization inverts vectorization") {
  Rng rng(103);
  for (int t = 0; t < 20; ++t) {
    const std::size_t k = rng.positive(4), n = rng.dim(4), m = rng.dim(4);
    const auto a = random_matrix<Rational>(rng, n, k * m);
    const auto x = random_matrix<Rational>(rng, k * n, m);
    CHECK(unvec_k(k, vec_k(k, a)) == a);
    CHECK(vec_k(k, unvec_k(k, x)) == x);
    CHECK(unvec_k(1, x) == x);
    CHECK(transpose(vec_k(k, a)) == unvec_k(k, transpose(a)));
  }
  CHECK_THROWS_AS(unvec_k(2, mat({{1}, {2}, {3}})), IndivisibleThinning);
}

TEST_CASE("jay blocks") {
  CHECK(jay<Rational>(2, 2) == identity<Rational>(2));
  CHECK(jay<Rational>(1, 3) == mat({{0, 0, 1}}));
  CHECK(jay<Rational>(3, 1) == mat({{0}, {0}, {1}}));
}

TEST_CASE("counit of the vectorization adjunction") {
  CHECK(epsilon<Rational>(1, 4) == identity<Rational>(4));
  CHECK(epsilon<Rational>(2, 2) ==
        mat({{1, 0, 0, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 0, 0, 1}}));

  // eps_2 is the junc of the two standard projections
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto bp = standard_biproduct<Rational>(n, n);
    CHECK(epsilon<Rational>(2, n) == junc(bp.pi1, bp.pi2));
  }
  CHECK_THROWS_AS(epsilon<Rational>(0, 2), DegenerateScale);
}

TEST_CASE("unit of the vectorization adjunction") {
  CHECK(eta<Rational>(1, 5) == identity<Rational>(5));
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t m = 1; m <= 3; ++m) {
      CHECK(eta<Rational>(k, m) == transpose(epsilon<Rational>(k, m)));
      CHECK(eta<Rational>(k, m) == vec_k(k, identity<Rational>(k * m)));
    }
  }
}

TEST_CASE("blockwise application of id (x) M agrees with the materialized product") {
  Rng rng(107);
  for (int t = 0; t < 20; ++t) {
    const std::size_t p = rng.positive(3), r = rng.dim(3), c = rng.dim(3),
                      w = rng.dim(3);
    const auto m = random_matrix<Rational>(rng, r, c);
    const auto n = random_matrix<Rational>(rng, p * c, w);
    CHECK(mul_block_diag_left(p, m, n) ==
          naive_product(kron(identity<Rational>(p), m), n));
    const auto l = random_matrix<Rational>(rng, w, p * r);
    CHECK(mul_block_diag_right(l, p, m) ==
          naive_product(l, kron(identity<Rational>(p), m)));
  }
}

TEST_CASE("commutation matrix, three encodings") {
  CHECK(commutation<Rational>(1, 1) == mat({{1}}));
  CHECK(commutation<Rational>(2, 2) ==
        mat({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));

  Rng rng(109);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = rng.positive(5), m = rng.positive(5);
    const auto a = random_matrix<Rational>(rng, n, m);
    CHECK(compose(commutation<Rational>(n, m), vec_k(m, a)) == vec_k(n, transpose(a)));
  }

  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      const auto closed = commutation<Rational>(n, m);
      CHECK(closed == commutation_factored<Rational>(n, m));
      CHECK(closed == commutation_sum<Rational>(n, m));
    }
  }

  SECTION("basis-vector oracle at n=3, m=2") {
    const std::size_t n = 3, m = 2;
    const auto k_closed = commutation<Rational>(n, m);
    const auto k_fact = commutation_factored<Rational>(n, m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const Matrix<Rational> unit(n, m, [&](std::size_t r, std::size_t c) {
          return Rational(r == i && c == j ? 1 : 0);
        });
        CHECK(compose(k_closed, vec_k(m, unit)) == vec_k(n, transpose(unit)));
        CHECK(compose(k_fact, vec_k(m, unit)) == vec_k(n, transpose(unit)));
      }
    }
  }

  SECTION("summation form is a permutation matrix") {
    const auto k = commutation_sum<Rational>(3, 4);
    for (std::size_t i = 0; i < k.rows(); ++i) {
      Rational rowsum(0);
      for (std::size_t j = 0; j < k.cols(); ++j) rowsum += k(i, j);
      CHECK(rowsum == Rational(1));
    }
    for (std::size_t j = 0; j < k.cols(); ++j) {
      Rational colsum(0);
      for (std::size_t i = 0; i < k.rows(); ++i) colsum += k(i, j);
      CHECK(colsum == Rational(1));
    }
  }
}

TEST_CASE("transposition through vec and unvec") {
  Rng rng(113);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_matrix<Rational>(rng, rng.dim(6), rng.dim(6));
    CHECK(transpose_via_vec(a) == transpose(a));
  }
  CHECK(transpose_via_vec(identity<Rational>(3)) == identity<Rational>(3));

  // a row vector vectorizes to its own transpose
  const auto row = mat({{1, 2, 3, 4}});
  CHECK(vec_k(4, row) == transpose(row));
}

TEST_CASE("vectorized matrix multiplication") {
  Rng rng(127);
  const auto b = random_matrix<Rational>(rng, 2, 3);
  const auto c = random_matrix<Rational>(rng, 3, 2);
  const auto vbc = vec_mmm(3, vec_k(3, b), vec_k(2, c));
  CHECK(unvec_k(2, vbc) == naive_product(b, c));

  // unit factors
  const auto id3 = identity<Rational>(3);
  CHECK(vec_mmm(3, vec_k(3, b), vec_k(3, id3)) == vec_k(3, b));
  const auto vc = vec_k(2, c);
  CHECK(vec_mmm(3, vec_k(3, id3), vc) == vc);

  CHECK_THROWS_AS(vec_mmm(4, vec_k(3, b), vec_k(2, c)), LengthFactor);
  CHECK_THROWS_AS(vec_mmm(2, b, c), ShapeMismatch);
}

TEST_CASE("monad multiplication") {
  CHECK(mu<Rational>(1, 4) == identity<Rational>(4));
  CHECK(mu<Rational>(2, 1).shape() == Shape{4, 16});

  for (std::size_t n = 1; n <= 2; ++n) {
    const std::size_t k = 2;
    const auto m = mu<Rational>(k, n);
    const auto unit_at_tn = eta<Rational>(k, k * k * n);
    const auto lifted_unit = kron(identity<Rational>(k * k), eta<Rational>(k, n));
    CHECK(compose(m, unit_at_tn) == identity<Rational>(k * k * n));
    CHECK(compose(m, lifted_unit) == identity<Rational>(k * k * n));
  }
}

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

#include "exprgen.hpp"
#include "helpers.hpp"
#include "lat/eval.hpp"
#include "lat/infer.hpp"
#include "lat/parse.hpp"
#include "lat/vectorize.hpp"

using namespace lat;
using lattest::mat;

namespace {

ArrowType arrow(std::uint64_t rows, std::uint64_t cols) {
  return {Dim::constant(rows), Dim::constant(cols)};
}

ArrowType arrow(const char* rows, const char* cols) {
  return {Dim::variable(rows), Dim::variable(cols)};
}

}  // namespace

TEST_CASE("parser shapes the AST by precedence") {
  const Expr e1 = parse_expr("A . B");
  CHECK(e1.kind == ExprKind::Compose);
  CHECK(e1.children[0].name == "A");
  CHECK(e1.children[1].name == "B");

  const Expr e2 = parse_expr("[A | B] . [C ; D]");
  CHECK(e2.kind == ExprKind::Compose);
  CHECK(e2.children[0].kind == ExprKind::Junc);
  CHECK(e2.children[1].kind == ExprKind::Split);

  const Expr e3 = parse_expr("A . B + C");
  CHECK(e3.kind == ExprKind::Add);
  CHECK(e3.children[0].kind == ExprKind::Compose);

  // composition binds tighter than the other multiplicative operators
  const Expr e4 = parse_expr("A x B . C");
  CHECK(e4.kind == ExprKind::Kron);
  CHECK(e4.children[1].kind == ExprKind::Compose);

  // direct sum is loosest
  const Expr e5 = parse_expr("A + B (+) C");
  CHECK(e5.kind == ExprKind::DirectSum);
  CHECK(e5.children[0].kind == ExprKind::Add);

  const Expr e6 = parse_expr("vec 2 A^T");
  CHECK(e6.kind == ExprKind::Transpose);
  CHECK(e6.children[0].kind == ExprKind::Vec);

  const Expr e7 = parse_expr("vec k B");
  CHECK(e7.kind == ExprKind::Vec);
  CHECK(e7.dims[0].is_var);
  CHECK(e7.dims[0].name == "k");
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_expr("[A + B"), ParseError);
  CHECK_THROWS_AS(parse_expr("A . . B"), ParseError);
  CHECK_THROWS_AS(parse_expr("A ^ B"), ParseError);
  try {
    parse_expr("[A | B");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 6);
  }
}

TEST_CASE("pretty-print round-trips") {
  for (const char* src :
       {"A . B", "[A | B] . [C ; D]", "A . B + C", "A x B . C", "(A + B) . C",
        "vec 2 (A^T) + unvec 3 B", "A fork B .* C", "id 3 (+) bang 2", "eps 2 2 . vec 2 A",
        "K 3 2 . vec 2 m1", "zero 2 3 + A", "eta 2 1^T"}) {
    const Expr e = parse_expr(src);
    CHECK(same_ast(parse_expr(pretty(e)), e));
  }
  // fuzz over generated well-typed trees
  Rng rng(2024);
  for (int t = 0; t < 200; ++t) {
    lattest::ExprGen gen(rng);
    const Expr e = gen.gen(rng.positive(4), rng.positive(4), 3);
    CHECK(same_ast(parse_expr(pretty(e)), e));
  }
}

TEST_CASE("inference on ground environments") {
  TypeEnv env;
  env["A"] = arrow(2, 2);
  env["B"] = arrow(2, 1);
  const InferResult r = infer_type(parse_expr("[A | B]"), env);
  REQUIRE(r.ok());
  CHECK(*r.type == arrow(2, 3));
  CHECK(r.type->str() == "2 x 3");
}

TEST_CASE("the principal type of the triple-product vectorization") {
  // A : j x n, B : n x k, C : k x m; the thinning factor of "vec k B" is the
  // same k as B's source, which forces its result source to 1.
  TypeEnv env;
  env["A"] = arrow("j", "n");
  env["B"] = arrow("n", "k");
  env["C"] = arrow("k", "m");
  const InferResult r = infer_type(parse_expr("(C^T x A) . vec k B"), env);
  REQUIRE(r.ok());
  CHECK(r.type->source == Dim::constant(1));
  CHECK(r.type->target == Dim::variable("m") * Dim::variable("j"));
  CHECK(r.type->str() == "j*m x 1");
}

TEST_CASE("ill-typed junc reports the irreconcilable pair") {
  TypeEnv env;
  env["A"] = arrow(2, 2);
  env["B"] = arrow(3, 2);
  const InferResult r = infer_type(parse_expr("[A | B]"), env);
  REQUIRE_FALSE(r.ok());
  REQUIRE_FALSE(r.errors.empty());
  const auto& e = r.errors.front();
  CHECK(e.kind == TypeErrorInfo::Kind::Mismatch);
  CHECK(e.lhs == Dim::constant(2));
  CHECK(e.rhs == Dim::constant(3));
  CHECK(e.message.find("junc: targets") != std::string::npos);
  CHECK(e.message.find("2 != 3") != std::string::npos);
}

TEST_CASE("unsolvable products are reported, never guessed") {
  TypeEnv env;
  env["A"] = arrow("a", "b");
  env["B"] = arrow("c", "d");
  const InferResult r = infer_type(parse_expr("(A x B) . id 6"), env);
  REQUIRE_FALSE(r.ok());
  CHECK(r.errors.front().kind == TypeErrorInfo::Kind::Unresolved);
}

TEST_CASE("unbound names are reported") {
  const InferResult r = infer_type(parse_expr("A . B"), {});
  REQUIRE_FALSE(r.ok());
  CHECK(r.errors.front().kind == TypeErrorInfo::Kind::Unbound);
}

TEST_CASE("evaluation of the worked junc example") {
  MatrixEnv<Rational> env;
  env.emplace("A", mat({{1, 2}, {4, 5}}));
  env.emplace("B", mat({{3}, {6}}));
  CHECK(eval_expr(parse_expr("[A | B]"), env) == mat({{1, 2, 3}, {4, 5, 6}}));
}

TEST_CASE("evaluation of generator forms") {
  MatrixEnv<Rational> env;
  CHECK(eval_expr(parse_expr("eps 2 2"), env) == epsilon<Rational>(2, 2));
  CHECK(eval_expr(parse_expr("id 3"), env) == identity<Rational>(3));
  CHECK(eval_expr(parse_expr("bang 3"), env) == bang<Rational>(3));
}

TEST_CASE("commutation under the evaluator matches the library") {
  Rng rng(301);
  for (int t = 0; t < 10; ++t) {
    MatrixEnv<Rational> env;
    env.emplace("A", random_matrix<Rational>(rng, 2, 2));
    CHECK(eval_expr(parse_expr("K 2 2 . vec 2 A"), env) ==
          eval_expr(parse_expr("vec 2 (A^T)"), env));
  }
}

TEST_CASE("type errors abort evaluation") {
  MatrixEnv<Rational> env;
  env.emplace("A", mat({{1, 2}}));
  env.emplace("B", mat({{1, 2, 3}}));
  CHECK_THROWS_AS(eval_expr(parse_expr("A + B"), env), Error);
}

TEST_CASE("soundness: inferred types predict evaluated shapes") {
  Rng rng(4096);
  for (int t = 0; t < 300; ++t) {
    lattest::ExprGen gen(rng);
    const std::size_t rows = rng.dim(4), cols = rng.dim(4);
    const Expr e = gen.gen(rows, cols, 3);
    const InferResult r = infer_type(e, type_env_of(gen.env));
    REQUIRE(r.ok());
    Matrix<Rational> value = zero<Rational>(0, 0);
    REQUIRE_NOTHROW(value = eval_expr(e, gen.env));
    CHECK(value.rows() == rows);
    CHECK(value.cols() == cols);
    CHECK(r.type->target == Dim::constant(rows));
    CHECK(r.type->source == Dim::constant(cols));
  }
}

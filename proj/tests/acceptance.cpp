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

// Acceptance suite: each criterion prints a single PASS/FAIL line and has a
// pinned wall-clock budget. Everything is exact rational arithmetic.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "exprgen.hpp"
#include "helpers.hpp"
#include "lat/blocked.hpp"
#include "lat/eval.hpp"
#include "lat/infer.hpp"
#include "lat/laws.hpp"
#include "lat/parse.hpp"
#include "lat/tensor.hpp"
#include "lat/vectorize.hpp"

using namespace lat;
using lattest::mat;
using lattest::naive_product;
using lattest::rref_rank;

namespace {

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::ostream&)> run;
};

Matrix<Rational> structured_random(Rng& rng, std::size_t max_dim) {
  const std::size_t m = rng.dim(max_dim), n = rng.dim(max_dim);
  Matrix<Rational> a = random_matrix<Rational>(rng, m, n);
  if (rng.uniform(0, 2) == 0 && m > 1 && n > 1) {
    const std::size_t r = rng.positive(std::min(m, n) - 1);
    a = compose(random_matrix<Rational>(rng, m, r), random_matrix<Rational>(rng, r, n));
  }
  if (rng.uniform(0, 2) == 0 && n > 0) {
    const std::size_t dead =
        static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(n - 1)));
    a = Matrix<Rational>(
        m, n, [&](std::size_t i, std::size_t j) { return j == dead ? Rational(0) : a(i, j); });
  }
  return a;
}

bool criterion_biproduct_axioms(std::ostream& log) {
  Rng rng(1001);
  const std::size_t instances = 200;
  for (std::size_t t = 0; t < instances; ++t) {
    const std::size_t m = rng.dim(6), n = rng.dim(6), k = rng.positive(4);
    const Matrix<Rational> c = random_matrix<Rational>(rng, n, m);
    const Biproduct<Rational> constructions[] = {
        standard_biproduct<Rational>(m, n),
        swap_biproduct(standard_biproduct<Rational>(m, n)),
        self_cancellable_biproduct(c),
        scale_biproduct(standard_biproduct<Rational>(m, n), k),
    };
    for (const auto& bp : constructions) {
      const auto report = check_biproduct(bp);
      if (!report.ok()) {
        log << "axioms failed at instance " << t;
        return false;
      }
    }
  }
  log << "4 constructions x " << instances << " instances, 5 identities each, exact";
  return true;
}

bool criterion_law_suite(std::ostream& log) {
  const auto reports = run_law_suite<Rational>(200, 42, LawOptions{6, 4, 0.0});
  std::size_t failed = 0;
  for (const auto& rep : reports) {
    if (!rep.passed()) {
      ++failed;
      log << rep.name << " FAILED (" << rep.failures.size() << "/" << rep.trials << "); ";
    }
  }
  if (failed == 0) log << reports.size() << " named laws x 200 exact trials, zero failures";
  return failed == 0;
}

bool criterion_mmm_equivalence(std::ostream& log) {
  Rng rng(3003);
  for (int t = 0; t < 50; ++t) {
    std::size_t m, k, n;
    if (t < 3) {
      m = k = n = 32;
    } else {
      m = rng.positive(32);
      k = rng.positive(32);
      n = rng.positive(32);
    }
    const auto a = random_matrix<Rational>(rng, m, k);
    const auto b = random_matrix<Rational>(rng, k, n);
    const auto want = compose(a, b);
    if (mmm_dc(a, b) != want) return false;
    if (mmm_naive(a, b, LoopOrder::jkl) != want) return false;
    if (mmm_naive(a, b, LoopOrder::kjl) != want) return false;
    if (mmm_naive(a, b, LoopOrder::jlk) != want) return false;
    const std::size_t m1 = (m + 1) / 2, k1 = (k + 1) / 2, n1 = (n + 1) / 2;
    const auto blocks = mmm_blocked_2x2(
        slice(a, 0, 0, m1, k1), slice(a, 0, k1, m1, k - k1), slice(a, m1, 0, m - m1, k1),
        slice(a, m1, k1, m - m1, k - k1), slice(b, 0, 0, k1, n1), slice(b, 0, n1, k1, n - n1),
        slice(b, k1, 0, k - k1, n1), slice(b, k1, n1, k - k1, n - n1));
    if (block(blocks.tl, blocks.tr, blocks.bl, blocks.br) != want) return false;
    if (unvec_k(n, vec_mmm(k, vec_k(k, a), vec_k(n, b))) != want) return false;
  }
  // zero-extent edges for the dense routes
  const auto e1 = zero<Rational>(4, 0), e2 = zero<Rational>(0, 3);
  if (mmm_dc(e1, e2) != zero<Rational>(4, 3)) return false;
  if (mmm_naive(e1, e2) != zero<Rational>(4, 3)) return false;
  log << "dc, naive (jkl/kjl/jlk), blocked 2x2, vecMMM vs compose on 50 instances up to 32x32";
  return true;
}

bool criterion_commutation(std::ostream& log) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t m = 1; m <= 5; ++m) {
      const auto closed = commutation<Rational>(n, m);
      if (closed != commutation_factored<Rational>(n, m)) {
        log << "factored encoding differs at n=" << n << " m=" << m;
        return false;
      }
      if (closed != commutation_sum<Rational>(n, m)) {
        log << "summation encoding differs at n=" << n << " m=" << m;
        return false;
      }
      // permutation structure: exactly one 1 per row and per column
      for (std::size_t i = 0; i < closed.rows(); ++i) {
        Rational sum(0);
        for (std::size_t j = 0; j < closed.cols(); ++j) sum += closed(i, j);
        if (sum != Rational(1)) return false;
      }
    }
  }
  Rng rng(4004);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rng.positive(5), m = rng.positive(5);
    const auto a = random_matrix<Rational>(rng, n, m);
    if (compose(commutation<Rational>(n, m), vec_k(m, a)) != vec_k(n, transpose(a)))
      return false;
  }
  log << "25 (n,m) pairs agree across 3 encodings; K.vec = vec-transpose on 100 instances";
  return true;
}

bool criterion_gje(std::ostream& log) {
  Rng rng(5005);
  std::size_t generic = 0;
  for (int t = 0; t < 100; ++t) {
    const auto m = structured_random(rng, 8);
    const auto res = gje(m);
    if (!is_row_echelon(res.result)) return false;
    if (res.result != compose(res.witness, m)) return false;
    if (rref_rank(res.witness) != m.rows()) return false;
    if (res.pivot_cols.size() != rref_rank(m)) return false;
  }
  // the classical recursion agrees on the generic (full-pivot) subset
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rng.positive(6);
    const auto m = random_matrix<Rational>(rng, n, n);
    bool full_pivots = true;
    for (std::size_t i = 0; i < n && full_pivots; ++i)
      full_pivots = rref_rank(slice(m, 0, 0, i + 1, i + 1)) == i + 1;
    if (!full_pivots) continue;
    ++generic;
    if (ge(m) != gje(m).result) return false;
  }
  if (generic == 0) return false;
  log << "100 instances up to 8x8 (rank-deficient and dead columns included); "
      << generic << " generic instances cross-checked against ge";
  return true;
}

bool criterion_pinned_values(std::ostream& log) {
  if (epsilon<Rational>(2, 2) !=
      mat({{1, 0, 0, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 0, 0, 1}}))
    return false;
  if (junc(mat({{1, 2}, {4, 5}}), mat({{3}, {6}})) != mat({{1, 2, 3}, {4, 5, 6}}))
    return false;
  if (vec_k(3, mat({{1, 2, 3}, {4, 5, 6}})) != mat({{1}, {4}, {2}, {5}, {3}, {6}}))
    return false;
  const auto bp = standard_biproduct<Rational>(1, 1);
  if (bp.pi1 != mat({{1, 0}}) || bp.pi2 != mat({{0, 1}}) || bp.i1 != mat({{1}, {0}}) ||
      bp.i2 != mat({{0}, {1}}))
    return false;
  log << "eps_2 (m=2), the junc example, vec_3 of the 2x3 example, the 1+1 biproduct";
  return true;
}

bool criterion_typechecker(std::ostream& log) {
  TypeEnv env;
  env["A"] = {Dim::variable("j"), Dim::variable("n")};
  env["B"] = {Dim::variable("n"), Dim::variable("k")};
  env["C"] = {Dim::variable("k"), Dim::variable("m")};
  const InferResult roth = infer_type(parse_expr("(C^T x A) . vec k B"), env);
  if (!roth.ok() || roth.type->source != Dim::constant(1) ||
      roth.type->target != Dim::variable("j") * Dim::variable("m")) {
    log << "principal type of the triple-product vectorization not reproduced";
    return false;
  }

  TypeEnv bad;
  bad["A"] = {Dim::constant(2), Dim::constant(2)};
  bad["B"] = {Dim::constant(3), Dim::constant(2)};
  const InferResult ill = infer_type(parse_expr("[A | B]"), bad);
  if (ill.ok() || ill.errors.empty() || ill.errors.front().lhs != Dim::constant(2) ||
      ill.errors.front().rhs != Dim::constant(3)) {
    log << "ill-typed junc not rejected with the offending pair";
    return false;
  }

  Rng rng(7007);
  for (int t = 0; t < 500; ++t) {
    lattest::ExprGen gen(rng);
    const std::size_t rows = rng.dim(4), cols = rng.dim(4);
    const Expr e = gen.gen(rows, cols, 3);
    const InferResult r = infer_type(e, type_env_of(gen.env));
    if (!r.ok()) {
      log << "well-typed term rejected at trial " << t;
      return false;
    }
    try {
      const auto value = eval_expr(e, gen.env);
      if (value.rows() != rows || value.cols() != cols) {
        log << "evaluated shape disagrees at trial " << t;
        return false;
      }
    } catch (const ShapeMismatch&) {
      log << "evaluator shape error at trial " << t;
      return false;
    }
  }
  log << "principal-type golden, mismatch golden, 500-term soundness fuzz with zero shape errors";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"biproduct axiom suite (standard, swapped, self-cancellable, scaled)", 10.0,
       criterion_biproduct_axioms},
      {"named law suite, 200 exact trials each", 60.0, criterion_law_suite},
      {"MMM equivalence up to 32x32", 30.0, criterion_mmm_equivalence},
      {"commutation coherence across three encodings", 5.0, criterion_commutation},
      {"Gauss-Jordan contract and rank oracle", 10.0, criterion_gje},
      {"pinned values", 5.0, criterion_pinned_values},
      {"typechecker goldens and soundness fuzz", 10.0, criterion_typechecker},
  };

  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    std::ostringstream log;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log << "exception: " << e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = elapsed < c.budget_seconds;
    const bool pass = ok && in_budget;
    failures += pass ? 0 : 1;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << index << ". " << c.name << " — "
              << log.str() << " (" << std::fixed << std::setprecision(2) << elapsed << "s < "
              << c.budget_seconds << "s" << (in_budget ? "" : " EXCEEDED") << ")\n";
  }
  if (failures == 0)
    std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
  else
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
  return failures;
}

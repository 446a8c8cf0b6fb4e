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

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "lat/biproduct.hpp"
#include "lat/blocked.hpp"
#include "lat/matrix.hpp"
#include "lat/rng.hpp"
#include "lat/tensor.hpp"
#include "lat/vectorize.hpp"

namespace lat {

struct LawOptions {
  std::size_t max_dim = 6;
  std::size_t max_thinning = 4;
  double tol = kDefaultTolerance;
};

/// One named algebraic law, checked on randomized instances. A trial returns
/// true when the law held on the instance it drew.
template <class S>
struct Law {
  std::string name;
  std::function<bool(Rng&, const LawOptions&)> trial;
};

struct LawFailure {
  std::size_t trial_index;
  std::uint64_t seed;  // reseeding an Rng with this replays the instance
};

struct LawReport {
  std::string name;
  std::size_t trials = 0;
  std::vector<LawFailure> failures;
  double elapsed_seconds = 0.0;
  bool passed() const { return failures.empty(); }
};

template <class S>
LawReport run_law(const Law<S>& law, std::size_t trials, std::uint64_t suite_seed,
                  const LawOptions& opts = {}) {
  LawReport report;
  report.name = law.name;
  report.trials = trials;
  const std::uint64_t law_seed = mix_seed(suite_seed, fnv1a(law.name));
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = mix_seed(law_seed, t);
    Rng rng(trial_seed);
    bool ok = false;
    try {
      ok = law.trial(rng, opts);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) report.failures.push_back({t, trial_seed});
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

namespace lawdetail {

template <class S>
bool eq(const Matrix<S>& a, const Matrix<S>& b, const LawOptions& o) {
  return equals(a, b, o.tol);
}

template <class S>
Matrix<S> rm(Rng& g, std::size_t r, std::size_t c) {
  return random_matrix<S>(g, r, c);
}

}  // namespace lawdetail

/// The named law suite. Every law draws fresh random matrices each trial;
/// dimensions are uniform in [0, max_dim] (zero extents included) and
/// thinning factors in [1, max_thinning].
template <class S>
std::vector<Law<S>> law_suite() {
  using lawdetail::eq;
  using lawdetail::rm;
  using M = Matrix<S>;
  std::vector<Law<S>> laws;
  auto law = [&](std::string name, std::function<bool(Rng&, const LawOptions&)> f) {
    laws.push_back({std::move(name), std::move(f)});
  };

  // --- composition / additive structure ---------------------------------
  law("compose-assoc", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), p = g.dim(o.max_dim),
                      q = g.dim(o.max_dim);
    const M a = rm<S>(g, m, n), b = rm<S>(g, n, p), c = rm<S>(g, p, q);
    return eq(compose(compose(a, b), c), compose(a, compose(b, c)), o);
  });
  law("compose-bilinear", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), p = g.dim(o.max_dim);
    const M a = rm<S>(g, m, n), b = rm<S>(g, n, p), c = rm<S>(g, n, p), d = rm<S>(g, p, m);
    return eq(compose(a, add(b, c)), add(compose(a, b), compose(a, c)), o) &&
           eq(compose(add(b, c), d), add(compose(b, d), compose(c, d)), o);
  });
  law("identity-and-zero-units", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), p = g.dim(o.max_dim);
    const M a = rm<S>(g, m, n);
    return eq(compose(identity<S>(m), a), a, o) && eq(compose(a, identity<S>(n)), a, o) &&
           eq(add(a, zero<S>(m, n)), a, o) && eq(compose(a, zero<S>(n, p)), zero<S>(m, p), o) &&
           eq(add(a, negate(a)), zero<S>(m, n), o);
  });
  law("transpose-involutive-contravariant", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), p = g.dim(o.max_dim);
    const M a = rm<S>(g, m, n), b = rm<S>(g, n, p);
    return eq(transpose(transpose(a)), a, o) &&
           eq(transpose(compose(a, b)), compose(transpose(b), transpose(a)), o);
  });

  // --- biproduct axioms for the four constructions ----------------------
  law("biproduct-standard", [](Rng& g, const LawOptions& o) {
    return check_biproduct(standard_biproduct<S>(g.dim(o.max_dim), g.dim(o.max_dim)), o.tol).ok();
  });
  law("biproduct-swapped", [](Rng& g, const LawOptions& o) {
    return check_biproduct(
               swap_biproduct(standard_biproduct<S>(g.dim(o.max_dim), g.dim(o.max_dim))), o.tol)
        .ok();
  });
  law("biproduct-self-cancellable", [](Rng& g, const LawOptions& o) {
    const M c = rm<S>(g, g.dim(o.max_dim), g.dim(o.max_dim));
    return check_biproduct(self_cancellable_biproduct(c), o.tol).ok();
  });
  law("biproduct-scaled", [](Rng& g, const LawOptions& o) {
    const std::size_t k = g.positive(4);
    const M c = rm<S>(g, g.dim(o.max_dim), g.dim(o.max_dim));
    return check_biproduct(
               scale_biproduct(standard_biproduct<S>(g.dim(o.max_dim), g.dim(o.max_dim)), k),
               o.tol)
               .ok() &&
           check_biproduct(scale_biproduct(self_cancellable_biproduct(c), k), o.tol).ok();
  });

  // --- junc / split algebra ---------------------------------------------
  law("junc-universal", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), r = g.dim(o.max_dim);
    const auto bp = standard_biproduct<S>(m, n);
    const M a = rm<S>(g, r, m), b = rm<S>(g, r, n);
    const M x = junc(bp, a, b);
    const bool fwd = eq(compose(x, bp.i1), a, o) && eq(compose(x, bp.i2), b, o);
    const M y = rm<S>(g, r, m + n);
    const bool bwd = eq(junc(bp, compose(y, bp.i1), compose(y, bp.i2)), y, o);
    return fwd && bwd;
  });
  law("split-universal", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), t = g.dim(o.max_dim);
    const auto bp = standard_biproduct<S>(m, n);
    const M c = rm<S>(g, m, t), d = rm<S>(g, n, t);
    const M x = split(bp, c, d);
    const bool fwd = eq(compose(bp.pi1, x), c, o) && eq(compose(bp.pi2, x), d, o);
    const M y = rm<S>(g, m + n, t);
    const bool bwd = eq(split(bp, compose(bp.pi1, y), compose(bp.pi2, y)), y, o);
    return fwd && bwd;
  });
  law("split-uniqueness", [](Rng& g, const LawOptions& o) {
    // a perturbed projection pair must be detected by some instantiation
    const std::size_t m = g.positive(o.max_dim), n = g.positive(o.max_dim);
    const auto bp = standard_biproduct<S>(m, n);
    const M d1 = rm<S>(g, m, m + n), d2 = rm<S>(g, n, m + n);
    if (equals(d1, zero<S>(m, m + n)) && equals(d2, zero<S>(n, m + n))) return true;
    const M a = add(bp.pi1, d1), b = add(bp.pi2, d2);
    auto holds_for = [&](const M& c, const M& d) {
      const M s = split(bp, c, d);
      return eq(compose(a, s), c, o) && eq(compose(b, s), d, o);
    };
    const bool all_hold = holds_for(identity<S>(m), zero<S>(n, m)) &&
                          holds_for(zero<S>(m, n), identity<S>(n));
    return !all_hold;
  });
  law("junc-fusion", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), r = g.dim(o.max_dim),
                      s = g.dim(o.max_dim);
    const M a = rm<S>(g, r, m), b = rm<S>(g, r, n), c = rm<S>(g, s, r);
    return eq(compose(c, junc(a, b)), junc(compose(c, a), compose(c, b)), o);
  });
  law("split-fusion", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), t = g.dim(o.max_dim),
                      s = g.dim(o.max_dim);
    const M a = rm<S>(g, m, t), b = rm<S>(g, n, t), c = rm<S>(g, t, s);
    return eq(compose(split(a, b), c), split(compose(a, c), compose(b, c)), o);
  });
  law("junc-cancellation", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), r = g.dim(o.max_dim);
    const auto bp = standard_biproduct<S>(m, n);
    const M a = rm<S>(g, r, m), b = rm<S>(g, r, n);
    return eq(compose(junc(a, b), bp.i1), a, o) && eq(compose(junc(a, b), bp.i2), b, o);
  });
  law("split-cancellation", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), t = g.dim(o.max_dim);
    const auto bp = standard_biproduct<S>(m, n);
    const M c = rm<S>(g, m, t), d = rm<S>(g, n, t);
    return eq(compose(bp.pi1, split(c, d)), c, o) && eq(compose(bp.pi2, split(c, d)), d, o);
  });
  law("junc-split-exchange", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), p = g.dim(o.max_dim),
                      q = g.dim(o.max_dim);
    const M a = rm<S>(g, m, p), b = rm<S>(g, m, q), c = rm<S>(g, n, p), d = rm<S>(g, n, q);
    return eq(junc(split(a, c), split(b, d)), split(junc(a, b), junc(c, d)), o) &&
           eq(block(a, b, c, d), split(junc(a, b), junc(c, d)), o);
  });
  law("blocked-addition", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), r = g.dim(o.max_dim);
    const M a = rm<S>(g, r, m), b = rm<S>(g, r, n), c = rm<S>(g, r, m), d = rm<S>(g, r, n);
    const M e = rm<S>(g, m, r), f = rm<S>(g, n, r), h = rm<S>(g, m, r), i = rm<S>(g, n, r);
    return eq(add(junc(a, b), junc(c, d)), junc(add(a, c), add(b, d)), o) &&
           eq(add(split(e, f), split(h, i)), split(add(e, h), add(f, i)), o);
  });
  law("junc-split-structural-equality", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.positive(o.max_dim), n = g.positive(o.max_dim),
                      r = g.positive(o.max_dim);
    const M a = rm<S>(g, r, m), b = rm<S>(g, r, n);
    const M delta = rm<S>(g, r, n);
    const bool same = eq(junc(a, b), junc(a, b), o);
    if (equals(delta, zero<S>(r, n))) return same;
    return same && !equals(junc(a, b), junc(a, add(b, delta)));
  });
  law("divide-and-conquer", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), r = g.dim(o.max_dim),
                      t = g.dim(o.max_dim);
    const M a = rm<S>(g, r, m), b = rm<S>(g, r, n), c = rm<S>(g, m, t), d = rm<S>(g, n, t);
    return eq(compose(junc(a, b), split(c, d)), add(compose(a, c), compose(b, d)), o);
  });
  law("junc-split-duality", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), r = g.dim(o.max_dim);
    const M a = rm<S>(g, r, m), b = rm<S>(g, r, n);
    return eq(transpose(junc(a, b)), split(transpose(a), transpose(b)), o);
  });
  law("junc-split-definitional", [](Rng& g, const LawOptions& o) {
    // fast gluing path agrees with A.pi1 + B.pi2 and i1.C + i2.D
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), r = g.dim(o.max_dim);
    const auto bp = standard_biproduct<S>(m, n);
    const M a = rm<S>(g, r, m), b = rm<S>(g, r, n);
    const M c = rm<S>(g, m, r), d = rm<S>(g, n, r);
    return eq(junc(a, b), junc(bp, a, b), o) && eq(split(c, d), split(bp, c, d), o);
  });
  law("swap-biproduct-flips", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), r = g.dim(o.max_dim);
    const auto sw = swap_biproduct(standard_biproduct<S>(m, n));
    const M a = rm<S>(g, r, n), b = rm<S>(g, r, m);
    const M c = rm<S>(g, n, r), d = rm<S>(g, m, r);
    return eq(junc(sw, a, b), junc(b, a), o) && eq(split(sw, c, d), split(d, c), o);
  });
  law("self-cancellable-combinators", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), r = g.dim(o.max_dim);
    const M c = rm<S>(g, n, m);
    const auto bp = self_cancellable_biproduct(c);
    const M a = rm<S>(g, r, m), b = rm<S>(g, r, n);
    const M s = rm<S>(g, m, r), t = rm<S>(g, n, r);
    return eq(junc(bp, a, b), junc(add(a, compose(b, c)), b), o) &&
           eq(split(bp, s, t), split(s, sub(t, compose(c, s))), o);
  });
  law("scaled-standard-is-standard", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), k = g.positive(4);
    const auto scaled = scale_biproduct(standard_biproduct<S>(m, n), k);
    const auto direct = standard_biproduct<S>(m * k, n * k);
    return eq(scaled.pi1, direct.pi1, o) && eq(scaled.pi2, direct.pi2, o) &&
           eq(scaled.i1, direct.i1, o) && eq(scaled.i2, direct.i2, o);
  });
  law("nary-junc-split", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.positive(o.max_dim), n = g.positive(o.max_dim);
    const M a = rm<S>(g, m, n);
    std::vector<M> cols, rows;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(slice(a, 0, j, m, 1));
    for (std::size_t i = 0; i < m; ++i) rows.push_back(slice(a, i, 0, 1, n));
    M right_fold_cols = cols.back();
    for (std::size_t j = cols.size() - 1; j-- > 0;) right_fold_cols = junc(cols[j], right_fold_cols);
    return eq(junc_n(cols), a, o) && eq(split_n(rows), a, o) && eq(right_fold_cols, a, o);
  });
  law("cells-recompose", [](Rng& g, const LawOptions& o) {
    const M a = rm<S>(g, g.dim(o.max_dim), g.dim(o.max_dim));
    return eq(recompose(cells(a)), a, o);
  });

  // --- Kronecker / direct sum / Khatri-Rao -------------------------------
  law("kron-assoc", [](Rng& g, const LawOptions& o) {
    const std::size_t d = std::min<std::size_t>(o.max_dim, 3);
    const M a = rm<S>(g, g.dim(d), g.dim(d)), b = rm<S>(g, g.dim(d), g.dim(d)),
            c = rm<S>(g, g.dim(d), g.dim(d));
    return eq(kron(kron(a, b), c), kron(a, kron(b, c)), o);
  });
  law("kron-bifunctor", [](Rng& g, const LawOptions& o) {
    const std::size_t d = std::min<std::size_t>(o.max_dim, 3);
    const std::size_t m = g.dim(d), n = g.dim(d), p = g.dim(d), q = g.dim(d), r = g.dim(d),
                      s = g.dim(d);
    const M a = rm<S>(g, m, n), b = rm<S>(g, p, q), c = rm<S>(g, n, r), dd = rm<S>(g, q, s);
    return eq(compose(kron(a, b), kron(c, dd)), kron(compose(a, c), compose(b, dd)), o);
  });
  law("kron-identity", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim);
    const M a = rm<S>(g, m, n);
    return eq(kron(identity<S>(m), identity<S>(n)), identity<S>(m * n), o) &&
           eq(kron(identity<S>(1), a), a, o) && eq(kron(a, identity<S>(1)), a, o);
  });
  law("kron-distributive", [](Rng& g, const LawOptions& o) {
    const std::size_t d = std::min<std::size_t>(o.max_dim, 4);
    const std::size_t m = g.dim(d), n = g.dim(d), p = g.dim(d), q = g.dim(d);
    const M a = rm<S>(g, m, n), b = rm<S>(g, p, q), c = rm<S>(g, p, q);
    return eq(kron(a, add(b, c)), add(kron(a, b), kron(a, c)), o) &&
           eq(kron(add(b, c), a), add(kron(b, a), kron(c, a)), o);
  });
  law("kron-junc-fusion", [](Rng& g, const LawOptions& o) {
    const std::size_t d = std::min<std::size_t>(o.max_dim, 4);
    const std::size_t m = g.dim(d), n = g.dim(d), r = g.dim(d), p = g.dim(d), q = g.dim(d);
    const M a = rm<S>(g, r, m), b = rm<S>(g, r, n), c = rm<S>(g, p, q);
    return eq(kron(junc(a, b), c), junc(kron(a, c), kron(b, c)), o);
  });
  law("kron-split-fusion", [](Rng& g, const LawOptions& o) {
    const std::size_t d = std::min<std::size_t>(o.max_dim, 4);
    const std::size_t m = g.dim(d), n = g.dim(d), t = g.dim(d), p = g.dim(d), q = g.dim(d);
    const M a = rm<S>(g, m, t), b = rm<S>(g, n, t), c = rm<S>(g, p, q);
    return eq(kron(split(a, b), c), split(kron(a, c), kron(b, c)), o);
  });
  law("direct-sum-absorption", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), r = g.dim(o.max_dim),
                      p = g.dim(o.max_dim), q = g.dim(o.max_dim);
    const M a = rm<S>(g, r, m), b = rm<S>(g, r, n), c = rm<S>(g, m, p), d = rm<S>(g, n, q);
    return eq(compose(junc(a, b), direct_sum(c, d)), junc(compose(a, c), compose(b, d)), o);
  });
  law("direct-sum-naturality", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim), p = g.dim(o.max_dim),
                      q = g.dim(o.max_dim);
    const M a = rm<S>(g, m, n), b = rm<S>(g, p, q);
    const auto src = standard_biproduct<S>(n, q);
    const auto dst = standard_biproduct<S>(m, p);
    const M ds = direct_sum(a, b);
    return eq(compose(ds, src.i1), compose(dst.i1, a), o) &&
           eq(compose(ds, src.i2), compose(dst.i2, b), o);
  });
  law("direct-sum-doubling", [](Rng& g, const LawOptions& o) {
    const M a = rm<S>(g, g.dim(o.max_dim), g.dim(o.max_dim));
    return eq(kron(identity<S>(2), a), direct_sum(a, a), o);
  });
  law("khatri-rao-unit", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), n = g.dim(o.max_dim);
    const M a = rm<S>(g, m, n);
    return eq(khatri_rao(bang<S>(n), a), a, o) && eq(khatri_rao(a, bang<S>(n)), a, o);
  });
  law("khatri-rao-assoc", [](Rng& g, const LawOptions& o) {
    const std::size_t d = std::min<std::size_t>(o.max_dim, 4);
    const std::size_t n = g.dim(d);
    const M a = rm<S>(g, g.dim(d), n), b = rm<S>(g, g.dim(d), n), c = rm<S>(g, g.dim(d), n);
    return eq(khatri_rao(khatri_rao(a, b), c), khatri_rao(a, khatri_rao(b, c)), o);
  });
  law("kron-via-khatri-rao", [](Rng& g, const LawOptions& o) {
    const std::size_t d = std::min<std::size_t>(o.max_dim, 4);
    const std::size_t m = g.dim(d), n = g.dim(d), p = g.dim(d), q = g.dim(d);
    const M a = rm<S>(g, m, n), b = rm<S>(g, p, q);
    auto [p1, p2] = kr_projections<S>(n, q);
    return eq(kron(a, b), khatri_rao(compose(a, p1), compose(b, p2)), o);
  });

  // --- vectorization ------------------------------------------------------
  auto thin = [](Rng& g, const LawOptions& o) { return g.positive(o.max_thinning); };
  auto small = [](Rng& g, const LawOptions& o) {
    return g.dim(std::min<std::size_t>(o.max_dim, 4));
  };

  law("vec-unvec-inverse", [=](Rng& g, const LawOptions& o) {
    const std::size_t k = thin(g, o), n = small(g, o), m = small(g, o);
    const M a = rm<S>(g, n, k * m);
    const M x = rm<S>(g, k * n, m);
    return eq(unvec_k(k, vec_k(k, a)), a, o) && eq(vec_k(k, unvec_k(k, x)), x, o) &&
           eq(vec_k(1, a), a, o);
  });
  law("vec-universal", [=](Rng& g, const LawOptions& o) {
    const std::size_t k = thin(g, o), n = small(g, o), m = small(g, o);
    const M a = rm<S>(g, n, k * m);
    const M x = vec_k(k, a);
    const M eps = epsilon<S>(k, n);
    const bool fwd = eq(a, compose(eps, kron(identity<S>(k), x)), o);
    const M y = rm<S>(g, k * n, m);
    const bool bwd = eq(vec_k(k, compose(eps, kron(identity<S>(k), y))), y, o);
    return fwd && bwd;
  });
  law("unvec-universal", [=](Rng& g, const LawOptions& o) {
    const std::size_t k = thin(g, o), n = small(g, o), m = small(g, o);
    const M a = rm<S>(g, k * n, m);
    const M x = unvec_k(k, a);
    const M et = eta<S>(k, m);
    const bool fwd = eq(a, compose(kron(identity<S>(k), x), et), o);
    const M y = rm<S>(g, n, k * m);
    const bool bwd = eq(unvec_k(k, compose(kron(identity<S>(k), y), et)), y, o);
    return fwd && bwd;
  });
  law("vec-unvec-closed-forms", [=](Rng& g, const LawOptions& o) {
    const std::size_t k = thin(g, o), n = small(g, o), m = small(g, o);
    const M a = rm<S>(g, n, k * m);
    const M x = rm<S>(g, k * n, m);
    return eq(vec_k(k, a), compose(kron(identity<S>(k), a), eta<S>(k, m)), o) &&
           eq(unvec_k(k, x), compose(epsilon<S>(k, n), kron(identity<S>(k), x)), o);
  });
  law("vec-reflection", [=](Rng& g, const LawOptions& o) {
    const std::size_t k = thin(g, o), n = small(g, o);
    return eq(vec_k(k, epsilon<S>(k, n)), identity<S>(k * n), o);
  });
  law("eps-cancellation", [=](Rng& g, const LawOptions& o) {
    const std::size_t k = thin(g, o), n = small(g, o), m = small(g, o);
    const M a = rm<S>(g, n, k * m);
    return eq(a, compose(epsilon<S>(k, n), kron(identity<S>(k), vec_k(k, a))), o);
  });
  law("eps-is-unvec-of-id", [=](Rng& g, const LawOptions& o) {
    const std::size_t k = thin(g, o), m = small(g, o);
    return eq(epsilon<S>(k, m), unvec_k(k, identity<S>(k * m)), o);
  });
  law("eps-kron-id", [=](Rng& g, const LawOptions& o) {
    const std::size_t k = thin(g, o), n = small(g, o), j = g.positive(4);
    return eq(kron(epsilon<S>(k, n), identity<S>(j)), epsilon<S>(k, n * j), o);
  });
  law("eta-duality", [=](Rng& g, const LawOptions& o) {
    const std::size_t k = thin(g, o), m = small(g, o);
    return eq(eta<S>(k, m), transpose(epsilon<S>(k, m)), o) &&
           eq(eta<S>(k, m), vec_k(k, identity<S>(k * m)), o);
  });
  law("eta-cancellation", [=](Rng& g, const LawOptions& o) {
    const std::size_t k = thin(g, o), n = small(g, o), m = small(g, o);
    const M a = rm<S>(g, k * n, m);
    return eq(a, compose(kron(identity<S>(k), unvec_k(k, a)), eta<S>(k, m)), o);
  });
  law("vec-linearity", [=](Rng& g, const LawOptions& o) {
    const std::size_t k = thin(g, o), n = small(g, o), m = small(g, o);
    const M a = rm<S>(g, n, k * m), b = rm<S>(g, n, k * m);
    return eq(vec_k(k, add(a, b)), add(vec_k(k, a), vec_k(k, b)), o);
  });
  law("roth", [=](Rng& g, const LawOptions& o) {
    const std::size_t j = small(g, o), n = small(g, o), k = g.positive(o.max_dim),
                      m = g.positive(o.max_dim);
    const M a = rm<S>(g, j, n), b = rm<S>(g, n, k), c = rm<S>(g, k, m);
    return eq(vec_k(m, compose(compose(a, b), c)),
              compose(kron(transpose(c), a), vec_k(k, b)), o);
  });
  law("vec-of-composition-left", [=](Rng& g, const LawOptions& o) {
    const std::size_t k = thin(g, o), j = small(g, o), n = small(g, o), m = small(g, o);
    const M b = rm<S>(g, j, n), c = rm<S>(g, n, k * m);
    return eq(vec_k(k, compose(b, c)), compose(kron(identity<S>(k), b), vec_k(k, c)), o);
  });
  law("vec-of-composition-right", [=](Rng& g, const LawOptions& o) {
    const std::size_t n = small(g, o), k = g.positive(o.max_dim), m = g.positive(o.max_dim);
    const M c = rm<S>(g, n, k), b = rm<S>(g, k, m);
    return eq(vec_k(m, compose(c, b)),
              compose(kron(transpose(b), identity<S>(n)), vec_k(k, c)), o);
  });
  law("vec-blocked-transposition", [=](Rng& g, const LawOptions& o) {
    const std::size_t k = thin(g, o), k2 = thin(g, o), n = small(g, o), m = small(g, o);
    const M a = rm<S>(g, n, k * m), b = rm<S>(g, n, k2 * m);
    return eq(vec_k(k + k2, junc(a, b)), split(vec_k(k, a), vec_k(k2, b)), o);
  });
  law("vec-converse-duality", [=](Rng& g, const LawOptions& o) {
    const std::size_t k = thin(g, o), n = small(g, o), m = small(g, o);
    const M a = rm<S>(g, n, k * m);
    return eq(transpose(vec_k(k, a)), unvec_k(k, transpose(a)), o);
  });
  law("vec-row-major", [=](Rng& g, const LawOptions& o) {
    const std::size_t m = g.positive(o.max_dim), k = g.positive(o.max_dim);
    const M a = rm<S>(g, m, k);
    return eq(vec_k(m, transpose(a)), compose(kron(a, identity<S>(k)), eta<S>(k, 1)), o);
  });
  law("vec-of-row-is-transpose", [=](Rng& g, const LawOptions& o) {
    const std::size_t m = g.positive(o.max_dim);
    const M a = rm<S>(g, 1, m);
    return eq(vec_k(m, a), transpose(a), o);
  });
  law("commutation-transposes", [=](Rng& g, const LawOptions& o) {
    const std::size_t n = g.positive(o.max_dim), m = g.positive(o.max_dim);
    const M a = rm<S>(g, n, m);
    return eq(compose(commutation<S>(n, m), vec_k(m, a)), vec_k(n, transpose(a)), o);
  });
  law("commutation-naturality", [=](Rng& g, const LawOptions& o) {
    // (B (x) A) . K_ts = K_nm . (A (x) B) for A of shape m x s, B of n x t
    const std::size_t d = std::min<std::size_t>(o.max_dim, 4);
    const std::size_t n = g.positive(d), s = g.positive(d), m = g.positive(d),
                      t = g.positive(d);
    const M a = rm<S>(g, m, s), b = rm<S>(g, n, t);
    return eq(compose(kron(b, a), commutation<S>(t, s)),
              compose(commutation<S>(n, m), kron(a, b)), o);
  });
  law("commutation-fixes-eta", [=](Rng& g, const LawOptions& o) {
    const std::size_t n = g.positive(o.max_dim);
    return eq(compose(commutation<S>(n, n), eta<S>(n, 1)), eta<S>(n, 1), o);
  });
  law("commutation-encodings-agree", [=](Rng& g, const LawOptions& o) {
    const std::size_t n = g.positive(o.max_thinning), m = g.positive(o.max_thinning);
    const M closed = commutation<S>(n, m);
    return eq(closed, commutation_factored<S>(n, m), o) &&
           eq(closed, commutation_sum<S>(n, m), o);
  });
  law("transpose-via-vec", [](Rng& g, const LawOptions& o) {
    const M a = rm<S>(g, g.dim(o.max_dim), g.dim(o.max_dim));
    return eq(transpose_via_vec(a), transpose(a), o);
  });
  law("vec-mmm", [=](Rng& g, const LawOptions& o) {
    const std::size_t j = small(g, o), n = g.positive(o.max_dim), k = g.positive(o.max_dim);
    const M b = rm<S>(g, j, n), c = rm<S>(g, n, k);
    const M vbc = vec_mmm(n, vec_k(n, b), vec_k(k, c));
    return eq(unvec_k(k, vbc), compose(b, c), o);
  });
  law("mu-monad-units", [](Rng& g, const LawOptions& o) {
    const std::size_t k = g.positive(2), n = g.positive(2);
    const M m = mu<S>(k, n);
    const M unit_at_tn = eta<S>(k, k * k * n);           // eta at the image object
    const M lifted_unit = kron(identity<S>(k * k), eta<S>(k, n));
    return eq(compose(m, unit_at_tn), identity<S>(k * k * n), o) &&
           eq(compose(m, lifted_unit), identity<S>(k * k * n), o);
  });

  // --- blocked algorithms -------------------------------------------------
  law("mmm-algorithms-agree", [](Rng& g, const LawOptions& o) {
    const std::size_t m = g.dim(o.max_dim), k = g.dim(o.max_dim), n = g.dim(o.max_dim);
    const M a = rm<S>(g, m, k), b = rm<S>(g, k, n);
    const M want = compose(a, b);
    return eq(mmm_dc(a, b), want, o) && eq(mmm_naive(a, b, LoopOrder::jkl), want, o) &&
           eq(mmm_naive(a, b, LoopOrder::kjl), want, o) &&
           eq(mmm_naive(a, b, LoopOrder::jlk), want, o);
  });
  law("blockwise-mmm", [](Rng& g, const LawOptions& o) {
    const std::size_t m1 = g.dim(o.max_dim), m2 = g.dim(o.max_dim), k1 = g.dim(o.max_dim),
                      k2 = g.dim(o.max_dim), n1 = g.dim(o.max_dim), n2 = g.dim(o.max_dim);
    const M r = rm<S>(g, m1, k1), s = rm<S>(g, m1, k2), t = rm<S>(g, m2, k1),
            u = rm<S>(g, m2, k2);
    const M a = rm<S>(g, k1, n1), b = rm<S>(g, k1, n2), c = rm<S>(g, k2, n1),
            d = rm<S>(g, k2, n2);
    const auto blocks = mmm_blocked_2x2(r, s, t, u, a, b, c, d);
    const M recomposed = block(blocks.tl, blocks.tr, blocks.bl, blocks.br);
    return eq(recomposed, compose(block(r, s, t, u), block(a, b, c, d)), o);
  });
  law("gauss-transform", [](Rng& g, const LawOptions& o) {
    const std::size_t n = g.dim(o.max_dim), c = g.dim(o.max_dim);
    const S alpha = random_scalar<S>(g);
    const M a = rm<S>(g, n, c), b = rm<S>(g, n, c);
    const M t = gauss_t(alpha, a, b);
    const M elementary = block(identity<S>(n), zero<S>(n, n),
                               scale(alpha, identity<S>(n)), identity<S>(n));
    const M minus_alpha_id = scale(S(-1) * alpha, identity<S>(n));
    return eq(t, split(a, add(scale(alpha, a), b)), o) &&
           eq(t, compose(elementary, split(a, b)), o) &&
           eq(t, split(self_cancellable_biproduct(minus_alpha_id), a, b), o);
  });

  return laws;
}

template <class S>
std::vector<LawReport> run_law_suite(std::size_t trials, std::uint64_t seed,
                                     const LawOptions& opts = {}) {
  std::vector<LawReport> reports;
  for (const auto& law : law_suite<S>()) reports.push_back(run_law(law, trials, seed, opts));
  return reports;
}

}  // namespace lat

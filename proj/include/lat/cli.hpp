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

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lat/blocked.hpp"
#include "lat/eval.hpp"
#include "lat/infer.hpp"
#include "lat/io.hpp"
#include "lat/laws.hpp"
#include "lat/parse.hpp"
#include "lat/vectorize.hpp"

namespace lat {
namespace cli {

// Exit codes: 0 success, 1 domain error, 2 parse error, 3 I/O error.

namespace detail {

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void emit_result(const Matrix<Rational>& m, const std::optional<std::string>& out_path,
                        std::ostream& out) {
  if (out_path)
    write_matrix_file(*out_path, m);
  else
    write_matrix(out, m);
}

struct LoadedEnv {
  TypeEnv types;
  MatrixEnv<Rational> matrices;
};

inline LoadedEnv load_env(const std::string& path, bool need_matrices) {
  LoadedEnv env;
  for (const auto& entry : parse_env_file(path)) {
    env.types[entry.name] = ArrowType{entry.rows.dim(), entry.cols.dim()};
    if (entry.matrix_path) {
      Matrix<Rational> m = read_matrix_file<Rational>(*entry.matrix_path);
      if (!entry.rows.is_var && entry.rows.value != m.rows())
        throw ShapeMismatch("env '" + entry.name + "'",
                            Shape{entry.rows.value, entry.cols.is_var ? m.cols() : entry.cols.value},
                            m.shape());
      if (!entry.cols.is_var && entry.cols.value != m.cols())
        throw ShapeMismatch("env '" + entry.name + "'",
                            Shape{entry.rows.is_var ? m.rows() : entry.rows.value, entry.cols.value},
                            m.shape());
      // matrices pin symbolic dims to their actual extents
      env.types[entry.name] = ArrowType{Dim::constant(m.rows()), Dim::constant(m.cols())};
      env.matrices.emplace(entry.name, std::move(m));
    } else if (need_matrices) {
      throw Error("binding '" + entry.name + "' has no matrix file; cannot evaluate");
    }
  }
  return env;
}

inline int report_type_errors(const InferResult& r, std::ostream& err) {
  for (const auto& e : r.errors) {
    const char* kind = e.kind == TypeErrorInfo::Kind::Unresolved ? "unresolved" : "type error";
    err << kind << ": " << e.message << " (at " << e.origin.begin << ".." << e.origin.end
        << ")\n";
  }
  return 1;
}

template <class S>
int run_laws(std::size_t trials, std::uint64_t seed, const LawOptions& opts, std::ostream& out) {
  bool all_ok = true;
  std::size_t count = 0;
  for (const auto& law : law_suite<S>()) {
    const LawReport rep = run_law(law, trials, seed, opts);
    ++count;
    out << (rep.passed() ? "PASS " : "FAIL ") << std::left << std::setw(36) << rep.name
        << " trials=" << rep.trials << "  " << std::fixed << std::setprecision(3)
        << rep.elapsed_seconds << "s";
    if (!rep.passed()) {
      out << "  failures=" << rep.failures.size() << " (first seed " << rep.failures[0].seed
          << ")";
      all_ok = false;
    }
    out << "\n";
  }
  out << (all_ok ? "all " : "FAILED: some of ") << count << " laws "
      << (all_ok ? "passed" : "failed") << " (scalar=" << scalar_traits<S>::name()
      << ", trials=" << trials << ", max-dim=" << opts.max_dim << ")\n";
  return all_ok ? 0 : 1;
}

}  // namespace detail

/// Entry point shared by the `lat` binary and the test suite.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"typed linear-algebra kernel: biproducts, blocked algorithms, vectorization"};
  app.name("lat");
  app.require_subcommand(1);

  // --- typecheck / eval ---
  std::string expr_file, env_file;
  auto* typecheck = app.add_subcommand("typecheck", "infer the principal type of an expression");
  typecheck->add_option("expr", expr_file, "file holding one expression")->required();
  typecheck->add_option("--env", env_file, "environment file: name rows cols [matrix-file]")
      ->required();

  auto* eval_cmd = app.add_subcommand("eval", "typecheck and evaluate an expression");
  std::optional<std::string> eval_out;
  eval_cmd->add_option("expr", expr_file, "file holding one expression")->required();
  eval_cmd->add_option("--env", env_file, "environment file with matrix bindings")->required();
  eval_cmd->add_option("-o,--output", eval_out, "write the result matrix here");

  // --- laws ---
  auto* laws_cmd = app.add_subcommand("laws", "run the named randomized law suite");
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  LawOptions law_opts;
  std::string scalar_kind = "rational";
  laws_cmd->add_option("--trials", trials, "trials per law")->check(CLI::PositiveNumber);
  laws_cmd->add_option("--seed", seed, "suite seed");
  laws_cmd->add_option("--max-dim", law_opts.max_dim, "largest random dimension");
  laws_cmd->add_option("--scalar", scalar_kind, "rational | f64")
      ->check(CLI::IsMember({"rational", "f64"}));
  laws_cmd->add_option("--tol", law_opts.tol, "absolute tolerance for f64 equality");

  // --- mmm ---
  auto* mmm_cmd = app.add_subcommand("mmm", "multiply two matrix files, cross-checked");
  std::string algo = "dc", file_a, file_b;
  std::optional<std::string> mmm_out;
  mmm_cmd->add_option("--algo", algo, "dc | naive | blocked | vec")
      ->check(CLI::IsMember({"dc", "naive", "blocked", "vec"}));
  mmm_cmd->add_option("A", file_a, "left operand file")->required();
  mmm_cmd->add_option("B", file_b, "right operand file")->required();
  mmm_cmd->add_option("-o,--output", mmm_out, "write the product here");

  // --- gje ---
  auto* gje_cmd = app.add_subcommand("gje", "Gauss-Jordan elimination to row-echelon form");
  std::string gje_file;
  bool with_witness = false;
  gje_cmd->add_option("M", gje_file, "matrix file")->required();
  gje_cmd->add_flag("--witness", with_witness, "also print the invertible witness");

  // --- emit ---
  auto* emit_cmd = app.add_subcommand("emit", "write a standard matrix (eps | eta | K)");
  std::string which;
  std::size_t p1 = 1, p2 = 1;
  std::string method = "closed";
  std::optional<std::string> emit_out;
  emit_cmd->add_option("which", which, "eps | eta | K")
      ->required()
      ->check(CLI::IsMember({"eps", "eta", "K"}));
  emit_cmd->add_option("a", p1, "first parameter")->required();
  emit_cmd->add_option("b", p2, "second parameter")->required();
  emit_cmd->add_option("--method", method, "K only: closed | factored | sum")
      ->check(CLI::IsMember({"closed", "factored", "sum"}));
  emit_cmd->add_option("-o,--output", emit_out, "write the matrix here");

  // --- commutation ---
  auto* comm_cmd = app.add_subcommand("commutation", "emit the commutation matrix K_nm");
  comm_cmd->add_option("n", p1, "n")->required();
  comm_cmd->add_option("m", p2, "m")->required();
  comm_cmd->add_option("--method", method, "closed | factored | sum")
      ->check(CLI::IsMember({"closed", "factored", "sum"}));
  comm_cmd->add_option("-o,--output", emit_out, "write the matrix here");

  // --- vec / unvec / vecmmm ---
  auto* vec_cmd = app.add_subcommand("vec", "column-major vectorization with thinning factor k");
  auto* unvec_cmd = app.add_subcommand("unvec", "inverse of vec");
  std::size_t thin = 1;
  std::string vec_file;
  std::optional<std::string> vec_out;
  for (auto* c : {vec_cmd, unvec_cmd}) {
    c->add_option("k", thin, "thinning factor")->required();
    c->add_option("M", vec_file, "matrix file")->required();
    c->add_option("-o,--output", vec_out, "write the result here");
  }
  auto* vecmmm_cmd = app.add_subcommand("vecmmm", "multiply two vectorized matrices");
  std::size_t shared_n = 1;
  std::string file_vb, file_vc;
  vecmmm_cmd->add_option("n", shared_n, "shared inner dimension")->required();
  vecmmm_cmd->add_option("vB", file_vb, "vec of the left factor")->required();
  vecmmm_cmd->add_option("vC", file_vc, "vec of the right factor")->required();
  vecmmm_cmd->add_option("-o,--output", vec_out, "write the result here");

  // --- check-biproduct ---
  auto* check_cmd = app.add_subcommand("check-biproduct", "verify the biproduct identities");
  std::string f_pi1, f_pi2, f_i1, f_i2;
  check_cmd->add_option("pi1", f_pi1)->required();
  check_cmd->add_option("pi2", f_pi2)->required();
  check_cmd->add_option("i1", f_i1)->required();
  check_cmd->add_option("i2", f_i2)->required();

  std::vector<const char*> argv;
  argv.push_back("lat");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*typecheck || *eval_cmd) {
      const std::string text = detail::read_text_file(expr_file);
      const Expr expr = parse_expr(text);
      if (*typecheck) {
        const detail::LoadedEnv env = detail::load_env(env_file, false);
        const InferResult r = infer_type(expr, env.types);
        if (!r.ok()) return detail::report_type_errors(r, err);
        out << "type: " << r.type->str() << "\n";
        return 0;
      }
      const detail::LoadedEnv env = detail::load_env(env_file, true);
      const InferResult r = infer_type(expr, type_env_of(env.matrices));
      if (!r.ok()) return detail::report_type_errors(r, err);
      detail::emit_result(eval_expr(expr, env.matrices), eval_out, out);
      return 0;
    }
    if (*laws_cmd) {
      if (scalar_kind == "f64") return detail::run_laws<double>(trials, seed, law_opts, out);
      return detail::run_laws<Rational>(trials, seed, law_opts, out);
    }
    if (*mmm_cmd) {
      const auto a = read_matrix_file<Rational>(file_a);
      const auto b = read_matrix_file<Rational>(file_b);
      Matrix<Rational> product = zero<Rational>(a.rows(), b.cols());
      if (algo == "dc") {
        product = mmm_dc(a, b);
      } else if (algo == "naive") {
        product = mmm_naive(a, b);
      } else if (algo == "blocked") {
        if (a.cols() != b.rows()) throw ShapeMismatch("mmm", a.shape(), b.shape());
        const std::size_t m1 = (a.rows() + 1) / 2, k1 = (a.cols() + 1) / 2,
                          n1 = (b.cols() + 1) / 2;
        const auto blocks = mmm_blocked_2x2(
            slice(a, 0, 0, m1, k1), slice(a, 0, k1, m1, a.cols() - k1),
            slice(a, m1, 0, a.rows() - m1, k1), slice(a, m1, k1, a.rows() - m1, a.cols() - k1),
            slice(b, 0, 0, k1, n1), slice(b, 0, n1, k1, b.cols() - n1),
            slice(b, k1, 0, b.rows() - k1, n1), slice(b, k1, n1, b.rows() - k1, b.cols() - n1));
        product = block(blocks.tl, blocks.tr, blocks.bl, blocks.br);
      } else {  // vec
        if (a.cols() != b.rows()) throw ShapeMismatch("mmm", a.shape(), b.shape());
        const std::size_t n = a.cols(), k = b.cols();
        if (n == 0) throw LengthFactor();
        product = unvec_k(k, vec_mmm(n, vec_k(n, a), vec_k(k, b)));
      }
      detail::emit_result(product, mmm_out, out);
      out << (equals(product, compose(a, b)) ? "oracle: agrees with compose\n"
                                             : "oracle: DISAGREES with compose\n");
      return equals(product, compose(a, b)) ? 0 : 1;
    }
    if (*gje_cmd) {
      const auto m = read_matrix_file<Rational>(gje_file);
      const GjeResult<Rational> res = gje(m);
      write_matrix(out, res.result);
      if (with_witness) {
        out << "\n";
        write_matrix(out, res.witness);
        out << (equals(res.result, compose(res.witness, m))
                    ? "witness: result = witness . input\n"
                    : "witness: MISMATCH\n");
      }
      return 0;
    }
    if (*emit_cmd || *comm_cmd) {
      Matrix<Rational> m;
      if (*comm_cmd) which = "K";
      if (which == "eps") {
        m = epsilon<Rational>(p1, p2);
      } else if (which == "eta") {
        m = eta<Rational>(p1, p2);
      } else if (method == "factored") {
        m = commutation_factored<Rational>(p1, p2);
      } else if (method == "sum") {
        m = commutation_sum<Rational>(p1, p2);
      } else {
        m = commutation<Rational>(p1, p2);
      }
      detail::emit_result(m, emit_out, out);
      return 0;
    }
    if (*vec_cmd || *unvec_cmd) {
      const auto m = read_matrix_file<Rational>(vec_file);
      detail::emit_result(*vec_cmd ? vec_k(thin, m) : unvec_k(thin, m), vec_out, out);
      return 0;
    }
    if (*vecmmm_cmd) {
      const auto vb = read_matrix_file<Rational>(file_vb);
      const auto vc = read_matrix_file<Rational>(file_vc);
      detail::emit_result(vec_mmm(shared_n, vb, vc), vec_out, out);
      return 0;
    }
    if (*check_cmd) {
      Biproduct<Rational> bp;
      bp.pi1 = read_matrix_file<Rational>(f_pi1);
      bp.pi2 = read_matrix_file<Rational>(f_pi2);
      bp.i1 = read_matrix_file<Rational>(f_i1);
      bp.i2 = read_matrix_file<Rational>(f_i2);
      bp.m = bp.pi1.rows();
      bp.n = bp.pi2.rows();
      const auto report = check_biproduct(bp);
      for (const auto& item : report.items) {
        out << (item.pass ? "ok   " : "FAIL ") << item.name << "\n";
        if (!item.pass) {
          out << "  evaluated to:\n";
          write_matrix(out, item.got);
        }
      }
      return report.ok() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cli
}  // namespace lat

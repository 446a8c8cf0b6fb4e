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

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lat/expr.hpp"
#include "lat/matrix.hpp"

namespace lat {

// Matrix text format: a header line "rows cols", then `rows` lines of
// `cols` whitespace-separated entries. An entry is an integer, a decimal or
// a rational p/q. Empty matrices are just the header line.

template <class S>
Matrix<S> read_matrix(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw ParseError("expected matrix header 'rows cols'", 0);
  std::vector<S> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    std::string tok;
    if (!(in >> tok)) throw ParseError("matrix body ends early (entry " + std::to_string(i) + ")", i);
    entries.push_back(scalar_traits<S>::parse(tok, i));
  }
  return Matrix<S>(rows, cols, std::move(entries));
}

template <class S>
Matrix<S> read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_matrix<S>(in);
}

template <class S>
void write_matrix(std::ostream& out, const Matrix<S>& m) {
  out << m;
}

template <class S>
void write_matrix_file(const std::string& path, const Matrix<S>& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_matrix(out, m);
}

/// One binding of the expression environment: `name rows cols [path]`.
/// Rows/cols are naturals, dimension-variable names, or `?` for a fresh
/// anonymous dimension variable; `path` points at a matrix file for
/// evaluation.
struct EnvEntry {
  std::string name;
  DimArg rows, cols;
  std::optional<std::string> matrix_path;
};

inline std::vector<EnvEntry> parse_env_text(std::istream& in) {
  std::vector<EnvEntry> out;
  std::string line;
  std::size_t fresh = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name) || name.front() == '#') continue;
    auto dim_tok = [&]() -> DimArg {
      std::string tok;
      if (!(ls >> tok)) throw ParseError("environment line needs 'name rows cols'", 0);
      if (tok == "?") return DimArg::var("_env" + std::to_string(++fresh));
      if (std::isdigit(static_cast<unsigned char>(tok.front())))
        return DimArg::lit(std::stoull(tok));
      return DimArg::var(tok);
    };
    EnvEntry e;
    e.name = name;
    e.rows = dim_tok();
    e.cols = dim_tok();
    std::string path;
    if (ls >> path) e.matrix_path = path;
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<EnvEntry> parse_env_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_env_text(in);
}

}  // namespace lat

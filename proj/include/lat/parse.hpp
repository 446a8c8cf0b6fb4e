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

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lat/error.hpp"
#include "lat/expr.hpp"

namespace lat {

// Surface grammar (loosest to tightest):
//
//   expr   := sum ( "(+)" sum )*
//   sum    := mul ( "+" mul )*
//   mul    := comp ( ("x" | ".*" | "fork") comp )*
//   comp   := factor ( "." factor )*
//   factor := atom "^T"?
//   atom   := ident | "id" d | "zero" d d | "bang" d
//           | "eps" d d | "eta" d d | "K" d d
//           | "vec" d atom | "unvec" d atom
//           | "[" expr "|" expr "]" | "[" expr ";" expr "]" | "(" expr ")"
//   d      := nat | ident
//
// Unary/prefix forms bind tighter than binary ones, and composition "."
// binds tighter than the other multiplicative operators.

namespace detail {

enum class Tok {
  Ident,
  Nat,
  Dot,
  Plus,
  DSum,
  Had,
  Trans,
  LBrack,
  RBrack,
  Pipe,
  Semi,
  LParen,
  RParen,
  KwId,
  KwZero,
  KwBang,
  KwEps,
  KwEta,
  KwComm,
  KwVec,
  KwUnvec,
  KwFork,
  KwKron,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t begin = 0, end = 0;
  std::uint64_t nat = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { tokenize(); }
  const std::vector<Token>& tokens() const { return toks_; }

 private:
  void tokenize() {
    std::size_t i = 0;
    while (i < src_.size()) {
      const char c = src_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::uint64_t v = 0;
        while (i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]))) {
          v = v * 10 + static_cast<std::uint64_t>(src_[i] - '0');
          ++i;
        }
        push(Tok::Nat, start, i, v);
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (i < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[i])) || src_[i] == '_'))
          ++i;
        const std::string_view word = src_.substr(start, i - start);
        push(keyword(word), start, i);
        continue;
      }
      switch (c) {
        case '.':
          if (i + 1 < src_.size() && src_[i + 1] == '*') {
            i += 2;
            push(Tok::Had, start, i);
          } else {
            ++i;
            push(Tok::Dot, start, i);
          }
          break;
        case '+':
          ++i;
          push(Tok::Plus, start, i);
          break;
        case '^':
          if (i + 1 < src_.size() && src_[i + 1] == 'T') {
            i += 2;
            push(Tok::Trans, start, i);
          } else {
            throw ParseError("expected '^T'", start);
          }
          break;
        case '(':
          if (i + 2 < src_.size() && src_[i + 1] == '+' && src_[i + 2] == ')') {
            i += 3;
            push(Tok::DSum, start, i);
          } else {
            ++i;
            push(Tok::LParen, start, i);
          }
          break;
        case ')':
          ++i;
          push(Tok::RParen, start, i);
          break;
        case '[':
          ++i;
          push(Tok::LBrack, start, i);
          break;
        case ']':
          ++i;
          push(Tok::RBrack, start, i);
          break;
        case '|':
          ++i;
          push(Tok::Pipe, start, i);
          break;
        case ';':
          ++i;
          push(Tok::Semi, start, i);
          break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
    }
    push(Tok::End, src_.size(), src_.size());
  }

  static Tok keyword(std::string_view w) {
    if (w == "id") return Tok::KwId;
    if (w == "zero") return Tok::KwZero;
    if (w == "bang") return Tok::KwBang;
    if (w == "eps") return Tok::KwEps;
    if (w == "eta") return Tok::KwEta;
    if (w == "K") return Tok::KwComm;
    if (w == "vec") return Tok::KwVec;
    if (w == "unvec") return Tok::KwUnvec;
    if (w == "fork") return Tok::KwFork;
    if (w == "x") return Tok::KwKron;
    return Tok::Ident;
  }

  void push(Tok kind, std::size_t b, std::size_t e, std::uint64_t v = 0) {
    toks_.push_back(Token{kind, std::string(src_.substr(b, e - b)), b, e, v});
  }

  std::string_view src_;
  std::vector<Token> toks_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  Expr parse() {
    Expr e = parse_dsum();
    expect(Tok::End, "trailing input");
    return e;
  }

 private:
  const Token& peek() const { return lex_.tokens()[pos_]; }
  Token next() { return lex_.tokens()[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().begin);
  }

  static Expr binary(ExprKind kind, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = kind;
    e.span = {lhs.span.begin, rhs.span.end};
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  Expr parse_dsum() {
    Expr e = parse_sum();
    while (accept(Tok::DSum)) e = binary(ExprKind::DirectSum, std::move(e), parse_sum());
    return e;
  }

  Expr parse_sum() {
    Expr e = parse_mul();
    while (accept(Tok::Plus)) e = binary(ExprKind::Add, std::move(e), parse_mul());
    return e;
  }

  Expr parse_mul() {
    Expr e = parse_comp();
    for (;;) {
      if (accept(Tok::KwKron))
        e = binary(ExprKind::Kron, std::move(e), parse_comp());
      else if (accept(Tok::Had))
        e = binary(ExprKind::Hadamard, std::move(e), parse_comp());
      else if (accept(Tok::KwFork))
        e = binary(ExprKind::KhatriRao, std::move(e), parse_comp());
      else
        return e;
    }
  }

  Expr parse_comp() {
    Expr e = parse_factor();
    while (accept(Tok::Dot)) e = binary(ExprKind::Compose, std::move(e), parse_factor());
    return e;
  }

  Expr parse_factor() {
    Expr e = parse_atom();
    while (peek().kind == Tok::Trans) {
      const Token t = next();
      Expr w;
      w.kind = ExprKind::Transpose;
      w.span = {e.span.begin, t.end};
      w.children.push_back(std::move(e));
      e = std::move(w);
    }
    return e;
  }

  DimArg parse_dim_arg() {
    if (peek().kind == Tok::Nat) {
      return DimArg::lit(next().nat);
    }
    if (peek().kind == Tok::Ident) {
      return DimArg::var(next().text);
    }
    throw ParseError("expected a dimension (number or variable)", peek().begin);
  }

  Expr parse_atom() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        next();
        Expr e;
        e.kind = ExprKind::Var;
        e.name = t.text;
        e.span = {t.begin, t.end};
        return e;
      }
      case Tok::KwId:
        return generator(ExprKind::Id, 1);
      case Tok::KwZero:
        return generator(ExprKind::Zero, 2);
      case Tok::KwBang:
        return generator(ExprKind::Bang, 1);
      case Tok::KwEps:
        return generator(ExprKind::Eps, 2);
      case Tok::KwEta:
        return generator(ExprKind::Eta, 2);
      case Tok::KwComm:
        return generator(ExprKind::Comm, 2);
      case Tok::KwVec:
      case Tok::KwUnvec: {
        next();
        Expr e;
        e.kind = t.kind == Tok::KwVec ? ExprKind::Vec : ExprKind::Unvec;
        e.dims.push_back(parse_dim_arg());
        e.children.push_back(parse_atom());
        e.span = {t.begin, e.children[0].span.end};
        return e;
      }
      case Tok::LBrack: {
        next();
        Expr lhs = parse_dsum();
        Expr e;
        if (accept(Tok::Pipe))
          e.kind = ExprKind::Junc;
        else if (accept(Tok::Semi))
          e.kind = ExprKind::Split;
        else
          throw ParseError("expected '|' or ';' inside brackets", peek().begin);
        Expr rhs = parse_dsum();
        const Token close = peek();
        expect(Tok::RBrack, "']'");
        e.span = {t.begin, close.end};
        e.children.push_back(std::move(lhs));
        e.children.push_back(std::move(rhs));
        return e;
      }
      case Tok::LParen: {
        next();
        Expr e = parse_dsum();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        throw ParseError("expected an expression", t.begin);
    }
  }

  Expr generator(ExprKind kind, int arity) {
    const Token t = next();
    Expr e;
    e.kind = kind;
    e.span = {t.begin, t.end};
    for (int i = 0; i < arity; ++i) e.dims.push_back(parse_dim_arg());
    return e;
  }

  Lexer lex_;
  std::size_t pos_ = 0;
};

inline int precedence(ExprKind k) {
  switch (k) {
    case ExprKind::DirectSum:
      return 0;
    case ExprKind::Add:
      return 1;
    case ExprKind::Kron:
    case ExprKind::Hadamard:
    case ExprKind::KhatriRao:
      return 2;
    case ExprKind::Compose:
      return 3;
    case ExprKind::Transpose:
      return 4;
    default:
      return 5;
  }
}

inline void pretty_rec(const Expr& e, int parent, std::string& out) {
  const int prec = precedence(e.kind);
  const bool parens = prec < parent;
  if (parens) out += "(";
  auto bin = [&](const char* op) {
    pretty_rec(e.children[0], prec, out);
    out += op;
    pretty_rec(e.children[1], prec + 1, out);
  };
  switch (e.kind) {
    case ExprKind::Var:
      out += e.name;
      break;
    case ExprKind::Id:
      out += "id " + e.dims[0].str();
      break;
    case ExprKind::Zero:
      out += "zero " + e.dims[0].str() + " " + e.dims[1].str();
      break;
    case ExprKind::Bang:
      out += "bang " + e.dims[0].str();
      break;
    case ExprKind::Eps:
      out += "eps " + e.dims[0].str() + " " + e.dims[1].str();
      break;
    case ExprKind::Eta:
      out += "eta " + e.dims[0].str() + " " + e.dims[1].str();
      break;
    case ExprKind::Comm:
      out += "K " + e.dims[0].str() + " " + e.dims[1].str();
      break;
    case ExprKind::Vec:
    case ExprKind::Unvec:
      out += e.kind == ExprKind::Vec ? "vec " : "unvec ";
      out += e.dims[0].str() + " ";
      pretty_rec(e.children[0], 5, out);
      break;
    case ExprKind::Transpose:
      pretty_rec(e.children[0], 5, out);
      out += "^T";
      break;
    case ExprKind::Compose:
      bin(" . ");
      break;
    case ExprKind::Add:
      bin(" + ");
      break;
    case ExprKind::Kron:
      bin(" x ");
      break;
    case ExprKind::DirectSum:
      bin(" (+) ");
      break;
    case ExprKind::Hadamard:
      bin(" .* ");
      break;
    case ExprKind::KhatriRao:
      bin(" fork ");
      break;
    case ExprKind::Junc:
    case ExprKind::Split:
      out += "[";
      pretty_rec(e.children[0], 0, out);
      out += e.kind == ExprKind::Junc ? " | " : " ; ";
      pretty_rec(e.children[1], 0, out);
      out += "]";
      break;
  }
  if (parens) out += ")";
}

}  // namespace detail

inline Expr parse_expr(std::string_view text) { return detail::Parser(text).parse(); }

/// Renders an AST back to surface syntax; parsing the result yields the same
/// tree (modulo spans).
inline std::string pretty(const Expr& e) {
  std::string out;
  detail::pretty_rec(e, 0, out);
  return out;
}

}  // namespace lat

// Copyright 2026 The iflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/parser.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <utility>
#include <vector>

#include "core/active_set.hpp"
#include "core/error.hpp"

namespace iflow {

namespace {

struct Token {
  enum class Kind { Ident, Int, String, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

// Multi-character punctuation first so that the longest match wins.
constexpr std::string_view kPunct[] = {
    ":=", "==", "!=", "<=", ">=", "&&", "||", "\\/", "/\\", "+", "-", "*",
    "%",  "<",  ">",  "(",  ")",  "{",  "}",  "[",   "]",   ";", ":", "?",
    "=",  ",",
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_' || src[j] == kCopySeparator)) {
        ++j;
      }
      tok.kind = Token::Kind::Ident;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(tok));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      tok.kind = Token::Kind::Int;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(tok));
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') {
        throw ParseError(line, col, "unterminated string");
      }
      tok.kind = Token::Kind::String;
      tok.text = std::string(src.substr(i + 1, j - i - 1));
      advance(j - i + 1);
      out.push_back(std::move(tok));
      continue;
    }
    bool matched = false;
    for (std::string_view p : kPunct) {
      if (src.substr(i, p.size()) == p) {
        tok.kind = Token::Kind::Punct;
        tok.text = std::string(p);
        advance(p.size());
        out.push_back(std::move(tok));
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  Token end;
  end.kind = Token::Kind::End;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

bool is_keyword(std::string_view s) {
  return s == "skip" || s == "if" || s == "else" || s == "while" || s == "init";
}

class Parser {
 public:
  Parser(std::string_view text, ParseOptions options)
      : tokens_(tokenize(text)), options_(options) {}

  // Programs.

  SourceFile program() {
    SourceFile file;
    while (peek_ident("init")) {
      next();
      const Token& name = expect_ident("variable name");
      check_variable(name);
      expect("=");
      file.init[name.text] = integer();
      expect(";");
    }
    std::vector<CmdPtr> stmts;
    while (!at_end()) stmts.push_back(statement());
    file.program = fold(std::move(stmts));
    return file;
  }

  ExprPtr expression_only() {
    ExprPtr e = expr();
    if (!at_end()) error(peek(), "unexpected '" + peek().text + "'");
    return e;
  }

  // Label files.

  LabelFile labels(const Lattice& lattice) {
    LabelFile file;
    while (!at_end()) {
      const Token& head = expect_ident("'label', 'default' or 'lattice'");
      if (head.text == "lattice") {
        if (peek().kind != Token::Kind::String) error(peek(), "expected quoted path");
        file.lattice_ref = next().text;
        expect(";");
      } else if (head.text == "default") {
        expect(":");
        if (file.default_label) error(head, "duplicate default label");
        file.default_label = label(lattice);
        expect(";");
      } else if (head.text == "label") {
        const Token& name = expect_ident("variable name");
        check_label_target(name);
        expect(":");
        LabelPtr t = label(lattice);
        expect(";");
        if (!file.rules.emplace(name.text, std::move(t)).second) {
          error(name, "duplicate label for '" + name.text + "'");
        }
      } else {
        error(head, "expected 'label', 'default' or 'lattice'");
      }
    }
    return file;
  }

  LabelPtr label_only(const Lattice& lattice) {
    LabelPtr t = label(lattice);
    if (!at_end()) error(peek(), "unexpected '" + peek().text + "'");
    return t;
  }

  std::optional<std::string> lattice_ref() {
    for (std::size_t k = 0; k + 1 < tokens_.size(); ++k) {
      if (tokens_[k].kind == Token::Kind::Ident && tokens_[k].text == "lattice" &&
          tokens_[k + 1].kind == Token::Kind::String) {
        return tokens_[k + 1].text;
      }
    }
    return std::nullopt;
  }

  // Lattice files.

  Lattice lattice() {
    expect_word("levels");
    expect(":");
    std::vector<std::string> names;
    while (peek().kind == Token::Kind::Ident) {
      names.push_back(next().text);
      if (peek_punct(",")) next();
    }
    if (names.empty()) error(peek(), "expected at least one level");
    expect(";");
    std::vector<std::pair<std::string, std::string>> below;
    if (peek_ident("order")) {
      next();
      expect(":");
      while (peek().kind == Token::Kind::Ident) {
        std::string lo = next().text;
        expect("<");
        std::string hi = expect_ident("level").text;
        below.emplace_back(std::move(lo), std::move(hi));
        // a < b < c chains
        while (peek_punct("<")) {
          next();
          std::string more = expect_ident("level").text;
          below.emplace_back(below.back().second, more);
        }
        expect(";");
      }
      if (peek_punct(";")) next();
    }
    if (!at_end()) error(peek(), "unexpected '" + peek().text + "'");
    return Lattice(std::move(names), below);
  }

 private:
  // Statements.

  CmdPtr statement() {
    const Token& tok = peek();
    if (tok.kind == Token::Kind::Ident && tok.text == "skip") {
      next();
      expect(";");
      return make_skip(tok.line);
    }
    if (tok.kind == Token::Kind::Ident && tok.text == "if") {
      next();
      expect("(");
      ExprPtr guard = expr();
      expect(")");
      CmdPtr then_branch = block();
      CmdPtr else_branch = make_skip(tok.line);
      if (peek_ident("else")) {
        next();
        else_branch = block();
      }
      optional_semicolon();
      return make_if(std::move(guard), std::move(then_branch),
                     std::move(else_branch), tok.line);
    }
    if (tok.kind == Token::Kind::Ident && tok.text == "while") {
      next();
      expect("(");
      ExprPtr guard = expr();
      expect(")");
      CmdPtr body = block();
      optional_semicolon();
      return make_while(std::move(guard), std::move(body), tok.line);
    }
    if (peek_punct("[")) {
      next();
      const Token& target = expect_ident("variable name");
      check_variable(target);
      expect(":=");
      ExprPtr rhs = expr();
      expect("]");
      expect(";");
      return make_bracket_assign(target.text, std::move(rhs), tok.line,
                                 SiteId{next_site_++});
    }
    if (tok.kind == Token::Kind::Ident) {
      const Token& target = next();
      check_variable(target);
      expect(":=");
      ExprPtr rhs = expr();
      expect(";");
      return make_assign(target.text, std::move(rhs), tok.line,
                         SiteId{next_site_++});
    }
    error(tok, "expected a statement");
  }

  CmdPtr block() {
    expect("{");
    std::vector<CmdPtr> stmts;
    while (!peek_punct("}")) {
      if (at_end()) error(peek(), "unterminated block");
      stmts.push_back(statement());
    }
    next();
    return fold(std::move(stmts));
  }

  static CmdPtr fold(std::vector<CmdPtr> stmts) {
    if (stmts.empty()) return make_skip();
    CmdPtr acc = stmts.back();
    for (std::size_t k = stmts.size() - 1; k-- > 0;) acc = make_seq(stmts[k], acc);
    return acc;
  }

  void optional_semicolon() {
    if (peek_punct(";")) next();
  }

  // Expressions, lowest precedence first.

  ExprPtr expr() { return or_expr(); }

  ExprPtr or_expr() {
    ExprPtr lhs = and_expr();
    while (peek_punct("||")) {
      next();
      lhs = Expr::binary(BinOp::Or, lhs, and_expr());
    }
    return lhs;
  }

  ExprPtr and_expr() {
    ExprPtr lhs = cmp_expr();
    while (peek_punct("&&")) {
      next();
      lhs = Expr::binary(BinOp::And, lhs, cmp_expr());
    }
    return lhs;
  }

  ExprPtr cmp_expr() {
    ExprPtr lhs = add_expr();
    while (true) {
      std::optional<BinOp> op;
      if (peek_punct("==")) op = BinOp::Eq;
      else if (peek_punct("!=")) op = BinOp::Ne;
      else if (peek_punct("<=")) op = BinOp::Le;
      else if (peek_punct(">=")) op = BinOp::Ge;
      else if (peek_punct("<")) op = BinOp::Lt;
      else if (peek_punct(">")) op = BinOp::Gt;
      if (!op) return lhs;
      next();
      lhs = Expr::binary(*op, lhs, add_expr());
    }
  }

  ExprPtr add_expr() {
    ExprPtr lhs = mul_expr();
    while (peek_punct("+") || peek_punct("-")) {
      const BinOp op = next().text == "+" ? BinOp::Add : BinOp::Sub;
      lhs = Expr::binary(op, lhs, mul_expr());
    }
    return lhs;
  }

  ExprPtr mul_expr() {
    ExprPtr lhs = unary_expr();
    while (peek_punct("*") || peek_punct("%")) {
      const BinOp op = next().text == "*" ? BinOp::Mul : BinOp::Mod;
      lhs = Expr::binary(op, lhs, unary_expr());
    }
    return lhs;
  }

  ExprPtr unary_expr() {
    if (peek_punct("-")) {
      next();
      if (peek().kind == Token::Kind::Int) return Expr::literal(integer_after_minus());
      return Expr::binary(BinOp::Sub, Expr::literal(0), unary_expr());
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& tok = peek();
    if (tok.kind == Token::Kind::Int) return Expr::literal(integer());
    if (tok.kind == Token::Kind::Ident) {
      next();
      check_variable(tok);
      return Expr::variable(tok.text);
    }
    if (peek_punct("(")) {
      next();
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    error(tok, "expected an expression");
  }

  std::int64_t integer() {
    bool negative = false;
    if (peek_punct("-")) {
      next();
      negative = true;
    }
    if (negative) return integer_after_minus();
    const Token& tok = peek();
    if (tok.kind != Token::Kind::Int) error(tok, "expected an integer");
    next();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
    if (ec != std::errc()) error(tok, "integer literal out of range");
    return v;
  }

  std::int64_t integer_after_minus() {
    const Token& tok = peek();
    if (tok.kind != Token::Kind::Int) error(tok, "expected an integer");
    next();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
    constexpr auto limit =
        static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + 1;
    if (ec != std::errc() || v > limit) error(tok, "integer literal out of range");
    if (v == limit) return std::numeric_limits<std::int64_t>::min();
    return -static_cast<std::int64_t>(v);
  }

  // Labels: join binds loosest, then meet; `( e ? t : t )` or `( t )`.

  LabelPtr label(const Lattice& lattice) {
    LabelPtr lhs = meet_label(lattice);
    while (peek_punct("\\/")) {
      next();
      lhs = Label::join(lhs, meet_label(lattice));
    }
    return lhs;
  }

  LabelPtr meet_label(const Lattice& lattice) {
    LabelPtr lhs = atom_label(lattice);
    while (peek_punct("/\\")) {
      next();
      lhs = Label::meet(lhs, atom_label(lattice));
    }
    return lhs;
  }

  LabelPtr atom_label(const Lattice& lattice) {
    const Token& tok = peek();
    if (tok.kind == Token::Kind::Ident) {
      next();
      if (!lattice.has_level(tok.text)) {
        fail(ErrorKind::Config, std::to_string(tok.line) + ":" +
                                    std::to_string(tok.column) +
                                    ": unknown security level '" + tok.text + "'");
      }
      return Label::of(lattice.level(tok.text));
    }
    if (!peek_punct("(")) error(tok, "expected a label");
    next();
    const std::size_t saved = pos_;
    ExprPtr guard;
    try {
      guard = expr();
      if (!peek_punct("?")) guard = nullptr;
    } catch (const ParseError&) {
      guard = nullptr;
    }
    if (guard) {
      expect("?");
      LabelPtr then_label = label(lattice);
      expect(":");
      LabelPtr else_label = label(lattice);
      expect(")");
      return Label::cond(std::move(guard), std::move(then_label),
                         std::move(else_label));
    }
    pos_ = saved;
    LabelPtr inner = label(lattice);
    expect(")");
    return inner;
  }

  // Token helpers.

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Token::Kind::End) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool peek_punct(std::string_view p) const {
    return peek().kind == Token::Kind::Punct && peek().text == p;
  }
  bool peek_ident(std::string_view word) const {
    return peek().kind == Token::Kind::Ident && peek().text == word;
  }

  void expect(std::string_view p) {
    if (!peek_punct(p)) {
      const Token& t = peek();
      error(t, "expected '" + std::string(p) + "' but found " +
                   (t.kind == Token::Kind::End ? std::string("end of input")
                                               : "'" + t.text + "'"));
    }
    next();
  }

  void expect_word(std::string_view word) {
    if (!peek_ident(word)) error(peek(), "expected '" + std::string(word) + "'");
    next();
  }

  const Token& expect_ident(std::string_view what) {
    if (peek().kind != Token::Kind::Ident) {
      error(peek(), "expected " + std::string(what));
    }
    return next();
  }

  void check_variable(const Token& tok) {
    if (is_keyword(tok.text)) error(tok, "'" + tok.text + "' is a reserved word");
    if (is_copy_name(tok.text)) {
      if (!options_.allow_copy_names) {
        error(tok, "identifier '" + tok.text + "' uses the reserved copy separator '@'");
      }
      try {
        (void)base_of(tok.text);
      } catch (const Error&) {
        error(tok, "malformed copy name '" + tok.text + "'");
      }
    }
  }

  void check_label_target(const Token& tok) {
    if (is_copy_name(tok.text)) {
      try {
        (void)base_of(tok.text);
      } catch (const Error&) {
        error(tok, "malformed copy name '" + tok.text + "'");
      }
    }
  }

  [[noreturn]] void error(const Token& tok, const std::string& message) const {
    throw ParseError(tok.line, tok.column, message);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseOptions options_;
  int next_site_ = 1;
};

}  // namespace

SourceFile parse_program(std::string_view text, ParseOptions options) {
  Parser p(text, options);
  SourceFile file = p.program();
  file.text = std::string(text);
  return file;
}

ExprPtr parse_expr(std::string_view text) {
  Parser p(text, ParseOptions{.allow_copy_names = true});
  return p.expression_only();
}

LabelPtr LabelFile::resolve(const std::string& var) const {
  if (auto it = rules.find(var); it != rules.end()) return it->second;
  if (is_copy_name(var)) {
    if (auto it = rules.find(base_of(var)); it != rules.end()) return it->second;
  }
  return default_label;
}

LabelFile parse_labels(std::string_view text, const Lattice& lattice) {
  Parser p(text, ParseOptions{.allow_copy_names = true});
  return p.labels(lattice);
}

std::optional<std::string> peek_lattice_ref(std::string_view text) {
  Parser p(text, ParseOptions{.allow_copy_names = true});
  return p.lattice_ref();
}

LabelPtr parse_label(std::string_view text, const Lattice& lattice) {
  Parser p(text, ParseOptions{.allow_copy_names = true});
  return p.label_only(lattice);
}

Lattice parse_lattice(std::string_view text) {
  Parser p(text, ParseOptions{});
  return p.lattice();
}

Memory parse_assignments(std::string_view text) {
  Memory out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) {
      const auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        fail(ErrorKind::Usage, "expected name=value in '" + std::string(item) + "'");
      }
      std::string name(item.substr(0, eq));
      std::string_view value = item.substr(eq + 1);
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        fail(ErrorKind::Usage, "bad integer in '" + std::string(item) + "'");
      }
      out[name] = v;
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace iflow

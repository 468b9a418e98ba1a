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

#include "core/printer.hpp"

#include <sstream>

namespace iflow {

namespace {

int precedence(BinOp op) {
  switch (op) {
    case BinOp::Or: return 1;
    case BinOp::And: return 2;
    case BinOp::Eq:
    case BinOp::Ne:
    case BinOp::Lt:
    case BinOp::Le:
    case BinOp::Gt:
    case BinOp::Ge:
      return 3;
    case BinOp::Add:
    case BinOp::Sub:
      return 4;
    case BinOp::Mul:
    case BinOp::Mod:
      return 5;
  }
  return 0;
}

constexpr int kAtom = 7;

int expr_precedence(const Expr& e) {
  if (e.kind == Expr::Kind::Binary) return precedence(e.op);
  // A negative literal prints with a leading minus, which only binds as
  // tightly as unary minus.
  if (e.kind == Expr::Kind::Literal && e.value < 0) return 6;
  return kAtom;
}

void emit_expr(const Expr& e, std::ostringstream& out) {
  switch (e.kind) {
    case Expr::Kind::Literal: out << e.value; return;
    case Expr::Kind::Variable: out << e.name; return;
    case Expr::Kind::Binary: break;
  }
  const int p = precedence(e.op);
  const bool wrap_l = expr_precedence(*e.lhs) < p;
  // Every binary operator is left-associative, so an equal-precedence right
  // operand needs parentheses. `a - -1` reparses correctly and stays bare.
  const bool wrap_r = expr_precedence(*e.rhs) <= p;
  if (wrap_l) out << '(';
  emit_expr(*e.lhs, out);
  if (wrap_l) out << ')';
  out << ' ' << op_symbol(e.op) << ' ';
  if (wrap_r) out << '(';
  emit_expr(*e.rhs, out);
  if (wrap_r) out << ')';
}

// 0 = join, 1 = meet, 2 = atom
int label_precedence(const Label& t) {
  switch (t.kind) {
    case Label::Kind::Join: return 0;
    case Label::Kind::Meet: return 1;
    default: return 2;
  }
}

void emit_label(const Label& t, const Lattice& lattice, std::ostringstream& out) {
  switch (t.kind) {
    case Label::Kind::Level:
      out << lattice.name(t.level);
      return;
    case Label::Kind::Cond:
      out << '(' << render_expr(*t.guard) << " ? ";
      emit_label(*t.a, lattice, out);
      out << " : ";
      emit_label(*t.b, lattice, out);
      out << ')';
      return;
    case Label::Kind::Join:
    case Label::Kind::Meet: {
      const int p = label_precedence(t);
      const bool wrap_l = label_precedence(*t.a) < p;
      const bool wrap_r = label_precedence(*t.b) <= p;
      if (wrap_l) out << '(';
      emit_label(*t.a, lattice, out);
      if (wrap_l) out << ')';
      out << (t.kind == Label::Kind::Join ? " \\/ " : " /\\ ");
      if (wrap_r) out << '(';
      emit_label(*t.b, lattice, out);
      if (wrap_r) out << ')';
      return;
    }
  }
}

void indent(int depth, std::ostringstream& out) {
  for (int i = 0; i < depth; ++i) out << "  ";
}

void emit_cmd(const Cmd& c, int depth, std::ostringstream& out);

void emit_block(const Cmd& body, int depth, std::ostringstream& out) {
  if (body.kind == Cmd::Kind::Skip) {
    out << "{ skip; }";
    return;
  }
  out << "{\n";
  emit_cmd(body, depth + 1, out);
  indent(depth, out);
  out << '}';
}

void emit_cmd(const Cmd& c, int depth, std::ostringstream& out) {
  switch (c.kind) {
    case Cmd::Kind::Skip:
      indent(depth, out);
      out << "skip;\n";
      return;
    case Cmd::Kind::Seq:
      emit_cmd(*c.first, depth, out);
      emit_cmd(*c.second, depth, out);
      return;
    case Cmd::Kind::Assign:
      indent(depth, out);
      out << c.target << " := " << render_expr(*c.expr) << ";\n";
      return;
    case Cmd::Kind::BracketAssign:
      indent(depth, out);
      out << '[' << c.target << " := " << render_expr(*c.expr) << "];\n";
      return;
    case Cmd::Kind::If:
      indent(depth, out);
      out << "if (" << render_expr(*c.expr) << ") ";
      emit_block(*c.first, depth, out);
      if (c.second->kind != Cmd::Kind::Skip) {
        out << " else ";
        emit_block(*c.second, depth, out);
      }
      out << '\n';
      return;
    case Cmd::Kind::While:
      indent(depth, out);
      out << "while (" << render_expr(*c.expr) << ") ";
      emit_block(*c.first, depth, out);
      out << '\n';
      return;
  }
}

}  // namespace

std::string render_expr(const Expr& e) {
  std::ostringstream out;
  emit_expr(e, out);
  return out.str();
}

std::string render_label(const Label& t, const Lattice& lattice) {
  std::ostringstream out;
  emit_label(t, lattice, out);
  return out.str();
}

std::string render_program(const Cmd& c, const Memory& init,
                           const std::optional<ActiveSet>& active) {
  std::ostringstream out;
  for (const auto& [name, value] : init) {
    out << "init " << name << " = " << value << ";\n";
  }
  if (active) {
    for (const auto& [source, copy] : active->entries()) {
      out << "#active " << source << " = " << copy << '\n';
    }
  }
  emit_cmd(c, 0, out);
  return out.str();
}

std::string render_statement_head(const Cmd& c) {
  switch (c.kind) {
    case Cmd::Kind::Skip: return "skip";
    case Cmd::Kind::Seq: return render_statement_head(*c.first);
    case Cmd::Kind::Assign: return c.target + " := " + render_expr(*c.expr);
    case Cmd::Kind::BracketAssign:
      return "[" + c.target + " := " + render_expr(*c.expr) + "]";
    case Cmd::Kind::If: return "if (" + render_expr(*c.expr) + ")";
    case Cmd::Kind::While: return "while (" + render_expr(*c.expr) + ")";
  }
  return {};
}

std::string render_memory(const Memory& m) {
  std::ostringstream out;
  bool first = true;
  out << '{';
  for (const auto& [name, value] : m) {
    if (!first) out << ", ";
    first = false;
    out << name << " = " << value;
  }
  out << '}';
  return out.str();
}

}  // namespace iflow

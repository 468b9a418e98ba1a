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

#include "core/ast.hpp"

#include <utility>

namespace iflow {

std::string_view op_symbol(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Mod: return "%";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::And: return "&&";
    case BinOp::Or: return "||";
  }
  return "?";
}

bool is_comparison(BinOp op) {
  switch (op) {
    case BinOp::Eq:
    case BinOp::Ne:
    case BinOp::Lt:
    case BinOp::Le:
    case BinOp::Gt:
    case BinOp::Ge:
      return true;
    default:
      return false;
  }
}

ExprPtr Expr::literal(std::int64_t value) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Literal;
  e->value = value;
  return e;
}

ExprPtr Expr::variable(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Variable;
  e->name = std::move(name);
  return e;
}

ExprPtr Expr::binary(BinOp op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Binary;
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Literal: return a.value == b.value;
    case Expr::Kind::Variable: return a.name == b.name;
    case Expr::Kind::Binary:
      return a.op == b.op && *a.lhs == *b.lhs && *a.rhs == *b.rhs;
  }
  return false;
}

bool same_expr(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void collect_free_vars(const Expr& e, std::set<std::string>& out) {
  switch (e.kind) {
    case Expr::Kind::Literal: break;
    case Expr::Kind::Variable: out.insert(e.name); break;
    case Expr::Kind::Binary:
      collect_free_vars(*e.lhs, out);
      collect_free_vars(*e.rhs, out);
      break;
  }
}

std::set<std::string> free_vars(const Expr& e) {
  std::set<std::string> out;
  collect_free_vars(e, out);
  return out;
}

namespace {

std::shared_ptr<Cmd> new_cmd(Cmd::Kind kind, int line) {
  auto c = std::make_shared<Cmd>();
  c->kind = kind;
  c->line = line;
  return c;
}

}  // namespace

CmdPtr make_skip(int line) { return new_cmd(Cmd::Kind::Skip, line); }

CmdPtr make_seq(CmdPtr first, CmdPtr second) {
  if (first->kind == Cmd::Kind::Seq) {
    return make_seq(first->first, make_seq(first->second, std::move(second)));
  }
  auto c = new_cmd(Cmd::Kind::Seq, first->line);
  c->first = std::move(first);
  c->second = std::move(second);
  return c;
}

CmdPtr make_assign(std::string target, ExprPtr rhs, int line, SiteId site) {
  auto c = new_cmd(Cmd::Kind::Assign, line);
  c->target = std::move(target);
  c->expr = std::move(rhs);
  c->site = site;
  return c;
}

CmdPtr make_bracket_assign(std::string target, ExprPtr rhs, int line,
                           SiteId site) {
  auto c = new_cmd(Cmd::Kind::BracketAssign, line);
  c->target = std::move(target);
  c->expr = std::move(rhs);
  c->site = site;
  return c;
}

CmdPtr make_if(ExprPtr guard, CmdPtr then_branch, CmdPtr else_branch,
               int line) {
  auto c = new_cmd(Cmd::Kind::If, line);
  c->expr = std::move(guard);
  c->first = std::move(then_branch);
  c->second = std::move(else_branch);
  return c;
}

CmdPtr make_while(ExprPtr guard, CmdPtr body, int line) {
  auto c = new_cmd(Cmd::Kind::While, line);
  c->expr = std::move(guard);
  c->first = std::move(body);
  return c;
}

bool operator==(const Cmd& a, const Cmd& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Cmd::Kind::Skip: return true;
    case Cmd::Kind::Seq:
      return *a.first == *b.first && *a.second == *b.second;
    case Cmd::Kind::Assign:
    case Cmd::Kind::BracketAssign:
      return a.site == b.site && a.target == b.target && *a.expr == *b.expr;
    case Cmd::Kind::If:
      return *a.expr == *b.expr && *a.first == *b.first &&
             *a.second == *b.second;
    case Cmd::Kind::While:
      return *a.expr == *b.expr && *a.first == *b.first;
  }
  return false;
}

bool same_cmd(const CmdPtr& a, const CmdPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

CmdPtr renumber(const CmdPtr& c, int& next) {
  switch (c->kind) {
    case Cmd::Kind::Skip: return c;
    case Cmd::Kind::Seq: {
      auto first = renumber(c->first, next);
      auto second = renumber(c->second, next);
      return make_seq(first, second);
    }
    case Cmd::Kind::Assign:
      return make_assign(c->target, c->expr, c->line, SiteId{next++});
    case Cmd::Kind::BracketAssign:
      return make_bracket_assign(c->target, c->expr, c->line, SiteId{next++});
    case Cmd::Kind::If: {
      auto then_branch = renumber(c->first, next);
      auto else_branch = renumber(c->second, next);
      return make_if(c->expr, then_branch, else_branch, c->line);
    }
    case Cmd::Kind::While:
      return make_while(c->expr, renumber(c->first, next), c->line);
  }
  return c;
}

void collect_vars(const Cmd& c, std::set<std::string>& out, bool reads) {
  switch (c.kind) {
    case Cmd::Kind::Skip: break;
    case Cmd::Kind::Seq:
    case Cmd::Kind::If:
      if (reads && c.expr) collect_free_vars(*c.expr, out);
      collect_vars(*c.first, out, reads);
      collect_vars(*c.second, out, reads);
      break;
    case Cmd::Kind::Assign:
    case Cmd::Kind::BracketAssign:
      out.insert(c.target);
      if (reads) collect_free_vars(*c.expr, out);
      break;
    case Cmd::Kind::While:
      if (reads) collect_free_vars(*c.expr, out);
      collect_vars(*c.first, out, reads);
      break;
  }
}

}  // namespace

CmdPtr number_sites(const CmdPtr& c) {
  int next = 1;
  return renumber(c, next);
}

std::set<std::string> program_vars(const Cmd& c) {
  std::set<std::string> out;
  collect_vars(c, out, true);
  return out;
}

std::set<std::string> assigned_vars(const Cmd& c) {
  std::set<std::string> out;
  collect_vars(c, out, false);
  return out;
}

bool contains_bracket(const Cmd& c) {
  switch (c.kind) {
    case Cmd::Kind::BracketAssign: return true;
    case Cmd::Kind::Seq:
    case Cmd::Kind::If:
      return contains_bracket(*c.first) || contains_bracket(*c.second);
    case Cmd::Kind::While: return contains_bracket(*c.first);
    default: return false;
  }
}

int count_assignments(const Cmd& c) {
  switch (c.kind) {
    case Cmd::Kind::Assign:
    case Cmd::Kind::BracketAssign: return 1;
    case Cmd::Kind::Seq:
    case Cmd::Kind::If:
      return count_assignments(*c.first) + count_assignments(*c.second);
    case Cmd::Kind::While: return count_assignments(*c.first);
    default: return 0;
  }
}

}  // namespace iflow

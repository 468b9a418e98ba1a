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

#ifndef IFLOW_CORE_AST_HPP
#define IFLOW_CORE_AST_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace iflow {

enum class BinOp {
  Add,
  Sub,
  Mul,
  Mod,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  And,
  Or,
};

std::string_view op_symbol(BinOp op);
bool is_comparison(BinOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression tree: literal, variable reference or binary operation.
struct Expr {
  enum class Kind { Literal, Variable, Binary };

  Kind kind = Kind::Literal;
  std::int64_t value = 0;
  std::string name;
  BinOp op = BinOp::Add;
  ExprPtr lhs;
  ExprPtr rhs;

  static ExprPtr literal(std::int64_t value);
  static ExprPtr variable(std::string name);
  static ExprPtr binary(BinOp op, ExprPtr lhs, ExprPtr rhs);
};

bool operator==(const Expr& a, const Expr& b);
bool same_expr(const ExprPtr& a, const ExprPtr& b);

// Variables read by `e`.
std::set<std::string> free_vars(const Expr& e);
void collect_free_vars(const Expr& e, std::set<std::string>& out);

// Identifies one assignment within a program; numbered in textual order.
struct SiteId {
  int value = 0;
  auto operator<=>(const SiteId&) const = default;
};

struct Cmd;
using CmdPtr = std::shared_ptr<const Cmd>;

// Immutable command tree. `first`/`second` hold the two halves of a Seq,
// the branches of an If, or (first only) the body of a While. `expr` is the
// right-hand side of an assignment or the guard of a conditional or loop.
struct Cmd {
  enum class Kind { Skip, Seq, Assign, BracketAssign, If, While };

  Kind kind = Kind::Skip;
  SiteId site;
  int line = 0;
  std::string target;
  ExprPtr expr;
  CmdPtr first;
  CmdPtr second;

  bool is_assignment() const {
    return kind == Kind::Assign || kind == Kind::BracketAssign;
  }
};

CmdPtr make_skip(int line = 0);
// Sequential composition, kept right-nested so that printing and reparsing
// reproduce the same tree.
CmdPtr make_seq(CmdPtr first, CmdPtr second);
CmdPtr make_assign(std::string target, ExprPtr rhs, int line = 0,
                   SiteId site = {});
CmdPtr make_bracket_assign(std::string target, ExprPtr rhs, int line = 0,
                           SiteId site = {});
CmdPtr make_if(ExprPtr guard, CmdPtr then_branch, CmdPtr else_branch,
               int line = 0);
CmdPtr make_while(ExprPtr guard, CmdPtr body, int line = 0);

// Structural equality; compares site ids but ignores source lines.
bool operator==(const Cmd& a, const Cmd& b);
bool same_cmd(const CmdPtr& a, const CmdPtr& b);

// Renumbers assignment sites 1, 2, ... in textual order.
CmdPtr number_sites(const CmdPtr& c);

// Every variable read or written by `c`.
std::set<std::string> program_vars(const Cmd& c);
// Variables that are assignment targets somewhere in `c`.
std::set<std::string> assigned_vars(const Cmd& c);
bool contains_bracket(const Cmd& c);
int count_assignments(const Cmd& c);

}  // namespace iflow

#endif  // IFLOW_CORE_AST_HPP

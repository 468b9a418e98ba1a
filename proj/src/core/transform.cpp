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

#include "core/transform.hpp"

#include <utility>
#include <vector>

#include "core/error.hpp"

namespace iflow {

std::string FreshCounter::fresh(const std::string& base) {
  int& next = next_[base];
  ++next;
  return copy_name(base, next);
}

int FreshCounter::issued(const std::string& base) const {
  auto it = next_.find(base);
  return it == next_.end() ? 0 : it->second;
}

ExprPtr transform_expr(const ActiveSet& a, const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Literal: return e;
    case Expr::Kind::Variable: return Expr::variable(a.at(e->name));
    case Expr::Kind::Binary:
      return Expr::binary(e->op, transform_expr(a, e->lhs), transform_expr(a, e->rhs));
  }
  fail(ErrorKind::Internal, "unknown expression kind");
}

ActiveSet phi_merge(const ActiveSet& a1, const ActiveSet& a2, FreshCounter& fc) {
  if (a1.domain() != a2.domain()) {
    fail(ErrorKind::Internal, "phi_merge: active sets have different domains");
  }
  ActiveSet out;
  for (const auto& [x, copy] : a1.entries()) {
    out.set(x, copy == a2.at(x) ? copy : fc.fresh(x));
  }
  return out;
}

CmdPtr set_assign(const ActiveSet& target, const ActiveSet& source, int line) {
  std::vector<CmdPtr> assigns;
  for (const auto& [v, to] : target.entries()) {
    const std::string& from = source.at(v);
    if (to != from) assigns.push_back(make_assign(to, Expr::variable(from), line));
  }
  if (assigns.empty()) return make_skip(line);
  CmdPtr acc = assigns.back();
  for (std::size_t k = assigns.size() - 1; k-- > 0;) acc = make_seq(assigns[k], acc);
  return acc;
}

CmdPtr seq_nonskip(const CmdPtr& first, const CmdPtr& second) {
  if (second->kind == Cmd::Kind::Skip) return first;
  if (first->kind == Cmd::Kind::Skip) return second;
  return make_seq(first, second);
}

TransformStep transform_cmd(const ActiveSet& a, const CmdPtr& c, FreshCounter& fc) {
  switch (c->kind) {
    case Cmd::Kind::Skip:
      return {a, c};
    case Cmd::Kind::Assign: {
      ActiveSet out = a;
      out.set(c->target, c->target);
      return {std::move(out),
              make_assign(c->target, transform_expr(a, c->expr), c->line, c->site)};
    }
    case Cmd::Kind::BracketAssign: {
      std::string copy = fc.fresh(c->target);
      ActiveSet out = a;
      out.set(c->target, copy);
      return {std::move(out),
              make_assign(std::move(copy), transform_expr(a, c->expr), c->line, c->site)};
    }
    case Cmd::Kind::Seq: {
      TransformStep s1 = transform_cmd(a, c->first, fc);
      TransformStep s2 = transform_cmd(s1.alpha, c->second, fc);
      return {std::move(s2.alpha), make_seq(s1.cmd, s2.cmd)};
    }
    case Cmd::Kind::If: {
      ExprPtr guard = transform_expr(a, c->expr);
      TransformStep s1 = transform_cmd(a, c->first, fc);
      TransformStep s2 = transform_cmd(a, c->second, fc);
      ActiveSet a3 = phi_merge(s1.alpha, s2.alpha, fc);
      CmdPtr then_branch = seq_nonskip(s1.cmd, set_assign(a3, s1.alpha, c->line));
      CmdPtr else_branch = seq_nonskip(s2.cmd, set_assign(a3, s2.alpha, c->line));
      return {std::move(a3), make_if(std::move(guard), std::move(then_branch),
                                     std::move(else_branch), c->line)};
    }
    case Cmd::Kind::While: {
      // First pass only determines which copies the body moves; its output
      // is discarded. The shared counter keeps later names distinct.
      TransformStep first = transform_cmd(a, c->first, fc);
      ActiveSet a2 = phi_merge(a, first.alpha, fc);
      TransformStep second = transform_cmd(a2, c->first, fc);
      ExprPtr guard = transform_expr(a2, c->expr);
      CmdPtr body = seq_nonskip(second.cmd, set_assign(a2, second.alpha, c->line));
      CmdPtr loop = make_while(std::move(guard), std::move(body), c->line);
      return {a2, seq_nonskip(set_assign(a2, a, c->line), loop)};
    }
  }
  fail(ErrorKind::Internal, "unknown command kind");
}

CmdPtr bracket_all(const CmdPtr& c) {
  switch (c->kind) {
    case Cmd::Kind::Skip:
    case Cmd::Kind::BracketAssign:
      return c;
    case Cmd::Kind::Assign:
      return make_bracket_assign(c->target, c->expr, c->line, c->site);
    case Cmd::Kind::Seq:
      return make_seq(bracket_all(c->first), bracket_all(c->second));
    case Cmd::Kind::If:
      return make_if(c->expr, bracket_all(c->first), bracket_all(c->second), c->line);
    case Cmd::Kind::While:
      return make_while(c->expr, bracket_all(c->first), c->line);
  }
  fail(ErrorKind::Internal, "unknown command kind");
}

TransformResult transform_program(const CmdPtr& source,
                                  const std::set<std::string>& extra_vars) {
  std::set<std::string> vars = program_vars(*source);
  vars.insert(extra_vars.begin(), extra_vars.end());
  TransformResult result;
  result.initial = ActiveSet::identity(vars);
  FreshCounter fc;
  TransformStep step = transform_cmd(result.initial, source, fc);
  result.alpha_final = std::move(step.alpha);
  result.program = number_sites(step.cmd);
  return result;
}

std::set<std::string> fresh_vars(const Cmd& c) {
  std::set<std::string> out;
  for (const std::string& v : program_vars(c)) {
    if (is_copy_name(v)) out.insert(v);
  }
  return out;
}

}  // namespace iflow

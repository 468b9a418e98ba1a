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

#include "core/typecheck.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace iflow {

std::size_t CheckReport::count(ObligationStatus s) const {
  return static_cast<std::size_t>(std::count_if(
      obligations.begin(), obligations.end(),
      [s](const Obligation& o) { return o.result.status == s; }));
}

LabelPtr join_labels(const LabelPtr& a, const LabelPtr& b, const Lattice& lattice) {
  if (is_bare_level(*a) && is_bare_level(*b)) return Label::of(lattice.join(a->level, b->level));
  if (is_bare_level(*a) && a->level == lattice.bottom()) return b;
  if (is_bare_level(*b) && b->level == lattice.bottom()) return a;
  if (*a == *b) return a;
  return Label::join(a, b);
}

LabelPtr type_of_expr(const TypingEnv& env, const Expr& e, const Lattice& lattice) {
  switch (e.kind) {
    case Expr::Kind::Literal: return Label::of(lattice.bottom());
    case Expr::Kind::Variable: return env.lookup(e.name);
    case Expr::Kind::Binary:
      return join_labels(type_of_expr(env, *e.lhs, lattice),
                         type_of_expr(env, *e.rhs, lattice), lattice);
  }
  fail(ErrorKind::Internal, "unknown expression kind");
}

void check_cmd(const CheckContext& ctx, const LabelPtr& pc, const Cmd& c,
               std::vector<Obligation>& obligations,
               std::vector<SideConditionFailure>& side_conditions) {
  switch (c.kind) {
    case Cmd::Kind::Skip:
      return;
    case Cmd::Kind::Seq:
      check_cmd(ctx, pc, *c.first, obligations, side_conditions);
      check_cmd(ctx, pc, *c.second, obligations, side_conditions);
      return;
    case Cmd::Kind::BracketAssign:
      fail(ErrorKind::Usage, "type checking requires a transformed program");
    case Cmd::Kind::Assign: {
      Obligation ob;
      ob.site = c.site;
      ob.line = c.line;
      ob.target = c.target;
      if (auto it = ctx.predicates.find(c.site); it != ctx.predicates.end()) {
        ob.hypothesis = it->second;
      }
      ob.lhs = join_labels(type_of_expr(ctx.env, *c.expr, ctx.lattice), pc, ctx.lattice);
      ob.rhs = ctx.env.lookup(c.target);
      ob.result = discharge(ob.hypothesis, *ob.lhs, *ob.rhs, ctx.lattice, ctx.discharge);
      obligations.push_back(std::move(ob));

      for (const std::string& v : ctx.live.at(c.site).after) {
        if (label_free_vars(*ctx.env.lookup(v)).count(c.target) != 0) {
          side_conditions.push_back({c.site, c.line, c.target, v});
        }
      }
      return;
    }
    case Cmd::Kind::If:
    case Cmd::Kind::While: {
      const LabelPtr inner =
          join_labels(pc, type_of_expr(ctx.env, *c.expr, ctx.lattice), ctx.lattice);
      check_cmd(ctx, inner, *c.first, obligations, side_conditions);
      if (c.kind == Cmd::Kind::If) check_cmd(ctx, inner, *c.second, obligations, side_conditions);
      return;
    }
  }
}

TypingEnv resolve_env(const LabelFile& labels, const std::set<std::string>& vars,
                      bool levels_only) {
  TypingEnv env;
  std::set<std::string> pending = vars;
  while (!pending.empty()) {
    const std::string v = *pending.begin();
    pending.erase(pending.begin());
    if (env.entries().count(v)) continue;
    LabelPtr label = labels.resolve(v);
    if (!label) fail(ErrorKind::Config, "no security label for variable '" + v + "'");
    if (levels_only && !is_bare_level(*label)) {
      fail(ErrorKind::Config, "levels-only mode: label of '" + v + "' is not a bare level");
    }
    for (const std::string& dep : label_free_vars(*label)) {
      if (!env.entries().count(dep)) pending.insert(dep);
    }
    env.set(v, std::move(label));
  }
  return env;
}

CheckReport check_transformed(const TransformResult& transformed, const TypingEnv& env,
                              const Lattice& lattice, const CheckOptions& options,
                              std::optional<Level> pc) {
  CheckReport report;
  report.transform = transformed;
  report.env = env;
  DischargeOptions dopts;
  dopts.guard_cap = options.guard_cap;
  dopts.search_memory = options.witness_memories;
  report.wellformed = env_wellformed(env, lattice, dopts);
  report.live = liveness(*transformed.program, env, transformed.alpha_final);
  report.predicates = predicates(*transformed.program, options.init);
  const CheckContext ctx{env, lattice, report.predicates, report.live, dopts};
  check_cmd(ctx, Label::of(pc.value_or(lattice.bottom())), *transformed.program,
            report.obligations, report.side_conditions);
  report.accept = report.wellformed.empty() && report.side_conditions.empty() &&
                  std::all_of(report.obligations.begin(), report.obligations.end(),
                              [](const Obligation& o) {
                                return o.result.status == ObligationStatus::Valid;
                              });
  return report;
}

CheckReport check_program(const CmdPtr& source, const LabelFile& labels,
                          const Lattice& lattice, const CheckOptions& options) {
  std::set<std::string> extra;
  for (const auto& [name, value] : options.init) extra.insert(name);
  TransformResult transformed = transform_program(source, extra);
  std::set<std::string> vars = program_vars(*transformed.program);
  for (const auto& v : transformed.alpha_final.range()) vars.insert(v);
  for (const auto& v : transformed.initial.range()) vars.insert(v);
  TypingEnv env = resolve_env(labels, vars, options.levels_only);
  return check_transformed(transformed, env, lattice, options);
}

}  // namespace iflow

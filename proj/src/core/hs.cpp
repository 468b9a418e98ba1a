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

#include "core/hs.hpp"

#include <algorithm>
#include <utility>

#include "core/error.hpp"

namespace iflow {

Level hs_expr_level(const HsEnv& env, const Expr& e, const Lattice& lattice) {
  switch (e.kind) {
    case Expr::Kind::Literal: return lattice.bottom();
    case Expr::Kind::Variable: {
      auto it = env.find(e.name);
      if (it == env.end()) fail(ErrorKind::Config, "no level for variable '" + e.name + "'");
      return it->second;
    }
    case Expr::Kind::Binary:
      return lattice.join(hs_expr_level(env, *e.lhs, lattice),
                          hs_expr_level(env, *e.rhs, lattice));
  }
  return lattice.bottom();
}

HsEnv hs_join(const HsEnv& a, const HsEnv& b, const Lattice& lattice) {
  HsEnv out = a;
  for (const auto& [v, l] : b) {
    auto [it, inserted] = out.emplace(v, l);
    if (!inserted) it->second = lattice.join(it->second, l);
  }
  return out;
}

namespace {

int loop_bound(const HsEnv& env, const Lattice& lattice) {
  return static_cast<int>(env.size()) * std::max(lattice.height(), 1) + 1;
}

HsEnv hs_loop(Level pc, const HsEnv& env, const Cmd& loop, const Lattice& lattice) {
  HsEnv current = env;
  const int bound = loop_bound(env, lattice);
  for (int round = 0; round <= bound; ++round) {
    const Level guard = hs_expr_level(current, *loop.expr, lattice);
    HsEnv body_out = hs_check(lattice.join(pc, guard), current, *loop.first, lattice);
    HsEnv next = hs_join(body_out, env, lattice);
    if (next == current) return current;
    current = std::move(next);
  }
  fail(ErrorKind::Internal, "HS loop iteration did not stabilize");
}

}  // namespace

HsEnv hs_check(Level pc, const HsEnv& env, const Cmd& c, const Lattice& lattice) {
  switch (c.kind) {
    case Cmd::Kind::Skip:
      return env;
    case Cmd::Kind::Seq:
      return hs_check(pc, hs_check(pc, env, *c.first, lattice), *c.second, lattice);
    case Cmd::Kind::Assign:
    case Cmd::Kind::BracketAssign: {
      HsEnv out = env;
      out[c.target] = lattice.join(pc, hs_expr_level(env, *c.expr, lattice));
      return out;
    }
    case Cmd::Kind::If: {
      const Level inner = lattice.join(pc, hs_expr_level(env, *c.expr, lattice));
      return hs_join(hs_check(inner, env, *c.first, lattice),
                     hs_check(inner, env, *c.second, lattice), lattice);
    }
    case Cmd::Kind::While:
      return hs_loop(pc, env, c, lattice);
  }
  fail(ErrorKind::Internal, "unknown command kind");
}

namespace {

struct Builder {
  const Lattice& lattice;
  FreshCounter fc;
  std::vector<MergeConflict> conflicts;
  std::vector<ExtensionViolation> extension_violations;
  std::size_t overlaps = 0;

  struct Out {
    HsEnv env;
    ActiveSet alpha;
    CmdPtr cmd;
    ConstructedEnv built;
  };

  // env_alpha: every active copy gets its source variable's level.
  static ConstructedEnv lift(const HsEnv& env, const ActiveSet& a, const char* rule) {
    ConstructedEnv out;
    for (const auto& [v, copy] : a.entries()) {
      auto it = env.find(v);
      if (it == env.end()) fail(ErrorKind::Config, "no level for variable '" + v + "'");
      out[copy] = Binding{it->second, rule};
    }
    return out;
  }

  // Union in which earlier environments win; disagreements are recorded.
  ConstructedEnv gmerge(std::initializer_list<const ConstructedEnv*> parts) {
    ConstructedEnv out;
    for (const ConstructedEnv* part : parts) {
      for (const auto& [v, b] : *part) {
        auto [it, inserted] = out.emplace(v, b);
        if (inserted) continue;
        ++overlaps;
        if (it->second.level != b.level) conflicts.push_back({v, it->second.level, b.level});
      }
    }
    return out;
  }

  void check_extension(const HsEnv& before, const ActiveSet& a, const HsEnv& after,
                       const ActiveSet& a2, int line) {
    for (const auto& [v, copy] : a.entries()) {
      if (a2.contains(v) && a2.at(v) == copy) {
        auto b = before.find(v);
        auto f = after.find(v);
        if (b != before.end() && f != after.end() && b->second != f->second) {
          extension_violations.push_back({v, line, b->second, f->second});
        }
      }
    }
  }

  Out build(Level pc, const HsEnv& env, const ActiveSet& a, const CmdPtr& c) {
    Out out = build_inner(pc, env, a, c);
    check_extension(env, a, out.env, out.alpha, c->line);
    return out;
  }

  Out build_inner(Level pc, const HsEnv& env, const ActiveSet& a, const CmdPtr& c) {
    switch (c->kind) {
      case Cmd::Kind::Skip:
        return {env, a, c, lift(env, a, "carried")};
      case Cmd::Kind::Assign:
        fail(ErrorKind::Usage, "type construction requires a fully bracketed program (line " +
                                   std::to_string(c->line) + ")");
      case Cmd::Kind::BracketAssign: {
        const Level tau = lattice.join(pc, hs_expr_level(env, *c->expr, lattice));
        HsEnv env_out = env;
        env_out[c->target] = tau;
        TransformStep step = transform_cmd(a, c, fc);
        ConstructedEnv built = lift(env, a, "carried");
        built[step.alpha.at(c->target)] = Binding{tau, "assign"};
        return {std::move(env_out), std::move(step.alpha), std::move(step.cmd),
                std::move(built)};
      }
      case Cmd::Kind::Seq: {
        Out first = build(pc, env, a, c->first);
        Out second = build(pc, first.env, first.alpha, c->second);
        return {std::move(second.env), std::move(second.alpha),
                make_seq(first.cmd, second.cmd), gmerge({&first.built, &second.built})};
      }
      case Cmd::Kind::If: {
        const Level tau = hs_expr_level(env, *c->expr, lattice);
        ExprPtr guard = transform_expr(a, c->expr);
        const Level inner = lattice.join(tau, pc);
        Out b1 = build(inner, env, a, c->first);
        Out b2 = build(inner, env, a, c->second);
        ActiveSet a3 = phi_merge(b1.alpha, b2.alpha, fc);
        HsEnv joined = hs_join(b1.env, b2.env, lattice);
        ConstructedEnv merged_at_exit = lift(joined, a3, "if-merge");
        CmdPtr then_branch = seq_nonskip(b1.cmd, set_assign(a3, b1.alpha, c->line));
        CmdPtr else_branch = seq_nonskip(b2.cmd, set_assign(a3, b2.alpha, c->line));
        return {std::move(joined), a3,
                make_if(std::move(guard), std::move(then_branch), std::move(else_branch),
                        c->line),
                gmerge({&b1.built, &b2.built, &merged_at_exit})};
      }
      case Cmd::Kind::While: {
        const HsEnv fixpoint = hs_check(pc, env, *c, lattice);
        const Level tau = hs_expr_level(fixpoint, *c->expr, lattice);
        // First pass of the loop transformation, exactly as in transform_cmd.
        TransformStep first = transform_cmd(a, c->first, fc);
        ActiveSet a2 = phi_merge(a, first.alpha, fc);
        Out body = build(lattice.join(tau, pc), fixpoint, a2, c->first);
        ExprPtr guard = transform_expr(a2, c->expr);
        CmdPtr loop_body = seq_nonskip(body.cmd, set_assign(a2, body.alpha, c->line));
        CmdPtr loop = make_while(std::move(guard), std::move(loop_body), c->line);
        loop = seq_nonskip(set_assign(a2, a, c->line), loop);
        ConstructedEnv before = lift(env, a, "loop-entry");
        return {fixpoint, a2, std::move(loop), gmerge({&body.built, &before})};
      }
    }
    fail(ErrorKind::Internal, "unknown command kind");
  }
};

}  // namespace

Construction construct_env(Level pc, const HsEnv& env, const CmdPtr& c, const Lattice& lattice) {
  std::set<std::string> vars = program_vars(*c);
  for (const auto& [v, l] : env) vars.insert(v);
  for (const std::string& v : vars) {
    if (!env.count(v)) fail(ErrorKind::Config, "no initial level for variable '" + v + "'");
  }
  Builder b{lattice, {}, {}, {}, 0};
  Construction out;
  out.alpha_in = ActiveSet::identity(vars);
  Builder::Out built = b.build(pc, env, out.alpha_in, c);
  out.env_out = std::move(built.env);
  out.alpha_out = std::move(built.alpha);
  out.program = number_sites(built.cmd);
  out.env = std::move(built.built);
  out.overlaps = b.overlaps;
  out.conflicts = std::move(b.conflicts);
  out.extension_violations = std::move(b.extension_violations);
  return out;
}

TypingEnv to_typing_env(const ConstructedEnv& env) {
  TypingEnv out;
  for (const auto& [v, b] : env) out.set(v, Label::of(b.level));
  return out;
}

VerifyReport verify_construction(const Construction& built, Level pc, const Lattice& lattice) {
  VerifyReport report;
  const std::set<std::string> initial = built.alpha_in.range();
  const std::set<std::string> fresh = fresh_vars(*built.program);
  for (const auto& [v, b] : built.env) {
    if (!initial.count(v) && !fresh.count(v)) report.outside_domain.push_back(v);
  }
  report.domain_ok = report.outside_domain.empty();

  TransformResult t;
  t.initial = built.alpha_in;
  t.alpha_final = built.alpha_out;
  t.program = built.program;
  CheckOptions options;
  options.levels_only = true;
  report.check = check_transformed(t, to_typing_env(built.env), lattice, options, pc);
  report.accepted = report.check.accept;
  report.ok = report.accepted && report.domain_ok;
  return report;
}

}  // namespace iflow

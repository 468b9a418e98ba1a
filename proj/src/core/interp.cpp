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

#include "core/interp.hpp"

#include <utility>

#include "core/error.hpp"
#include "core/printer.hpp"

namespace iflow {

namespace {

// Seq node built directly, without the right-nesting normalization of
// make_seq: the residual program of a step need not be canonical.
CmdPtr seq(CmdPtr first, CmdPtr second) {
  auto c = std::make_shared<Cmd>();
  c->kind = Cmd::Kind::Seq;
  c->line = first->line;
  c->first = std::move(first);
  c->second = std::move(second);
  return c;
}

struct Stepper {
  const AssignHook* hook = nullptr;
  // The statement that failed, for error reporting.
  const Cmd* current = nullptr;

  CmdPtr advance(const CmdPtr& c, Memory& m) {
    current = c.get();
    switch (c->kind) {
      case Cmd::Kind::Skip:
        fail(ErrorKind::Internal, "step: no transition from skip");
      case Cmd::Kind::Assign:
      case Cmd::Kind::BracketAssign: {
        const std::int64_t v = eval_expr(m, *c->expr);
        if (hook && *hook) {
          Memory before = m;
          m[c->target] = v;
          (*hook)(*c, before, m);
        } else {
          m[c->target] = v;
        }
        return make_skip(c->line);
      }
      case Cmd::Kind::Seq: {
        if (c->first->kind == Cmd::Kind::Skip) return c->second;
        CmdPtr first = advance(c->first, m);
        return seq(std::move(first), c->second);
      }
      case Cmd::Kind::If:
        return eval_expr(m, *c->expr) != 0 ? c->first : c->second;
      case Cmd::Kind::While:
        return make_if(c->expr, seq(c->first, c), make_skip(c->line), c->line);
    }
    fail(ErrorKind::Internal, "unknown command kind");
  }
};

}  // namespace

Config step(const Config& cfg) {
  Config next;
  next.memory = cfg.memory;
  Stepper s;
  next.cmd = s.advance(cfg.cmd, next.memory);
  next.steps = cfg.steps + 1;
  return next;
}

RunOutcome run(const CmdPtr& c, Memory m0, std::int64_t max_steps, const AssignHook& hook) {
  Stepper s;
  s.hook = &hook;
  CmdPtr cur = c;
  Memory m = std::move(m0);
  std::int64_t steps = 0;
  while (cur->kind != Cmd::Kind::Skip) {
    if (steps >= max_steps) return StepLimit{std::move(m), steps};
    try {
      cur = s.advance(cur, m);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Runtime) throw;
      return RuntimeFailure{std::move(m), s.current ? s.current->line : 0, e.what()};
    }
    ++steps;
  }
  return Terminated{std::move(m), steps};
}

RunOutcome erasure_run(const CmdPtr& c, Memory m0, const TypingEnv& env,
                       const LivenessMap& live, std::int64_t max_steps) {
  // Variables whose labels mention each assignee, computed once.
  std::map<std::string, std::vector<std::string>> dependents;
  for (const auto& [var, label] : env.entries()) {
    for (const std::string& x : label_free_vars(*label)) dependents[x].push_back(var);
  }
  AssignHook hook = [&](const Cmd& assign, const Memory&, Memory& after) {
    auto it = dependents.find(assign.target);
    if (it == dependents.end()) return;
    const VarSet& live_after = live.at(assign.site).after;
    for (const std::string& v : it->second) {
      if (live_after.count(v) == 0) after[v] = 0;
    }
  };
  return run(c, std::move(m0), max_steps, hook);
}

std::string describe(const RunOutcome& outcome) {
  if (const auto* t = std::get_if<Terminated>(&outcome)) {
    return "terminated after " + std::to_string(t->steps) + " steps: " + render_memory(t->final);
  }
  if (const auto* l = std::get_if<StepLimit>(&outcome)) {
    return "step limit reached after " + std::to_string(l->steps) + " steps";
  }
  const auto& f = std::get<RuntimeFailure>(outcome);
  return "runtime error at line " + std::to_string(f.line) + ": " + f.reason;
}

}  // namespace iflow

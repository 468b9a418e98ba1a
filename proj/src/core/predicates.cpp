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

#include "core/predicates.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace iflow {

void FactSet::add(Fact f) {
  if (!contains(f)) facts_.push_back(std::move(f));
}

bool FactSet::contains(const Fact& f) const {
  return std::find(facts_.begin(), facts_.end(), f) != facts_.end();
}

void FactSet::kill(const std::string& var) {
  std::erase_if(facts_, [&](const Fact& f) { return free_vars(*f.expr).count(var) != 0; });
}

FactSet FactSet::intersect(const FactSet& other) const {
  FactSet out;
  for (const Fact& f : facts_) {
    if (other.contains(f)) out.facts_.push_back(f);
  }
  return out;
}

bool FactSet::satisfied_by(const Memory& m) const {
  return std::all_of(facts_.begin(), facts_.end(), [&](const Fact& f) {
    return (eval_expr(m, *f.expr) != 0) == f.holds;
  });
}

namespace {

FactSet propagate(const Cmd& c, FactSet in, PredicateMap& out) {
  switch (c.kind) {
    case Cmd::Kind::Skip:
      return in;
    case Cmd::Kind::Seq:
      return propagate(*c.second, propagate(*c.first, std::move(in), out), out);
    case Cmd::Kind::Assign:
    case Cmd::Kind::BracketAssign: {
      out[c.site] = in;
      in.kill(c.target);
      if (free_vars(*c.expr).count(c.target) == 0) {
        in.add(Fact{Expr::binary(BinOp::Eq, Expr::variable(c.target), c.expr), true});
      }
      return in;
    }
    case Cmd::Kind::If: {
      FactSet then_in = in;
      then_in.add(Fact{c.expr, true});
      FactSet else_in = std::move(in);
      else_in.add(Fact{c.expr, false});
      FactSet then_out = propagate(*c.first, std::move(then_in), out);
      FactSet else_out = propagate(*c.second, std::move(else_in), out);
      return then_out.intersect(else_out);
    }
    case Cmd::Kind::While: {
      // Facts that survive every iteration: nothing the body writes.
      for (const std::string& v : assigned_vars(*c.first)) in.kill(v);
      FactSet body_in = in;
      body_in.add(Fact{c.expr, true});
      propagate(*c.first, std::move(body_in), out);
      in.add(Fact{c.expr, false});
      return in;
    }
  }
  fail(ErrorKind::Internal, "unknown command kind");
}

}  // namespace

PredicateMap predicates(const Cmd& c, const Memory& init) {
  FactSet entry;
  for (const auto& [name, value] : init) {
    entry.add(Fact{Expr::binary(BinOp::Eq, Expr::variable(name), Expr::literal(value)), true});
  }
  PredicateMap out;
  propagate(c, std::move(entry), out);
  return out;
}

}  // namespace iflow

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

#include "core/cfg.hpp"

#include "core/error.hpp"

namespace iflow {

namespace {

int add_node(Cfg& g, CfgNode::Kind kind, const Cmd* cmd) {
  g.nodes.push_back(CfgNode{kind, cmd, {}});
  return static_cast<int>(g.nodes.size()) - 1;
}

// Returns the entry node of `c`, whose exits flow to `next`.
int build(Cfg& g, const Cmd& c, int next) {
  switch (c.kind) {
    case Cmd::Kind::Skip: {
      const int n = add_node(g, CfgNode::Kind::Skip, &c);
      g.nodes[n].succ = {next};
      return n;
    }
    case Cmd::Kind::Assign: {
      const int n = add_node(g, CfgNode::Kind::Assign, &c);
      g.nodes[n].succ = {next};
      return n;
    }
    case Cmd::Kind::BracketAssign:
      fail(ErrorKind::Usage, "control-flow graph requires a transformed program");
    case Cmd::Kind::Seq: {
      const int second = build(g, *c.second, next);
      return build(g, *c.first, second);
    }
    case Cmd::Kind::If: {
      const int n = add_node(g, CfgNode::Kind::Guard, &c);
      const int then_entry = build(g, *c.first, next);
      const int else_entry = build(g, *c.second, next);
      g.nodes[n].succ = {then_entry, else_entry};
      return n;
    }
    case Cmd::Kind::While: {
      const int n = add_node(g, CfgNode::Kind::Guard, &c);
      const int body_entry = build(g, *c.first, n);
      g.nodes[n].succ = {body_entry, next};
      return n;
    }
  }
  fail(ErrorKind::Internal, "unknown command kind");
}

}  // namespace

Cfg build_cfg(const Cmd& c) {
  Cfg g;
  add_node(g, CfgNode::Kind::Final, nullptr);
  g.entry = build(g, c, Cfg::kFinal);
  return g;
}

}  // namespace iflow

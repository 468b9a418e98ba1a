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

#include <functional>

#include "doctest.h"

#include "core/cfg.hpp"
#include "core/gen.hpp"
#include "core/liveness.hpp"
#include "core/parser.hpp"
#include "core/printer.hpp"
#include "core/transform.hpp"
#include "support.hpp"

using namespace iflow;

namespace {

// Structural backward analysis, written independently of the CFG solver:
// loops iterate their own local fixpoint.
struct Oracle {
  const TypingEnv& env;
  std::map<SiteId, LiveSets> sites;

  VarSet before(const Cmd& c, const VarSet& out) {
    switch (c.kind) {
      case Cmd::Kind::Skip: return out;
      case Cmd::Kind::Assign: {
        VarSet in = out;
        in.erase(c.target);
        const VarSet g = read_set(*c.expr, env);
        in.insert(g.begin(), g.end());
        sites[c.site] = {in, out};
        return in;
      }
      case Cmd::Kind::Seq: return before(*c.first, before(*c.second, out));
      case Cmd::Kind::If: {
        VarSet in = read_set(*c.expr, env);
        for (const Cmd* b : {c.first.get(), c.second.get()}) {
          const VarSet s = before(*b, out);
          in.insert(s.begin(), s.end());
        }
        return in;
      }
      case Cmd::Kind::While: {
        VarSet head = out;
        while (true) {
          VarSet next = read_set(*c.expr, env);
          next.insert(out.begin(), out.end());
          const VarSet body = before(*c.first, head);
          next.insert(body.begin(), body.end());
          if (next == head) return head;
          head = next;
        }
      }
      case Cmd::Kind::BracketAssign: break;
    }
    FAIL("unexpected command");
    return {};
  }
};

}  // namespace

TEST_SUITE("liveness") {
  TEST_CASE("straight-line code") {
    const CmdPtr p = number_sites(parse_program("a := b; c := a + d; b := 0;").program);
    const TypingEnv env;
    const ActiveSet fin(ActiveSet::Map{{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}});
    const LivenessMap live = liveness(*p, env, fin);
    CHECK(live.at(SiteId{1}).before == VarSet{"b", "d"});
    CHECK(live.at(SiteId{2}).before == VarSet{"a", "d"});
    CHECK(live.at(SiteId{2}).after == VarSet{"a", "c", "d"});
    CHECK(live.at(SiteId{3}).after == VarSet{"a", "b", "c", "d"});
    CHECK(live.entry == VarSet{"b", "d"});  // c is overwritten first
  }

  TEST_CASE("reading a variable keeps its label's variables alive") {
    const Lattice& l = Lattice::two_point();
    TypingEnv env;
    env.set("y", parse_label("(x > 0 ? H : L)", l));
    const CmdPtr p = number_sites(parse_program("x := 1; l := y;").program);
    const ActiveSet fin(ActiveSet::Map{{"l", "l"}});
    const LivenessMap live = liveness(*p, env, fin);
    CHECK(live.at(SiteId{1}).after == VarSet{"x", "y"});
    CHECK(live.at(SiteId{2}).before == VarSet{"x", "y"});
  }

  TEST_CASE("only final active copies are live at the end") {
    const TransformResult t = transform_program(parse_program("x := h; [x := 0]; l := x;").program);
    const LivenessMap live = liveness(*t.program, TypingEnv{}, t.alpha_final);
    // x is dead (x@1 replaces it) and l is overwritten before the end.
    CHECK(live.at(SiteId{1}).after == VarSet{"h"});
    CHECK(live.at(SiteId{3}).after == VarSet{"h", "l", "x@1"});
  }

  TEST_CASE("loop counter update in the parity examples") {
    // The secure variant has y overwritten before the next read.
    const CheckReport b = testing::corpus_check("loop_parity");
    const CheckReport a = testing::corpus_check("loop_parity_leak");
    CHECK(b.live.at(SiteId{3}).after == VarSet{"h", "l", "x"});
    // l is active at the end and not overwritten on the even path, so it is
    // live here as well.
    CHECK(a.live.at(SiteId{3}).after == VarSet{"h", "l", "x", "y"});
  }

  TEST_CASE("the CFG solver agrees with a structural oracle") {
    GenConfig cfg;
    cfg.max_depth = 4;
    cfg.loop_probability = 0.3;
    const Lattice& l = Lattice::two_point();
    for (std::uint64_t i = 0; i < 400; ++i) {
      Rng rng = derive_rng(13, i);
      const CmdPtr src = gen_program(cfg, rng);
      const LabelFile labels = gen_labels(cfg, l, rng, 0.5);
      const TransformResult t = transform_program(src);
      TypingEnv env;
      for (const auto& v : program_vars(*t.program)) env.set(v, labels.resolve(v));
      const LivenessMap live = liveness(*t.program, env, t.alpha_final);
      Oracle oracle{env, {}};
      const VarSet entry = oracle.before(*t.program, t.alpha_final.range());
      REQUIRE_MESSAGE(entry == live.entry, render_program(*t.program));
      for (const auto& [site, sets] : oracle.sites) {
        CHECK(live.at(site).before == sets.before);
        CHECK(live.at(site).after == sets.after);
      }
    }
  }

  TEST_CASE("CFG shape") {
    const CmdPtr p = number_sites(parse_program("while (x) { x := x - 1; } y := 1;").program);
    const Cfg g = build_cfg(*p);
    CHECK(g.nodes.size() == 4);  // final, guard, two assignments
    const CfgNode& guard = g.nodes[g.entry];
    CHECK(guard.kind == CfgNode::Kind::Guard);
    CHECK(guard.succ.size() == 2);
    CHECK_THROWS(build_cfg(*parse_program("[x := 1];").program));
  }
}

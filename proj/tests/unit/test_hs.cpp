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

#include "doctest.h"

#include "core/gen.hpp"
#include "core/hs.hpp"
#include "core/interp.hpp"
#include "core/parser.hpp"
#include "core/transform.hpp"
#include "support.hpp"

using namespace iflow;

namespace {

const Lattice& two() { return Lattice::two_point(); }

HsEnv env_of(std::initializer_list<std::pair<const char*, const char*>> items,
             const Lattice& l = two()) {
  HsEnv env;
  for (const auto& [v, lvl] : items) env[v] = l.level(lvl);
  return env;
}

HsEnv hs(const std::string& program, const HsEnv& env) {
  return hs_check(two().bottom(), env, *parse_program(program).program, two());
}

}  // namespace

TEST_SUITE("hs") {
  TEST_CASE("levels float with assignments") {
    const HsEnv e = env_of({{"h", "H"}, {"l", "L"}});
    CHECK(hs("l := h;", e).at("l") == two().top());
    CHECK(hs("l := h; l := 0;", e).at("l") == two().bottom());
    CHECK(hs("if (h > 0) { l := 1; }", e).at("l") == two().top());
    CHECK(hs("if (l > 0) { l := h; } else { skip; }", e).at("l") == two().top());
  }

  TEST_CASE("loops iterate to a fixpoint") {
    const HsEnv e = env_of({{"h", "H"}, {"x", "L"}, {"y", "L"}, {"z", "L"}});
    const HsEnv r = hs("while (x < 3) { y := z; z := h; x := x + 1; }", e);
    CHECK(r.at("z") == two().top());
    CHECK(r.at("y") == two().top());  // only after the second iteration
    CHECK(r.at("x") == two().bottom());
  }

  TEST_CASE("monotone in the initial environment") {
    GenConfig cfg;
    cfg.max_depth = 4;
    const Lattice& l = testing::diamond();
    for (std::uint64_t i = 0; i < 300; ++i) {
      Rng rng = derive_rng(29, i);
      const CmdPtr p = gen_program(cfg, rng);
      HsEnv lo;
      HsEnv hi;
      std::uniform_int_distribution<int> d(0, 3);
      for (const auto& v : cfg.vars) {
        lo[v] = Level{d(rng)};
        hi[v] = l.join(lo[v], Level{d(rng)});
      }
      const HsEnv a = hs_check(l.bottom(), lo, *p, l);
      const HsEnv b = hs_check(l.bottom(), hi, *p, l);
      for (const auto& v : cfg.vars) REQUIRE(l.leq(a.at(v), b.at(v)));
    }
  }

  TEST_CASE("final low variables do not depend on high inputs") {
    GenConfig cfg;
    cfg.max_depth = 4;
    const Lattice& l = two();
    int checked = 0;
    for (std::uint64_t i = 0; i < 400; ++i) {
      Rng rng = derive_rng(31, i);
      const CmdPtr p = gen_program(cfg, rng);
      HsEnv env;
      for (const auto& v : cfg.vars) env[v] = v == "h" || v == "z" ? l.top() : l.bottom();
      const HsEnv out = hs_check(l.bottom(), env, *p, l);
      const std::set<std::string> vars(cfg.vars.begin(), cfg.vars.end());
      const Memory m1 = gen_memory(vars, cfg, rng);
      Memory m2 = m1;
      m2["h"] = gen_memory({"h"}, cfg, rng).at("h");
      m2["z"] = gen_memory({"z"}, cfg, rng).at("z");
      const RunOutcome r1 = run(p, m1);
      const RunOutcome r2 = run(p, m2);
      const auto* t1 = std::get_if<Terminated>(&r1);
      const auto* t2 = std::get_if<Terminated>(&r2);
      if (!t1 || !t2) continue;
      ++checked;
      for (const auto& v : cfg.vars) {
        if (out.at(v) == l.bottom()) REQUIRE(t1->final.at(v) == t2->final.at(v));
      }
    }
    CHECK(checked > 200);
  }

  TEST_CASE("constructed labels for a bracketed program") {
    const Lattice& l = two();
    const CmdPtr p = parse_program("[x := h]; [x := 0]; [l := x];").program;
    const Construction c = construct_env(l.bottom(), env_of({{"h", "H"}, {"l", "L"}, {"x", "L"}}),
                                         p, l);
    CHECK(c.alpha_out.at("x") == "x@2");
    CHECK(c.alpha_out.at("l") == "l@1");
    CHECK(c.env.at("x@1").level == l.top());
    CHECK(c.env.at("x@2").level == l.bottom());
    CHECK(c.env.at("l@1").level == l.bottom());
    CHECK(c.env.at("h").level == l.top());
    CHECK(c.env_out.at("x") == l.bottom());
    const VerifyReport v = verify_construction(c, l.bottom(), l);
    CHECK(v.ok);
    CHECK(v.domain_ok);
    CHECK_THROWS(construct_env(l.bottom(), env_of({{"x", "L"}}),
                               parse_program("x := 1;").program, l));
  }

  TEST_CASE("construction tracks the flow-sensitive result") {
    GenConfig cfg;
    cfg.max_depth = 3;
    const Lattice& l = testing::diamond();
    for (std::uint64_t i = 0; i < 200; ++i) {
      Rng rng = derive_rng(37, i);
      const CmdPtr p = bracket_all(gen_program(cfg, rng));
      HsEnv env;
      std::uniform_int_distribution<int> d(0, 3);
      for (const auto& v : cfg.vars) env[v] = Level{d(rng)};
      const Construction c = construct_env(l.bottom(), env, p, l);
      const HsEnv direct = hs_check(l.bottom(), env, *p, l);
      for (const auto& [v, lvl] : direct) {
        REQUIRE(c.env_out.at(v) == lvl);
        REQUIRE(c.env.at(c.alpha_out.at(v)).level == lvl);
      }
      REQUIRE(verify_construction(c, l.bottom(), l).ok);
      // Same program text as the plain transformation.
      REQUIRE(same_cmd(c.program, transform_program(p).program));
    }
  }
}

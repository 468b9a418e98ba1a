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
#include "core/label.hpp"
#include "core/parser.hpp"
#include "core/projection.hpp"
#include "support.hpp"

using namespace iflow;

TEST_SUITE("label") {
  TEST_CASE("conditional labels evaluate against the memory") {
    const Lattice& l = Lattice::two_point();
    const LabelPtr t = parse_label("(x > 0 ? H : L)", l);
    CHECK(label_eval({{"x", 1}}, *t, l) == l.top());
    CHECK(label_eval({{"x", 0}}, *t, l) == l.bottom());
    CHECK(label_free_vars(*t) == std::set<std::string>{"x"});
    CHECK_FALSE(is_bare_level(*t));
  }

  TEST_CASE("join and meet labels evaluate pointwise") {
    const Lattice& l = testing::diamond();
    const LabelPtr a = parse_label("(x > 0 ? M1 : L)", l);
    const LabelPtr b = parse_label("(y % 2 == 0 ? M2 : H)", l);
    const LabelPtr j = Label::join(a, b);
    const LabelPtr m = Label::meet(a, b);
    for (int x = -3; x <= 3; ++x) {
      for (int y = -3; y <= 3; ++y) {
        const Memory mem{{"x", x}, {"y", y}};
        const Level la = label_eval(mem, *a, l);
        const Level lb = label_eval(mem, *b, l);
        CHECK(label_eval(mem, *j, l) == l.join(la, lb));
        CHECK(label_eval(mem, *m, l) == l.meet(la, lb));
      }
    }
  }

  TEST_CASE("guards are collected in order") {
    const Lattice& l = Lattice::two_point();
    std::vector<ExprPtr> guards;
    collect_guards(*parse_label("(a > 0 ? (b > 0 ? H : L) : L) \\/ (c == 1 ? L : H)", l), guards);
    REQUIRE(guards.size() == 3);
  }
}

TEST_SUITE("projection") {
  TEST_CASE("low equivalence under a dependent environment") {
    const Lattice& l = Lattice::two_point();
    TypingEnv env;
    env.set("x", Label::of(l.bottom()));
    env.set("y", parse_label("(x > 0 ? H : L)", l));
    env.set("h", Label::of(l.top()));
    const Level low = l.bottom();
    CHECK(low_equiv({{"x", 1}, {"y", 5}, {"h", 1}}, {{"x", 1}, {"y", 7}, {"h", 2}}, env, low, l));
    CHECK_FALSE(
        low_equiv({{"x", 0}, {"y", 5}, {"h", 1}}, {{"x", 0}, {"y", 7}, {"h", 1}}, env, low, l));
    CHECK_FALSE(
        low_equiv({{"x", 0}, {"y", 5}, {"h", 1}}, {{"x", 1}, {"y", 5}, {"h", 1}}, env, low, l));
    CHECK_FALSE(
        low_equiv({{"x", 1}, {"y", 5}, {"h", 1}}, {{"x", 1}, {"y", 5}, {"h", 2}}, env, l.top(), l));
  }

  TEST_CASE("low equivalence is reflexive and symmetric") {
    const Lattice& l = testing::diamond();
    GenConfig cfg;
    for (std::uint64_t i = 0; i < 200; ++i) {
      Rng rng = derive_rng(11, i);
      const LabelFile labels = gen_labels(cfg, l, rng, 0.5);
      TypingEnv env;
      for (const auto& v : cfg.vars) env.set(v, labels.resolve(v));
      const std::set<std::string> vars(cfg.vars.begin(), cfg.vars.end());
      const Memory a = gen_memory(vars, cfg, rng);
      Memory b = a;
      b["h"] += 1;
      b["x"] = gen_memory({"x"}, cfg, rng).at("x");
      for (int k = 0; k < static_cast<int>(l.size()); ++k) {
        const Level obs{k};
        CHECK(low_equiv(a, a, env, obs, l));
        CHECK(low_equiv(a, b, env, obs, l) == low_equiv(b, a, env, obs, l));
      }
    }
  }

  TEST_CASE("projection renames through the active set") {
    const ActiveSet a(ActiveSet::Map{{"x", "x@2"}, {"y", "y"}});
    const Memory m = project_memory({{"x", 1}, {"x@2", 5}, {"y", 3}}, a);
    CHECK(m == Memory{{"x", 5}, {"y", 3}});
    CHECK_THROWS(project_memory({{"x", 1}}, a));
    const Lattice& l = Lattice::two_point();
    TypingEnv env;
    env.set("x@2", Label::of(l.top()));
    env.set("y", Label::of(l.bottom()));
    const TypingEnv p = project_env(env, a);
    CHECK(p.lookup("x")->level == l.top());
  }
}

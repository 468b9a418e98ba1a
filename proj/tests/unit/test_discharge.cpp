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

#include "core/discharge.hpp"
#include "core/env.hpp"
#include "core/gen.hpp"
#include "core/parser.hpp"
#include "support.hpp"

using namespace iflow;

namespace {

FactSet facts(std::initializer_list<const char*> exprs) {
  FactSet f;
  for (const char* e : exprs) f.add({parse_expr(e), true});
  return f;
}

LabelPtr lab(const char* text, const Lattice& l = Lattice::two_point()) {
  return parse_label(text, l);
}

}  // namespace

TEST_SUITE("discharge") {
  TEST_CASE("path condition makes the dependent label high") {
    const DischargeResult r =
        discharge(facts({"x % 2 == 0"}), *lab("L \\/ H"), *lab("(x % 2 == 0 ? H : L)"),
                  Lattice::two_point());
    CHECK(r.status == ObligationStatus::Valid);
    CHECK(r.cases == 2);
    CHECK(r.skipped == 1);
  }

  TEST_CASE("negated copy rules out the high case") {
    const DischargeResult r = discharge(facts({"x@1 > 0", "x@1 == 0 - x"}),
                                        *lab("(x > 0 ? H : L)"), *lab("L"), Lattice::two_point());
    CHECK(r.status == ObligationStatus::Valid);
  }

  TEST_CASE("violations come with a witness") {
    const Lattice& l = Lattice::two_point();
    const DischargeResult r = discharge(FactSet{}, *lab("H"), *lab("L"), l);
    REQUIRE(r.status == ObligationStatus::Violated);
    REQUIRE(r.witness);
    CHECK(r.witness->lhs_level == l.top());
    CHECK(r.witness->rhs_level == l.bottom());

    const DischargeResult d =
        discharge(facts({"y == 3"}), *lab("(x > 0 ? H : L)"), *lab("L"), l);
    REQUIRE(d.status == ObligationStatus::Violated);
    REQUIRE(d.witness->memory);
    CHECK(d.witness->memory->at("x") > 0);
    CHECK(d.witness->memory->at("y") == 3);
  }

  TEST_CASE("too many guards is unknown") {
    std::string text = "L";
    for (int i = 0; i < 13; ++i) text = "(v" + std::to_string(i) + " > 0 ? H : " + text + ")";
    const DischargeResult r = discharge(FactSet{}, *lab(text.c_str()), *lab("H"),
                                        Lattice::two_point(), {.guard_cap = 12});
    CHECK(r.status == ObligationStatus::Unknown);
  }

  TEST_CASE("verdicts agree with evaluation on sampled memories") {
    const Lattice& l = testing::diamond();
    GenConfig cfg;
    cfg.vars = {"a", "b", "c"};
    int valid = 0;
    int violated = 0;
    for (std::uint64_t i = 0; i < 300; ++i) {
      Rng rng = derive_rng(23, i);
      // Random labels over the same guard pool.
      const LabelFile f1 = gen_labels(cfg, l, rng, 0.9);
      const LabelFile f2 = gen_labels(cfg, l, rng, 0.9);
      const LabelPtr lhs = Label::join(f1.resolve("b"), f1.resolve("c"));
      const LabelPtr rhs = f2.resolve(i % 2 ? "b" : "c");
      FactSet hypo;
      hypo.add({gen_expr(cfg, rng, 1), true});
      const DischargeResult r = discharge(hypo, *lhs, *rhs, l);
      if (r.status == ObligationStatus::Valid) {
        ++valid;
        for (int k = 0; k < 200; ++k) {
          Memory m;
          for (const auto& v : cfg.vars) m[v] = std::uniform_int_distribution<int>(-8, 8)(rng);
          bool holds = false;
          try {
            holds = hypo.satisfied_by(m);
          } catch (const Error&) {
            continue;
          }
          if (holds) REQUIRE(l.leq(label_eval(m, *lhs, l), label_eval(m, *rhs, l)));
        }
      } else if (r.status == ObligationStatus::Violated && r.witness && r.witness->memory) {
        ++violated;
        Memory m = *r.witness->memory;
        for (const auto& v : cfg.vars) m.try_emplace(v, 0);
        CHECK(hypo.satisfied_by(m));
        CHECK_FALSE(l.leq(label_eval(m, *lhs, l), label_eval(m, *rhs, l)));
      }
    }
    CHECK(valid > 20);
    CHECK(violated > 20);
  }
}

TEST_SUITE("env") {
  TEST_CASE("well-formed environments") {
    const Lattice& l = Lattice::two_point();
    TypingEnv env;
    env.set("x", lab("L"));
    env.set("y", lab("(x > 0 ? H : L)"));
    CHECK(env_wellformed(env, l).empty());
  }

  TEST_CASE("dependencies must be bare, not self-referential, and no higher") {
    const Lattice& l = Lattice::two_point();
    TypingEnv chained;
    chained.set("x", lab("L"));
    chained.set("y", lab("(x > 0 ? H : L)"));
    chained.set("z", lab("(y > 0 ? H : L)"));
    CHECK_FALSE(env_wellformed(chained, l).empty());

    TypingEnv self;
    self.set("y", lab("(y > 0 ? H : L)"));
    CHECK_FALSE(env_wellformed(self, l).empty());

    TypingEnv higher;
    higher.set("h", lab("H"));
    higher.set("y", lab("(h > 0 ? H : L)"));
    const auto v = env_wellformed(higher, l);
    REQUIRE(v.size() == 1);
    CHECK(v[0].var == "y");
    CHECK(v[0].dependency == "h");

    TypingEnv missing;
    missing.set("y", lab("(q > 0 ? H : L)"));
    CHECK_FALSE(env_wellformed(missing, l).empty());
  }
}

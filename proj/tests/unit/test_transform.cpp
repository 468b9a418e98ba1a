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
#include "core/interp.hpp"
#include "core/parser.hpp"
#include "core/printer.hpp"
#include "core/projection.hpp"
#include "core/transform.hpp"
#include "support.hpp"

using namespace iflow;

namespace {

TransformResult transform_text(const std::string& text) {
  return transform_program(parse_program(text).program);
}

}  // namespace

TEST_SUITE("transform") {
  TEST_CASE("bracketed assignment introduces a copy") {
    const TransformResult t = transform_text("x := h; [x := 0]; l := x;");
    CHECK(render_program(*t.program) == "x := h;\nx@1 := 0;\nl := x@1;\n");
    CHECK(t.alpha_final.at("x") == "x@1");
    CHECK(t.initial.at("x") == "x");
  }

  TEST_CASE("branches are reconciled by copy assignments") {
    const TransformResult t = transform_text("if (c > 0) { [x := 1]; } else { skip; }\ny := x;");
    CHECK(render_program(*t.program) ==
          "if (c > 0) {\n  x@1 := 1;\n  x@2 := x@1;\n} else {\n  x@2 := x;\n}\ny := x@2;\n");
    CHECK(t.alpha_final.at("x") == "x@2");
  }

  TEST_CASE("loops merge the entry and body copies") {
    const TransformResult t = transform_text("while (x < 3) { [x := x + 1]; }");
    // Pass one issues x@1 and the merge x@2; pass two issues x@3.
    CHECK(render_program(*t.program) ==
          "x@2 := x;\nwhile (x@2 < 3) {\n  x@3 := x@2 + 1;\n  x@2 := x@3;\n}\n");
    CHECK(t.alpha_final.at("x") == "x@2");
  }

  TEST_CASE("phi merge only renames disagreeing variables") {
    FreshCounter fc;
    const ActiveSet a1(ActiveSet::Map{{"x", "x"}, {"y", "y@1"}});
    const ActiveSet a2(ActiveSet::Map{{"x", "x@1"}, {"y", "y@1"}});
    fc.fresh("x");
    const ActiveSet m = phi_merge(a1, a2, fc);
    CHECK(m.at("x") == "x@2");
    CHECK(m.at("y") == "y@1");
    CHECK(render_program(*set_assign(m, a1)) == "x@2 := x;\n");
    CHECK(set_assign(m, m)->kind == Cmd::Kind::Skip);
  }

  TEST_CASE("active sets stay injective and base-preserving") {
    GenConfig cfg;
    cfg.max_depth = 4;
    cfg.bracket_probability = 0.5;
    for (std::uint64_t i = 0; i < 500; ++i) {
      Rng rng = derive_rng(3, i);
      const CmdPtr p = gen_program(cfg, rng);
      const TransformResult t = transform_program(p);
      REQUIRE(t.alpha_final.injective());
      REQUIRE(t.alpha_final.keeps_bases());
      REQUIRE(t.alpha_final.domain() == program_vars(*p));
      REQUIRE_FALSE(contains_bracket(*t.program));
      // The output is a program in its own right.
      const SourceFile back =
          parse_program(render_program(*t.program), {.allow_copy_names = true});
      REQUIRE(same_cmd(back.program, t.program));
      // Deterministic.
      REQUIRE(same_cmd(transform_program(p).program, t.program));
    }
  }

  TEST_CASE("transformed programs compute the source result on the final copies") {
    GenConfig cfg;
    cfg.max_depth = 4;
    cfg.loop_style = LoopStyle::Free;
    int compared = 0;
    for (std::uint64_t i = 0; i < 300; ++i) {
      Rng rng = derive_rng(5, i);
      const CmdPtr p = gen_program(cfg, rng);
      const TransformResult t = transform_program(p);
      const Memory m = gen_memory(program_vars(*p), cfg, rng);
      const RunOutcome s = run(p, m, 2000);
      const RunOutcome r = run(t.program, testing::transformed_memory(m, *t.program), 20000);
      if (const auto* sf = std::get_if<Terminated>(&s)) {
        const auto* rf = std::get_if<Terminated>(&r);
        REQUIRE(rf != nullptr);
        CHECK(project_memory(rf->final, t.alpha_final) == sf->final);
        ++compared;
      }
    }
    CHECK(compared > 100);
  }

  TEST_CASE("bracket_all brackets every assignment") {
    const CmdPtr p = parse_program("x := 1; if (x) { y := 2; } while (y) { y := y - 1; }").program;
    const CmdPtr b = bracket_all(p);
    CHECK(count_assignments(*b) == 3);
    CHECK(render_program(*b) ==
          "[x := 1];\nif (x) {\n  [y := 2];\n}\nwhile (y) {\n  [y := y - 1];\n}\n");
  }
}

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

#include "core/ni.hpp"
#include "support.hpp"

using namespace iflow;

namespace {

NiTrialReport ni_corpus(const std::string& name, std::int64_t trials, unsigned threads = 0) {
  const SourceFile src = testing::corpus_source(name);
  const LoadedLabels labels = testing::corpus_labels(name);
  CheckOptions opts;
  opts.init = src.init;
  const CheckReport r = check_program(src.program, labels.labels, labels.lattice, opts);
  NiOptions ni;
  ni.trials = trials;
  ni.threads = threads;
  return ni_test(src.program, r, labels.lattice, ni, src.init);
}

}  // namespace

TEST_SUITE("ni") {
  TEST_CASE("accepted program with a dependent label") {
    const NiTrialReport r = ni_corpus("exclusive_branches", 1000);
    CHECK(r.failed == 0);
    CHECK(r.passed + r.failed + r.discarded() == r.attempted);
    CHECK(r.passed > 900);
  }

  TEST_CASE("insecure programs yield counterexamples") {
    const NiTrialReport a = ni_corpus("label_downgrade", 10000);
    REQUIRE(a.counterexample);
    CHECK(a.counterexample->kind == NiFailureKind::Leak);
    CHECK(a.counterexample->variable == "l2");
    const NiTrialReport b = ni_corpus("loop_parity_leak", 10000);
    REQUIRE(b.counterexample);
    CHECK(b.counterexample->variable == "l");
  }

  TEST_CASE("thread count does not change the report") {
    const NiTrialReport a = ni_corpus("label_downgrade_bracket", 400, 1);
    const NiTrialReport b = ni_corpus("label_downgrade_bracket", 400, 4);
    CHECK(a.passed == b.passed);
    CHECK(a.failed == b.failed);
    CHECK(a.discarded() == b.discarded());
    REQUIRE(a.counterexample);
    REQUIRE(b.counterexample);
    CHECK(a.counterexample->trial == b.counterexample->trial);
    CHECK(a.counterexample->initial1 == b.counterexample->initial1);
  }

  TEST_CASE("random well-typed programs pass") {
    GenConfig cfg;
    const auto programs = testing::well_typed_programs(20, 77, cfg, testing::diamond());
    REQUIRE(programs.size() == 20);
    for (const auto& w : programs) {
      NiOptions ni;
      ni.trials = 200;
      ni.seed = w.index;
      const NiTrialReport r = ni_test(w.source, w.report, testing::diamond(), ni);
      CHECK(r.failed == 0);
    }
  }
}

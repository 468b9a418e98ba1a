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

// Acceptance suite: one PASS/FAIL line per criterion. Every threshold is a
// named constant below; none is derived from the run being judged.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core/discharge.hpp"
#include "core/hs.hpp"
#include "core/interp.hpp"
#include "core/ni.hpp"
#include "core/parser.hpp"
#include "core/printer.hpp"
#include "core/projection.hpp"
#include "support.hpp"

namespace {

using namespace iflow;
using namespace iflow::testing;

constexpr double kCorpusBudgetSeconds = 1.0;
constexpr int kAgreementPrograms = 1000;
constexpr int kAgreementMemories = 5;
constexpr double kAgreementBudgetSeconds = 60.0;
// Fewer comparable pairs than this would make the property vacuous.
constexpr double kAgreementMinComparedFraction = 0.5;
constexpr int kBracketFreePrograms = 1000;
constexpr std::int64_t kNiTrials = 1000;
constexpr std::int64_t kNiForceTrials = 10000;
constexpr std::size_t kNiRandomPrograms = 100;
constexpr double kNiBudgetSeconds = 300.0;
constexpr std::size_t kErasurePrograms = 500;
constexpr int kErasureMemories = 5;
constexpr int kConstructPrograms = 200;
constexpr double kConstructBudgetSeconds = 60.0;
constexpr std::uint64_t kSeed = 20261016;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

std::string join(const std::set<std::string>& s) {
  std::string out = "{";
  for (const auto& v : s) out += (out.size() > 1 ? "," : "") + v;
  return out + "}";
}

// 1. Corpus verdicts. Expected values are written out here rather than read
// from the manifest so that a manifest edit cannot move the goalposts.
Outcome corpus_conformance() {
  const std::vector<std::pair<std::string, bool>> expected = {
      {"reuse_bracket", true},           {"reuse_plain", false}, {"exclusive_branches", true},
      {"label_downgrade", false},          {"label_downgrade_bracket", false},           {"loop_parity_leak", false},
      {"loop_parity", true},           {"negate_bracket", true},   {"negate_plain", false},
      {"secret_guard_write", false},
  };
  std::vector<std::string> problems;
  const auto start = Clock::now();
  for (const auto& [name, accept] : expected) {
    const CheckReport r = corpus_check(name);
    if (r.accept != accept) problems.push_back(name + " verdict");
    if (name == "loop_parity_leak") {
      bool named = false;
      for (const auto& s : r.side_conditions) named = named || (s.line == 7 && s.target == "x");
      if (!named) problems.push_back("loop_parity_leak side condition not reported at line 7");
    }
  }
  const double elapsed = seconds_since(start);
  const LoadedLabels exclusive_branches = corpus_labels("exclusive_branches");
  const std::string y = render_label(*exclusive_branches.labels.resolve("y"), exclusive_branches.lattice);
  if (y != "(l1 < 0 ? H : L)") problems.push_back("exclusive_branches label of y is " + y);
  if (elapsed >= kCorpusBudgetSeconds) problems.push_back("over time budget");
  std::string detail = std::to_string(expected.size()) + " programs in " + fmt_seconds(elapsed);
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

// 2. Golden transformation of the bracketed program, and identity on
// bracket-free programs.
Outcome transformation_golden() {
  std::vector<std::string> problems;
  const SourceFile src = corpus_source("reuse_bracket");
  const TransformResult t = transform_program(src.program);
  const std::string rendered = render_program(*t.program, src.init, t.alpha_final);
  if (rendered != read_file(corpus_dir() / "reuse_bracket.transformed")) {
    problems.push_back("reuse_bracket render differs from golden");
  }
  // Hand-built oracle: x := h; x1 := 0; l := x1.
  const CmdPtr oracle = number_sites(make_seq(
      make_assign("x", Expr::variable("h")),
      make_seq(make_assign("x@1", Expr::literal(0)), make_assign("l", Expr::variable("x@1")))));
  if (!same_cmd(t.program, oracle)) problems.push_back("reuse_bracket structure differs");
  if (t.alpha_final.at("x") != "x@1" || t.alpha_final.at("h") != "h" ||
      t.alpha_final.at("l") != "l") {
    problems.push_back("reuse_bracket final active set");
  }

  GenConfig cfg;
  cfg.bracket_probability = 0.0;
  cfg.max_depth = 4;
  int mismatches = 0;
  for (int i = 0; i < kBracketFreePrograms; ++i) {
    Rng rng = derive_rng(kSeed, static_cast<std::uint64_t>(i));
    const CmdPtr p = number_sites(gen_program(cfg, rng));
    const TransformResult r = transform_program(p);
    if (!same_cmd(r.program, p) || !(r.alpha_final == r.initial)) ++mismatches;
  }
  if (mismatches) problems.push_back(std::to_string(mismatches) + " bracket-free programs changed");
  std::string detail = "golden ok=" + std::string(problems.empty() ? "yes" : "no") + ", " +
                       std::to_string(kBracketFreePrograms) + " bracket-free programs";
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

// 3. Source and transformed runs agree on range(a').
Outcome source_transformed_agreement() {
  const auto start = Clock::now();
  GenConfig cfg;
  cfg.max_depth = 4;
  cfg.bracket_probability = 0.4;
  int compared = 0;
  int mismatches = 0;
  const int total = kAgreementPrograms * kAgreementMemories;
  std::string first_failure;
  for (int i = 0; i < kAgreementPrograms; ++i) {
    Rng rng = derive_rng(kSeed + 1, static_cast<std::uint64_t>(i));
    const CmdPtr p = gen_program(cfg, rng);
    const TransformResult t = transform_program(p);
    const std::set<std::string> vars = program_vars(*p);
    for (int k = 0; k < kAgreementMemories; ++k) {
      const Memory m = gen_memory(vars, cfg, rng);
      const RunOutcome s = run(p, m);
      const RunOutcome r = run(t.program, transformed_memory(m, *t.program));
      const auto* sf = std::get_if<Terminated>(&s);
      const auto* rf = std::get_if<Terminated>(&r);
      if (!sf || !rf) continue;
      ++compared;
      if (project_memory(rf->final, t.alpha_final) != sf->final) {
        ++mismatches;
        if (first_failure.empty()) first_failure = "program " + std::to_string(i);
      }
    }
  }
  const double elapsed = seconds_since(start);
  const bool enough = compared >= kAgreementMinComparedFraction * total;
  std::string detail = std::to_string(compared) + "/" + std::to_string(total) +
                       " terminating pairs compared, " + std::to_string(mismatches) +
                       " mismatches, " + fmt_seconds(elapsed);
  if (!first_failure.empty()) detail += "; first: " + first_failure;
  if (!enough) detail += "; too few terminating pairs";
  return {mismatches == 0 && enough && elapsed < kAgreementBudgetSeconds, detail};
}

// 4. Noninterference testing: no failures on accepted programs; the insecure
// corpus programs yield counterexamples under --force.
Outcome noninterference_testing() {
  const auto start = Clock::now();
  std::vector<std::string> problems;
  NiOptions opts;
  opts.seed = kSeed;
  std::int64_t passed = 0;
  int found = 0;
  for (const std::string name : {"reuse_bracket", "reuse_renamed", "exclusive_branches", "loop_parity", "negate_bracket"}) {
    const SourceFile src = corpus_source(name);
    const LoadedLabels labels = corpus_labels(name);
    CheckOptions copts;
    copts.init = src.init;
    const CheckReport r = check_program(src.program, labels.labels, labels.lattice, copts);
    opts.trials = kNiTrials;
    const NiTrialReport ni = ni_test(src.program, r, labels.lattice, opts, src.init);
    passed += ni.passed;
    if (!r.accept) problems.push_back(name + " not accepted");
    if (ni.failed) problems.push_back(name + " has " + std::to_string(ni.failed) + " failures");
    if (ni.passed == 0) problems.push_back(name + " has no completed trial");
  }
  for (const std::string name : {"label_downgrade", "label_downgrade_bracket", "loop_parity_leak"}) {
    const SourceFile src = corpus_source(name);
    const LoadedLabels labels = corpus_labels(name);
    CheckOptions copts;
    copts.init = src.init;
    const CheckReport r = check_program(src.program, labels.labels, labels.lattice, copts);
    opts.trials = kNiForceTrials;
    const NiTrialReport ni = ni_test(src.program, r, labels.lattice, opts, src.init);
    if (ni.counterexample && ni.counterexample->kind == NiFailureKind::Leak) {
      ++found;
    } else {
      problems.push_back(name + " without counterexample");
    }
  }
  GenConfig cfg;
  std::size_t attempts = 0;
  const auto programs = well_typed_programs(kNiRandomPrograms, kSeed + 2, cfg,
                                            Lattice::two_point(), &attempts);
  if (programs.size() < kNiRandomPrograms) problems.push_back("too few well-typed programs");
  int failing = 0;
  opts.trials = kNiTrials;
  for (const auto& w : programs) {
    opts.seed = kSeed + w.index;
    const NiTrialReport ni = ni_test(w.source, w.report, Lattice::two_point(), opts);
    passed += ni.passed;
    if (ni.failed) ++failing;
  }
  if (failing) problems.push_back(std::to_string(failing) + " random programs leak");
  const double elapsed = seconds_since(start);
  if (elapsed >= kNiBudgetSeconds) problems.push_back("over time budget");
  std::string detail = "5 corpus + " + std::to_string(programs.size()) +
                       " random accepted programs (" + std::to_string(attempts) +
                       " drawn), " + std::to_string(passed) + " passing trials, " + std::to_string(found) +
                       "/3 insecure programs with a counterexample, " + fmt_seconds(elapsed);
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

// 5. Standard and erasure runs of the transformed program agree on range(a').
Outcome erasure_agreement() {
  GenConfig cfg;
  cfg.max_depth = 4;
  const auto programs = well_typed_programs(kErasurePrograms, kSeed + 3, cfg,
                                            Lattice::two_point());
  int compared = 0;
  int mismatches = 0;
  for (const auto& w : programs) {
    Rng rng = derive_rng(kSeed + 4, w.index);
    const CheckReport& r = w.report;
    const std::set<std::string> vars = r.transform.initial.domain();
    for (int k = 0; k < kErasureMemories; ++k) {
      const Memory m = transformed_memory(gen_memory(vars, cfg, rng), *r.transform.program);
      const RunOutcome a = run(r.transform.program, m);
      const RunOutcome b = erasure_run(r.transform.program, m, r.env, r.live);
      const auto* af = std::get_if<Terminated>(&a);
      const auto* bf = std::get_if<Terminated>(&b);
      if (!af && !bf) continue;
      ++compared;
      if (!af || !bf ||
          project_memory(af->final, r.transform.alpha_final) !=
              project_memory(bf->final, r.transform.alpha_final)) {
        ++mismatches;
      }
    }
  }
  const bool enough = programs.size() == kErasurePrograms;
  std::string detail = std::to_string(programs.size()) + " well-typed programs, " +
                       std::to_string(compared) + " runs compared, " +
                       std::to_string(mismatches) + " mismatches";
  return {enough && mismatches == 0 && compared > 0, detail};
}

// 6. Constructed dependent environments type check in levels-only mode.
Outcome construction() {
  const auto start = Clock::now();
  GenConfig cfg;
  cfg.max_depth = 4;
  int failures = 0;
  std::size_t conflicts = 0;
  std::size_t overlaps = 0;
  std::string first;
  for (int i = 0; i < kConstructPrograms; ++i) {
    const Lattice& lattice = i % 2 == 0 ? Lattice::two_point() : diamond();
    Rng rng = derive_rng(kSeed + 5, static_cast<std::uint64_t>(i));
    const CmdPtr p = bracket_all(gen_program(cfg, rng));
    HsEnv env;
    std::uniform_int_distribution<int> level(0, static_cast<int>(lattice.size()) - 1);
    for (const auto& v : cfg.vars) env[v] = v[0] == 'h' ? lattice.top() : Level{level(rng)};
    const Level pc = lattice.bottom();
    const Construction built = construct_env(pc, env, p, lattice);
    const VerifyReport v = verify_construction(built, pc, lattice);
    conflicts += built.conflicts.size();
    overlaps += built.overlaps;
    if (!v.ok || !v.domain_ok || !built.extension_violations.empty()) {
      ++failures;
      if (first.empty()) first = "program " + std::to_string(i);
    }
  }
  const double elapsed = seconds_since(start);
  std::string detail = std::to_string(kConstructPrograms) + " programs (two-point and diamond), " +
                       std::to_string(failures) + " failures, " + std::to_string(conflicts) +
                       " merge conflicts over " + std::to_string(overlaps) + " overlaps, " +
                       fmt_seconds(elapsed);
  if (!first.empty()) detail += "; first: " + first;
  return {failures == 0 && conflicts == 0 && elapsed < kConstructBudgetSeconds, detail};
}

FactSet facts(const std::vector<std::string>& exprs) {
  FactSet f;
  for (const auto& e : exprs) f.add({parse_expr(e), true});
  return f;
}

// 7. Worked obligations.
Outcome obligations() {
  const Lattice& l = Lattice::two_point();
  std::vector<std::string> problems;
  const LabelPtr ty = parse_label("(x % 2 == 0 ? H : L)", l);
  const DischargeResult a =
      discharge(facts({"x % 2 == 0"}), *parse_label("L \\/ H", l), *ty, l);
  if (a.status != ObligationStatus::Valid) problems.push_back("parity obligation not valid");

  const LabelPtr tx = parse_label("(x > 0 ? H : L)", l);
  const DischargeResult b1 = discharge(facts({"x > 0"}), *parse_label("H", l), *tx, l);
  const DischargeResult b2 =
      discharge(facts({"x@1 > 0", "x@1 == 0 - x"}), *tx, *parse_label("L", l), l);
  if (b1.status != ObligationStatus::Valid) problems.push_back("first bracket obligation");
  if (b2.status != ObligationStatus::Valid) problems.push_back("second bracket obligation");

  const DischargeResult c = discharge(FactSet{}, *parse_label("H", l), *parse_label("L", l), l);
  if (c.status != ObligationStatus::Violated || !c.witness) {
    problems.push_back("H <= L not violated with witness");
  } else if (c.witness->lhs_level != l.top() || c.witness->rhs_level != l.bottom()) {
    problems.push_back("H <= L witness levels");
  }
  std::string detail = std::string("parity=") + std::string(status_name(a.status)) +
                       ", bracket pair=" + std::string(status_name(b1.status)) + "/" +
                       std::string(status_name(b2.status)) +
                       ", H<=L=" + std::string(status_name(c.status));
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

std::set<std::string> live_after_line(const CheckReport& r, int line) {
  std::set<std::string> out;
  std::function<void(const Cmd&)> walk = [&](const Cmd& c) {
    if (c.is_assignment() && c.line == line) out = r.live.at(c.site).after;
    if (c.first) walk(*c.first);
    if (c.second) walk(*c.second);
  };
  walk(*r.transform.program);
  return out;
}

// 8. Live-after sets of the loop counter update.
Outcome liveness_sets() {
  const std::set<std::string> want_a = {"x", "y", "h"};
  const std::set<std::string> want_b = {"x", "l", "h"};
  const auto got_a = live_after_line(corpus_check("loop_parity_leak"), 7);
  const auto got_b = live_after_line(corpus_check("loop_parity"), 7);
  const std::string detail = std::string("(a) ") + (got_a == want_a ? "PASS" : "FAIL") +
                             " got " + join(got_a) + " want " + join(want_a) + "; (b) " +
                             (got_b == want_b ? "PASS" : "FAIL") + " got " + join(got_b) +
                             " want " + join(want_b);
  return {got_a == want_a && got_b == want_b, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"corpus conformance", corpus_conformance},
      {"transformation golden", transformation_golden},
      {"source/transformed agreement", source_transformed_agreement},
      {"noninterference testing", noninterference_testing},
      {"erasure agreement", erasure_agreement},
      {"environment construction", construction},
      {"obligations", obligations},
      {"liveness sets", liveness_sets},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %zu %s: %s [%s]\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(),
                fmt_seconds(seconds_since(start)).c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

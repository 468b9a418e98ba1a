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

#include "core/ni.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

#include "core/error.hpp"
#include "core/printer.hpp"
#include "core/projection.hpp"

namespace iflow {

std::string_view failure_name(NiFailureKind k) {
  switch (k) {
    case NiFailureKind::Leak: return "leak";
    case NiFailureKind::TransformMismatch: return "transform-mismatch";
    case NiFailureKind::ErasureMismatch: return "erasure-mismatch";
    case NiFailureKind::ErasureLeak: return "erasure-leak";
  }
  return "?";
}

namespace {

enum class TrialResult { Passed, Failed, Divergence, Runtime, Sampling };

struct TrialOutcome {
  TrialResult result = TrialResult::Passed;
  std::optional<NiCounterexample> counterexample;
};

struct Shared {
  const CmdPtr& source;
  const CheckReport& report;
  const Lattice& lattice;
  const NiOptions& options;
  const Memory& init;
  std::set<std::string> source_vars;
  std::set<std::string> copies;
};

// First source variable on which the two projected finals are told apart.
std::string distinguishing_var(const Memory& t1, const Memory& t2, const TypingEnv& env,
                               const ActiveSet& a, Level observer, const Lattice& lattice) {
  for (const auto& [source, copy] : a.entries()) {
    ActiveSet single(ActiveSet::Map{{source, copy}});
    if (!low_equiv_projected(t1, t2, env, single, observer, lattice)) return source;
  }
  return {};
}

Memory restrict_to(const Memory& m, const std::set<std::string>& vars) {
  Memory out;
  for (const auto& v : vars) {
    if (auto it = m.find(v); it != m.end()) out[v] = it->second;
  }
  return out;
}

TrialOutcome run_trial(const Shared& s, std::int64_t index) {
  TrialOutcome out;
  Rng rng = derive_rng(s.options.seed, static_cast<std::uint64_t>(index));
  const Level observer{static_cast<int>(index % static_cast<std::int64_t>(s.lattice.size()))};
  const TransformResult& t = s.report.transform;
  const TypingEnv& env = s.report.env;

  std::optional<std::pair<Memory, Memory>> pair;
  try {
    pair = gen_equiv_pair(env, t.initial, s.copies, observer, s.lattice, s.options.sampling, rng,
                          s.init);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Runtime) throw;
  }
  if (!pair) {
    out.result = TrialResult::Sampling;
    return out;
  }
  const Memory& t1 = pair->first;
  const Memory& t2 = pair->second;
  const Memory m1 = project_memory(t1, t.initial);
  const Memory m2 = project_memory(t2, t.initial);

  auto fail_with = [&](NiFailureKind kind, const Memory& f1, const Memory& f2, std::string var,
                       std::string detail) {
    out.result = TrialResult::Failed;
    out.counterexample = NiCounterexample{index,         kind, s.lattice.name(observer),
                                          m1,            m2,   f1,
                                          f2,            std::move(var), std::move(detail)};
  };

  const RunOutcome src1 = run(s.source, m1, s.options.max_steps);
  const RunOutcome src2 = run(s.source, m2, s.options.max_steps);
  const RunOutcome tr1 = run(t.program, t1, s.options.max_steps);
  const RunOutcome tr2 = run(t.program, t2, s.options.max_steps);
  for (const RunOutcome* r : {&src1, &src2, &tr1, &tr2}) {
    if (std::holds_alternative<RuntimeFailure>(*r)) {
      out.result = TrialResult::Runtime;
      return out;
    }
  }
  for (const RunOutcome* r : {&src1, &src2, &tr1, &tr2}) {
    if (std::holds_alternative<StepLimit>(*r)) {
      out.result = TrialResult::Divergence;
      return out;
    }
  }
  const Memory& s1 = std::get<Terminated>(src1).final;
  const Memory& s2 = std::get<Terminated>(src2).final;
  const Memory& f1 = std::get<Terminated>(tr1).final;
  const Memory& f2 = std::get<Terminated>(tr2).final;

  for (const auto& [src, fin] : {std::pair{&s1, &f1}, std::pair{&s2, &f2}}) {
    const Memory projected = project_memory(*fin, t.alpha_final);
    if (projected != restrict_to(*src, s.source_vars)) {
      fail_with(NiFailureKind::TransformMismatch, *src, projected, {},
                "source final differs from projected transformed final");
      return out;
    }
  }

  try {
    if (!low_equiv_projected(f1, f2, env, t.alpha_final, observer, s.lattice)) {
      fail_with(NiFailureKind::Leak, s1, s2,
                distinguishing_var(f1, f2, env, t.alpha_final, observer, s.lattice),
                "final memories are distinguishable at " + s.lattice.name(observer));
      return out;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Runtime) throw;
    out.result = TrialResult::Runtime;
    return out;
  }

  if (s.options.erasure) {
    const RunOutcome e1 = erasure_run(t.program, t1, env, s.report.live, s.options.max_steps);
    const RunOutcome e2 = erasure_run(t.program, t2, env, s.report.live, s.options.max_steps);
    for (const auto& [er, std_final] : {std::pair{&e1, &f1}, std::pair{&e2, &f2}}) {
      const auto* done = std::get_if<Terminated>(er);
      if (!done || project_memory(done->final, t.alpha_final) !=
                       project_memory(*std_final, t.alpha_final)) {
        fail_with(NiFailureKind::ErasureMismatch, *std_final,
                  done ? done->final : Memory{}, {},
                  "erasure run disagrees on the final active copies: " + describe(*er));
        return out;
      }
    }
    const Memory& ef1 = std::get<Terminated>(e1).final;
    const Memory& ef2 = std::get<Terminated>(e2).final;
    if (!low_equiv_projected(ef1, ef2, env, t.alpha_final, observer, s.lattice)) {
      fail_with(NiFailureKind::ErasureLeak, ef1, ef2,
                distinguishing_var(ef1, ef2, env, t.alpha_final, observer, s.lattice),
                "erasure finals are distinguishable at " + s.lattice.name(observer));
      return out;
    }
  }
  out.result = TrialResult::Passed;
  return out;
}

}  // namespace

NiTrialReport ni_test(const CmdPtr& source, const CheckReport& report, const Lattice& lattice,
                      const NiOptions& options, const Memory& init) {
  Shared shared{source, report, lattice, options, init, report.transform.initial.domain(),
                fresh_vars(*report.transform.program)};
  const std::int64_t n = std::max<std::int64_t>(options.trials, 0);
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(n));

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, 64);
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, std::max<std::int64_t>(n, 1)));

  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        outcomes[static_cast<std::size_t>(i)] = run_trial(shared, i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  NiTrialReport r;
  r.attempted = n;
  for (auto& o : outcomes) {
    switch (o.result) {
      case TrialResult::Passed: ++r.passed; break;
      case TrialResult::Failed:
        ++r.failed;
        if (!r.counterexample) r.counterexample = std::move(o.counterexample);
        break;
      case TrialResult::Divergence: ++r.discarded_divergence; break;
      case TrialResult::Runtime: ++r.discarded_runtime; break;
      case TrialResult::Sampling: ++r.discarded_sampling; break;
    }
  }
  return r;
}

}  // namespace iflow

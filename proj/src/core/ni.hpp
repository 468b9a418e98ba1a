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

#ifndef IFLOW_CORE_NI_HPP
#define IFLOW_CORE_NI_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "core/gen.hpp"
#include "core/interp.hpp"
#include "core/typecheck.hpp"

namespace iflow {

struct NiOptions {
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  std::int64_t max_steps = kDefaultMaxSteps;
  unsigned threads = 0;  // 0 = hardware concurrency
  // Also compare erasure runs of the transformed program.
  bool erasure = true;
  GenConfig sampling;  // value range for memories
};

enum class NiFailureKind {
  Leak,               // final memories not equivalent
  TransformMismatch,  // source and transformed runs disagree on range(a')
  ErasureMismatch,    // erasure run disagrees with the standard run
  ErasureLeak,        // erasure finals not equivalent
};

std::string_view failure_name(NiFailureKind k);

struct NiCounterexample {
  std::int64_t trial = 0;
  NiFailureKind kind = NiFailureKind::Leak;
  std::string observer;
  Memory initial1;
  Memory initial2;
  Memory final1;
  Memory final2;
  // Source variable whose final value or level gives the pair away.
  std::string variable;
  std::string detail;
};

struct NiTrialReport {
  std::int64_t attempted = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::int64_t discarded_divergence = 0;
  std::int64_t discarded_runtime = 0;
  std::int64_t discarded_sampling = 0;
  std::optional<NiCounterexample> counterexample;  // lowest failing trial

  std::int64_t discarded() const {
    return discarded_divergence + discarded_runtime + discarded_sampling;
  }
};

// Differential noninterference testing of `source` under the labels and
// transformation recorded in `report` (the program's check result). Each
// trial draws an equivalent pair of initial memories for one observer level
// (cycling through the lattice), runs the source and the transformed
// program from both, and compares the final views through a'.
NiTrialReport ni_test(const CmdPtr& source, const CheckReport& report, const Lattice& lattice,
                      const NiOptions& options, const Memory& init = {});

}  // namespace iflow

#endif  // IFLOW_CORE_NI_HPP

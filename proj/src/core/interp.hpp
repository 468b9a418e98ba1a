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

#ifndef IFLOW_CORE_INTERP_HPP
#define IFLOW_CORE_INTERP_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <variant>

#include "core/ast.hpp"
#include "core/label.hpp"
#include "core/liveness.hpp"
#include "core/memory.hpp"

namespace iflow {

inline constexpr std::int64_t kDefaultMaxSteps = 10000;

struct Config {
  Memory memory;
  CmdPtr cmd;
  std::int64_t steps = 0;
};

// One small-step transition. Precondition: cfg.cmd is not Skip. Throws a
// Runtime error when an expression fails to evaluate.
Config step(const Config& cfg);

struct Terminated {
  Memory final;
  std::int64_t steps = 0;
};

struct StepLimit {
  Memory partial;
  std::int64_t steps = 0;
};

struct RuntimeFailure {
  Memory partial;
  int line = 0;
  std::string reason;
};

using RunOutcome = std::variant<Terminated, StepLimit, RuntimeFailure>;

// Called after every executed assignment with the memory before it and the
// memory after it (which the hook may modify).
using AssignHook =
    std::function<void(const Cmd& assign, const Memory& before, Memory& after)>;

RunOutcome run(const CmdPtr& c, Memory m0, std::int64_t max_steps = kDefaultMaxSteps,
               const AssignHook& hook = {});

// Standard run where every assignment to x also zeroes each variable whose
// label mentions x and which is dead right after that assignment.
RunOutcome erasure_run(const CmdPtr& c, Memory m0, const TypingEnv& env,
                       const LivenessMap& live,
                       std::int64_t max_steps = kDefaultMaxSteps);

std::string describe(const RunOutcome& outcome);

}  // namespace iflow

#endif  // IFLOW_CORE_INTERP_HPP

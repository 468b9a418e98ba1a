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

#ifndef IFLOW_CORE_HS_HPP
#define IFLOW_CORE_HS_HPP

#include <map>
#include <string>
#include <vector>

#include "core/active_set.hpp"
#include "core/ast.hpp"
#include "core/lattice.hpp"
#include "core/transform.hpp"
#include "core/typecheck.hpp"

namespace iflow {

// Flow-sensitive environment: source variable -> level.
using HsEnv = std::map<std::string, Level>;

Level hs_expr_level(const HsEnv& env, const Expr& e, const Lattice& lattice);
HsEnv hs_join(const HsEnv& a, const HsEnv& b, const Lattice& lattice);

// Final levels after `c` started from `env` under `pc`. Brackets are read as
// plain assignments. Loops iterate to the least fixpoint; exceeding
// |vars| * height + 1 rounds is an Internal error.
HsEnv hs_check(Level pc, const HsEnv& env, const Cmd& c, const Lattice& lattice);

struct Binding {
  Level level;
  std::string rule;  // construction rule that produced the binding
};

using ConstructedEnv = std::map<std::string, Binding>;

// Two sub-derivations bound the same transformed variable to different
// levels; the earlier one wins.
struct MergeConflict {
  std::string var;
  Level kept;
  Level dropped;
};

// A variable whose active copy did not change across a command but whose
// HS level did.
struct ExtensionViolation {
  std::string var;
  int line = 0;
  Level before;
  Level after;
};

struct Construction {
  HsEnv env_out;
  ActiveSet alpha_in;
  ActiveSet alpha_out;
  CmdPtr program;  // sites renumbered
  ConstructedEnv env;
  std::size_t overlaps = 0;  // merges where both sides bound a variable
  std::vector<MergeConflict> conflicts;
  std::vector<ExtensionViolation> extension_violations;
};

// Runs the transformation of a fully bracketed program in lock-step with the
// HS derivation, building labels for the transformed variables. Throws a
// Usage error when `c` contains a plain assignment.
Construction construct_env(Level pc, const HsEnv& env, const CmdPtr& c, const Lattice& lattice);

struct VerifyReport {
  bool ok = false;
  bool accepted = false;
  bool domain_ok = false;
  std::vector<std::string> outside_domain;
  CheckReport check;
};

// Type-checks the constructed program under the constructed labels in
// levels-only mode and checks that every labelled variable is either an
// initial active copy or minted by the transformation.
VerifyReport verify_construction(const Construction& built, Level pc, const Lattice& lattice);

TypingEnv to_typing_env(const ConstructedEnv& env);

}  // namespace iflow

#endif  // IFLOW_CORE_HS_HPP

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

#ifndef IFLOW_CORE_TYPECHECK_HPP
#define IFLOW_CORE_TYPECHECK_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "core/active_set.hpp"
#include "core/ast.hpp"
#include "core/discharge.hpp"
#include "core/env.hpp"
#include "core/label.hpp"
#include "core/lattice.hpp"
#include "core/liveness.hpp"
#include "core/parser.hpp"
#include "core/predicates.hpp"
#include "core/transform.hpp"

namespace iflow {

struct Obligation {
  SiteId site;
  int line = 0;
  std::string target;
  FactSet hypothesis;
  LabelPtr lhs;  // label of the right-hand side joined with pc
  LabelPtr rhs;  // label of the target
  DischargeResult result;
};

// A live variable whose label reads the variable being assigned.
struct SideConditionFailure {
  SiteId site;
  int line = 0;
  std::string target;
  std::string dependent;
};

struct CheckOptions {
  bool levels_only = false;
  std::size_t guard_cap = kDefaultGuardCap;
  // Initial values fixed by `init` headers; seed the entry predicate.
  Memory init;
  // Search for a concrete memory behind each violation (diagnostics only).
  bool witness_memories = true;
};

struct CheckReport {
  bool accept = false;
  TransformResult transform;
  TypingEnv env;
  LivenessMap live;
  PredicateMap predicates;
  std::vector<WellFormedViolation> wellformed;
  std::vector<Obligation> obligations;
  std::vector<SideConditionFailure> side_conditions;

  std::size_t count(ObligationStatus s) const;
};

// Label of an expression: bottom for literals, the variable's label, and
// joins for operators (joins of bare levels are folded).
LabelPtr type_of_expr(const TypingEnv& env, const Expr& e, const Lattice& lattice);

LabelPtr join_labels(const LabelPtr& a, const LabelPtr& b, const Lattice& lattice);

struct CheckContext {
  const TypingEnv& env;
  const Lattice& lattice;
  const PredicateMap& predicates;
  const LivenessMap& live;
  DischargeOptions discharge;
};

// Structural checking of a transformed program under `pc`; appends the
// obligations and side-condition failures it generates.
void check_cmd(const CheckContext& ctx, const LabelPtr& pc, const Cmd& c,
               std::vector<Obligation>& obligations,
               std::vector<SideConditionFailure>& side_conditions);

// Labels for every variable in `vars` (plus those mentioned by the chosen
// labels). Throws a Config error when one cannot be resolved, or when
// levels_only is set and a label is dependent.
TypingEnv resolve_env(const LabelFile& labels, const std::set<std::string>& vars,
                      bool levels_only);

// Checks an already transformed program against `env`.
CheckReport check_transformed(const TransformResult& transformed, const TypingEnv& env,
                              const Lattice& lattice, const CheckOptions& options,
                              std::optional<Level> pc = std::nullopt);

// Transform, resolve labels, check well-formedness, analyze and type-check.
CheckReport check_program(const CmdPtr& source, const LabelFile& labels,
                          const Lattice& lattice, const CheckOptions& options = {});

}  // namespace iflow

#endif  // IFLOW_CORE_TYPECHECK_HPP

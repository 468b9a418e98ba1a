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

#ifndef IFLOW_CORE_LIVENESS_HPP
#define IFLOW_CORE_LIVENESS_HPP

#include <map>
#include <set>
#include <string>

#include "core/active_set.hpp"
#include "core/ast.hpp"
#include "core/cfg.hpp"
#include "core/label.hpp"

namespace iflow {

using VarSet = std::set<std::string>;

struct LiveSets {
  VarSet before;  // live-in of the assignment
  VarSet after;   // live-out of the assignment
};

struct LivenessMap {
  std::map<SiteId, LiveSets> sites;
  VarSet entry;
  int iterations = 0;

  // Throws an Internal error for an unknown site.
  const LiveSets& at(SiteId site) const;
};

// Backward may-liveness where a read of v also reads the free variables of
// v's label, and everything in range(a_final) is live at the end.
LivenessMap liveness(const Cfg& cfg, const TypingEnv& env, const ActiveSet& a_final);
LivenessMap liveness(const Cmd& c, const TypingEnv& env, const ActiveSet& a_final);

// free(e) plus the free variables of the labels of free(e).
VarSet read_set(const Expr& e, const TypingEnv& env);

}  // namespace iflow

#endif  // IFLOW_CORE_LIVENESS_HPP

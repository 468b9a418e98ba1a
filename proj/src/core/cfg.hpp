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

#ifndef IFLOW_CORE_CFG_HPP
#define IFLOW_CORE_CFG_HPP

#include <vector>

#include "core/ast.hpp"

namespace iflow {

// Statement-level control-flow graph of a transformed program. Node 0 is
// the synthetic final node; every assignment, skip and branch guard gets
// one node.
struct CfgNode {
  enum class Kind { Final, Skip, Assign, Guard };
  Kind kind = Kind::Final;
  const Cmd* cmd = nullptr;  // the statement, or the If/While for a guard
  std::vector<int> succ;
};

struct Cfg {
  std::vector<CfgNode> nodes;
  int entry = 0;
  static constexpr int kFinal = 0;
};

// `c` must outlive the returned graph. Throws a Usage error on a bracketed
// assignment.
Cfg build_cfg(const Cmd& c);

}  // namespace iflow

#endif  // IFLOW_CORE_CFG_HPP

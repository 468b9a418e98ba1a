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

#ifndef IFLOW_CORE_MEMORY_HPP
#define IFLOW_CORE_MEMORY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "core/ast.hpp"

namespace iflow {

// Variable name -> value. Ordered so that printing is deterministic.
using Memory = std::map<std::string, std::int64_t, std::less<>>;

// Big-step expression evaluation. Comparisons yield 1/0; && and || evaluate
// both operands and treat any nonzero value as true. Throws a Runtime error
// on `%` by zero, on signed overflow, and on a read of an absent variable.
std::int64_t eval_expr(const Memory& m, const Expr& e);

// Memory with every variable in `vars` set to zero, then overlaid with
// `init`.
Memory zero_memory(const std::set<std::string>& vars, const Memory& init = {});

}  // namespace iflow

#endif  // IFLOW_CORE_MEMORY_HPP

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

#ifndef IFLOW_CORE_TRANSFORM_HPP
#define IFLOW_CORE_TRANSFORM_HPP

#include <map>
#include <set>
#include <string>

#include "core/active_set.hpp"
#include "core/ast.hpp"

namespace iflow {

// Mints fresh copy names x@1, x@2, ... per base variable.
class FreshCounter {
 public:
  std::string fresh(const std::string& base);
  int issued(const std::string& base) const;

 private:
  std::map<std::string, int> next_;
};

// Replaces every variable by its active copy. Throws an Analysis error when
// a variable is outside the domain of `a`.
ExprPtr transform_expr(const ActiveSet& a, const ExprPtr& e);

// Pointwise merge: keeps agreeing copies and mints a fresh copy for every
// variable on which `a1` and `a2` disagree (in sorted variable order).
ActiveSet phi_merge(const ActiveSet& a1, const ActiveSet& a2, FreshCounter& fc);

// `target(v) := source(v)` for each v where they differ, sorted by v; Skip
// when nothing differs.
CmdPtr set_assign(const ActiveSet& target, const ActiveSet& source, int line = 0);

// first; second, leaving out whichever side is skip.
CmdPtr seq_nonskip(const CmdPtr& first, const CmdPtr& second);

struct TransformStep {
  ActiveSet alpha;
  CmdPtr cmd;
};

// One application of the transformation rules from active set `a`. Sites of
// the output are left as produced; transform_program renumbers them.
TransformStep transform_cmd(const ActiveSet& a, const CmdPtr& c, FreshCounter& fc);

// Every Assign becomes a BracketAssign.
CmdPtr bracket_all(const CmdPtr& c);

struct TransformResult {
  ActiveSet initial;
  ActiveSet alpha_final;
  CmdPtr program;
};

// Transformation from the identity active set over the program's variables
// (plus `extra_vars`), with sites renumbered in textual order.
TransformResult transform_program(const CmdPtr& source,
                                  const std::set<std::string>& extra_vars = {});

// Transformed variables that are not source identities: copies minted by
// the transformation and appearing in `c`.
std::set<std::string> fresh_vars(const Cmd& c);

}  // namespace iflow

#endif  // IFLOW_CORE_TRANSFORM_HPP

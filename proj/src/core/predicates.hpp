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

#ifndef IFLOW_CORE_PREDICATES_HPP
#define IFLOW_CORE_PREDICATES_HPP

#include <map>
#include <string>
#include <vector>

#include "core/ast.hpp"
#include "core/memory.hpp"

namespace iflow {

// `expr` is nonzero (holds) or zero (!holds). Equalities recorded after an
// assignment are stored as `x == e` with holds = true.
struct Fact {
  ExprPtr expr;
  bool holds = true;

  bool operator==(const Fact& o) const { return holds == o.holds && *expr == *o.expr; }
};

class FactSet {
 public:
  void add(Fact f);
  bool contains(const Fact& f) const;
  // Drops every fact that reads `var`.
  void kill(const std::string& var);
  FactSet intersect(const FactSet& other) const;
  const std::vector<Fact>& facts() const { return facts_; }
  bool empty() const { return facts_.empty(); }

  // True when every fact evaluates as recorded under `m`.
  bool satisfied_by(const Memory& m) const;

 private:
  std::vector<Fact> facts_;
};

using PredicateMap = std::map<SiteId, FactSet>;

// Facts known to hold right before each assignment of a transformed program.
// `init` values (if any) seed the entry facts as `x == n`.
PredicateMap predicates(const Cmd& c, const Memory& init = {});

}  // namespace iflow

#endif  // IFLOW_CORE_PREDICATES_HPP

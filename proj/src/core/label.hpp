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

#ifndef IFLOW_CORE_LABEL_HPP
#define IFLOW_CORE_LABEL_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/ast.hpp"
#include "core/lattice.hpp"
#include "core/memory.hpp"

namespace iflow {

struct Label;
using LabelPtr = std::shared_ptr<const Label>;

// Security label: a level, a value-dependent choice (guard ? then : else),
// or the join/meet of two labels.
struct Label {
  enum class Kind { Level, Cond, Join, Meet };

  Kind kind = Kind::Level;
  Level level;
  ExprPtr guard;
  LabelPtr a;
  LabelPtr b;

  static LabelPtr of(Level level);
  static LabelPtr cond(ExprPtr guard, LabelPtr then_label, LabelPtr else_label);
  static LabelPtr join(LabelPtr a, LabelPtr b);
  static LabelPtr meet(LabelPtr a, LabelPtr b);
};

bool operator==(const Label& a, const Label& b);

// Concrete level of `t` under `m`. Guard errors propagate as Runtime errors.
Level label_eval(const Memory& m, const Label& t, const Lattice& lattice);

// Union of the variables in every guard of `t`.
std::set<std::string> label_free_vars(const Label& t);
void collect_label_free_vars(const Label& t, std::set<std::string>& out);

bool is_bare_level(const Label& t);

// Distinct guard expressions of `t`, in first-occurrence order.
void collect_guards(const Label& t, std::vector<ExprPtr>& out);

// Variable -> label. Lookups of unlisted variables fall back to the default
// label when one is set, and otherwise fail with a Config error.
class TypingEnv {
 public:
  void set(const std::string& var, LabelPtr label) { entries_[var] = std::move(label); }
  void set_default(LabelPtr label) { default_ = std::move(label); }

  const LabelPtr& lookup(const std::string& var) const;
  const LabelPtr* find(const std::string& var) const;
  bool has_default() const { return default_ != nullptr; }
  const LabelPtr& default_label() const { return default_; }

  const std::map<std::string, LabelPtr>& entries() const { return entries_; }

 private:
  std::map<std::string, LabelPtr> entries_;
  LabelPtr default_;
};

}  // namespace iflow

#endif  // IFLOW_CORE_LABEL_HPP

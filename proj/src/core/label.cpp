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

#include "core/label.hpp"

#include <algorithm>
#include <cctype>

#include "core/active_set.hpp"
#include "core/error.hpp"

namespace iflow {

LabelPtr Label::of(Level level) {
  auto t = std::make_shared<Label>();
  t->kind = Kind::Level;
  t->level = level;
  return t;
}

LabelPtr Label::cond(ExprPtr guard, LabelPtr then_label, LabelPtr else_label) {
  auto t = std::make_shared<Label>();
  t->kind = Kind::Cond;
  t->guard = std::move(guard);
  t->a = std::move(then_label);
  t->b = std::move(else_label);
  return t;
}

LabelPtr Label::join(LabelPtr a, LabelPtr b) {
  auto t = std::make_shared<Label>();
  t->kind = Kind::Join;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

LabelPtr Label::meet(LabelPtr a, LabelPtr b) {
  auto t = std::make_shared<Label>();
  t->kind = Kind::Meet;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

bool operator==(const Label& a, const Label& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Label::Kind::Level: return a.level == b.level;
    case Label::Kind::Cond:
      return *a.guard == *b.guard && *a.a == *b.a && *a.b == *b.b;
    case Label::Kind::Join:
    case Label::Kind::Meet:
      return *a.a == *b.a && *a.b == *b.b;
  }
  return false;
}

Level label_eval(const Memory& m, const Label& t, const Lattice& lattice) {
  switch (t.kind) {
    case Label::Kind::Level: return t.level;
    case Label::Kind::Cond:
      return eval_expr(m, *t.guard) != 0 ? label_eval(m, *t.a, lattice)
                                         : label_eval(m, *t.b, lattice);
    case Label::Kind::Join:
      return lattice.join(label_eval(m, *t.a, lattice),
                          label_eval(m, *t.b, lattice));
    case Label::Kind::Meet:
      return lattice.meet(label_eval(m, *t.a, lattice),
                          label_eval(m, *t.b, lattice));
  }
  return lattice.bottom();
}

void collect_label_free_vars(const Label& t, std::set<std::string>& out) {
  switch (t.kind) {
    case Label::Kind::Level: break;
    case Label::Kind::Cond:
      collect_free_vars(*t.guard, out);
      [[fallthrough]];
    case Label::Kind::Join:
    case Label::Kind::Meet:
      collect_label_free_vars(*t.a, out);
      collect_label_free_vars(*t.b, out);
      break;
  }
}

std::set<std::string> label_free_vars(const Label& t) {
  std::set<std::string> out;
  collect_label_free_vars(t, out);
  return out;
}

bool is_bare_level(const Label& t) { return t.kind == Label::Kind::Level; }

void collect_guards(const Label& t, std::vector<ExprPtr>& out) {
  switch (t.kind) {
    case Label::Kind::Level: return;
    case Label::Kind::Cond: {
      bool seen = std::any_of(out.begin(), out.end(), [&](const ExprPtr& g) {
        return *g == *t.guard;
      });
      if (!seen) out.push_back(t.guard);
      break;
    }
    default: break;
  }
  collect_guards(*t.a, out);
  collect_guards(*t.b, out);
}

const LabelPtr& TypingEnv::lookup(const std::string& var) const {
  if (const LabelPtr* found = find(var)) return *found;
  fail(ErrorKind::Config, "no security label for variable '" + var + "'");
}

const LabelPtr* TypingEnv::find(const std::string& var) const {
  auto it = entries_.find(var);
  if (it != entries_.end()) return &it->second;
  if (default_) return &default_;
  return nullptr;
}

// ActiveSet and copy naming.

std::string base_of(std::string_view v) {
  const auto at = v.find(kCopySeparator);
  if (v.empty() || at == 0) {
    fail(ErrorKind::Analysis, "malformed variable name '" + std::string(v) + "'");
  }
  if (at == std::string_view::npos) return std::string(v);
  const auto index = v.substr(at + 1);
  if (index.empty() || !std::all_of(index.begin(), index.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      })) {
    fail(ErrorKind::Analysis, "malformed variable name '" + std::string(v) + "'");
  }
  return std::string(v.substr(0, at));
}

bool is_copy_name(std::string_view v) {
  return v.find(kCopySeparator) != std::string_view::npos;
}

std::string copy_name(std::string_view base, int index) {
  return std::string(base) + kCopySeparator + std::to_string(index);
}

ActiveSet ActiveSet::identity(const std::set<std::string>& vars) {
  Map m;
  for (const auto& v : vars) m.emplace(v, v);
  return ActiveSet(std::move(m));
}

const std::string& ActiveSet::at(const std::string& source) const {
  auto it = map_.find(source);
  if (it == map_.end()) {
    fail(ErrorKind::Analysis,
         "variable '" + source + "' is not in the active set");
  }
  return it->second;
}

std::set<std::string> ActiveSet::domain() const {
  std::set<std::string> out;
  for (const auto& [k, v] : map_) out.insert(k);
  return out;
}

std::set<std::string> ActiveSet::range() const {
  std::set<std::string> out;
  for (const auto& [k, v] : map_) out.insert(v);
  return out;
}

bool ActiveSet::injective() const { return range().size() == map_.size(); }

bool ActiveSet::keeps_bases() const {
  return std::all_of(map_.begin(), map_.end(),
                     [](const auto& kv) { return base_of(kv.second) == kv.first; });
}

}  // namespace iflow

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

#include "core/projection.hpp"

#include "core/error.hpp"

namespace iflow {

Memory project_memory(const Memory& transformed, const ActiveSet& a) {
  Memory out;
  for (const auto& [source, copy] : a.entries()) {
    auto it = transformed.find(copy);
    if (it == transformed.end()) {
      fail(ErrorKind::Internal, "projection: copy '" + copy + "' of '" +
                                    source + "' missing from memory");
    }
    out[source] = it->second;
  }
  return out;
}

TypingEnv project_env(const TypingEnv& env, const ActiveSet& a) {
  TypingEnv out;
  for (const auto& [source, copy] : a.entries()) {
    const LabelPtr* label = env.find(copy);
    if (!label) {
      fail(ErrorKind::Internal, "projection: copy '" + copy + "' of '" +
                                    source + "' has no label");
    }
    out.set(source, *label);
  }
  return out;
}

namespace {

bool equivalent_at(Level l1, Level l2, std::int64_t v1, std::int64_t v2,
                   Level observer, const Lattice& lattice) {
  const bool low1 = lattice.leq(l1, observer);
  const bool low2 = lattice.leq(l2, observer);
  if (low1 != low2) return false;
  return !low1 || v1 == v2;
}

std::int64_t value_of(const Memory& m, const std::string& v) {
  auto it = m.find(v);
  if (it == m.end()) {
    fail(ErrorKind::Analysis, "variable '" + v + "' missing from memory");
  }
  return it->second;
}

}  // namespace

bool low_equiv(const Memory& m1, const Memory& m2, const TypingEnv& env,
               Level observer, const Lattice& lattice) {
  for (const auto& [var, label] : env.entries()) {
    const Level l1 = label_eval(m1, *label, lattice);
    const Level l2 = label_eval(m2, *label, lattice);
    if (!equivalent_at(l1, l2, value_of(m1, var), value_of(m2, var), observer,
                       lattice)) {
      return false;
    }
  }
  return true;
}

bool low_equiv_projected(const Memory& t1, const Memory& t2,
                         const TypingEnv& env, const ActiveSet& a,
                         Level observer, const Lattice& lattice) {
  for (const auto& [source, copy] : a.entries()) {
    const Label& label = *env.lookup(copy);
    const Level l1 = label_eval(t1, label, lattice);
    const Level l2 = label_eval(t2, label, lattice);
    if (!equivalent_at(l1, l2, value_of(t1, copy), value_of(t2, copy),
                       observer, lattice)) {
      return false;
    }
  }
  return true;
}

}  // namespace iflow

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

#ifndef IFLOW_CORE_PROJECTION_HPP
#define IFLOW_CORE_PROJECTION_HPP

#include "core/active_set.hpp"
#include "core/label.hpp"
#include "core/lattice.hpp"
#include "core/memory.hpp"

namespace iflow {

// result(x) = transformed(a(x)) for every source variable x.
Memory project_memory(const Memory& transformed, const ActiveSet& a);

// result(x) = env(a(x)) for every source variable x.
TypingEnv project_env(const TypingEnv& env, const ActiveSet& a);

// (env, observer)-equivalence: every variable either evaluates above the
// observer in both memories, or below it in both with equal values. The
// variables checked are the explicit entries of `env`.
bool low_equiv(const Memory& m1, const Memory& m2, const TypingEnv& env,
               Level observer, const Lattice& lattice);

// Equivalence of the projections of two transformed memories through `a`,
// with labels env(a(x)) evaluated in the full transformed memories.
bool low_equiv_projected(const Memory& t1, const Memory& t2,
                         const TypingEnv& env, const ActiveSet& a,
                         Level observer, const Lattice& lattice);

}  // namespace iflow

#endif  // IFLOW_CORE_PROJECTION_HPP

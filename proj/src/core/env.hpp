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

#ifndef IFLOW_CORE_ENV_HPP
#define IFLOW_CORE_ENV_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/discharge.hpp"
#include "core/label.hpp"
#include "core/lattice.hpp"

namespace iflow {

struct WellFormedViolation {
  std::string var;         // x
  std::string dependency;  // x' in free(env(x))
  std::string reason;
  std::optional<Witness> witness;
};

// For every labelled x and every x' its label reads: x' must carry a label
// without free variables, and that label must be below x's label in every
// guard case. Self-dependence fails the first clause.
std::vector<WellFormedViolation> env_wellformed(const TypingEnv& env, const Lattice& lattice,
                                                const DischargeOptions& options = {});

}  // namespace iflow

#endif  // IFLOW_CORE_ENV_HPP

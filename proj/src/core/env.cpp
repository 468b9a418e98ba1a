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

#include "core/env.hpp"

#include "core/printer.hpp"

namespace iflow {

std::vector<WellFormedViolation> env_wellformed(const TypingEnv& env, const Lattice& lattice,
                                                const DischargeOptions& options) {
  std::vector<WellFormedViolation> out;
  for (const auto& [x, label] : env.entries()) {
    for (const std::string& dep : label_free_vars(*label)) {
      const LabelPtr* dep_label = env.find(dep);
      if (!dep_label) {
        out.push_back({x, dep, "'" + dep + "' has no label", std::nullopt});
        continue;
      }
      const auto chained = label_free_vars(**dep_label);
      if (!chained.empty()) {
        out.push_back({x, dep,
                       dep == x ? "label of '" + x + "' depends on '" + x + "' itself"
                                : "label of '" + dep + "' is itself dependent (" +
                                      render_label(**dep_label, lattice) + ")",
                       std::nullopt});
        continue;
      }
      const DischargeResult r = discharge(FactSet{}, **dep_label, *label, lattice, options);
      if (r.status != ObligationStatus::Valid) {
        out.push_back({x, dep,
                       "label of '" + dep + "' (" + render_label(**dep_label, lattice) +
                           ") is not below " + render_label(*label, lattice) +
                           (r.status == ObligationStatus::Unknown ? " (undecided)" : ""),
                       r.witness});
      }
    }
  }
  return out;
}

}  // namespace iflow

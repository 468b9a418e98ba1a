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

#ifndef IFLOW_CORE_DISCHARGE_HPP
#define IFLOW_CORE_DISCHARGE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/label.hpp"
#include "core/lattice.hpp"
#include "core/linear.hpp"
#include "core/memory.hpp"
#include "core/predicates.hpp"

namespace iflow {

inline constexpr std::size_t kDefaultGuardCap = 12;

enum class ObligationStatus { Valid, Violated, Unknown };

std::string_view status_name(ObligationStatus s);

// A guard valuation on which the ordering fails, and (when the search finds
// one) a concrete memory realizing it together with the hypothesis.
struct Witness {
  std::vector<std::pair<ExprPtr, bool>> guards;
  Level lhs_level;
  Level rhs_level;
  std::optional<Memory> memory;
};

struct DischargeOptions {
  std::size_t guard_cap = kDefaultGuardCap;
  std::size_t constraint_cap = kDefaultConstraintCap;
  bool search_memory = true;
};

struct DischargeResult {
  ObligationStatus status = ObligationStatus::Valid;
  std::optional<Witness> witness;
  std::size_t cases = 0;    // guard valuations enumerated
  std::size_t skipped = 0;  // refuted by the hypothesis
  std::string note;
};

// Decides |= hypo => lhs <= rhs by splitting on every guard of lhs and rhs.
// A case is skipped only when hypo plus its guard literals is refuted, either
// by a direct clash between identical atoms or by integer Fourier–Motzkin.
// Every remaining case must order the two evaluated levels; a failing case
// that could not be proven consistent yields Unknown rather than Violated.
DischargeResult discharge(const FactSet& hypo, const Label& lhs, const Label& rhs,
                          const Lattice& lattice, const DischargeOptions& options = {});

// Level of `t` when each guard takes the given truth value.
Level label_eval_guards(const Label& t, const std::vector<std::pair<ExprPtr, bool>>& guards,
                        const Lattice& lattice);

}  // namespace iflow

#endif  // IFLOW_CORE_DISCHARGE_HPP

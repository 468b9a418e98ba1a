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

#ifndef IFLOW_CORE_PRINTER_HPP
#define IFLOW_CORE_PRINTER_HPP

#include <optional>
#include <string>

#include "core/active_set.hpp"
#include "core/ast.hpp"
#include "core/label.hpp"
#include "core/lattice.hpp"
#include "core/memory.hpp"

namespace iflow {

// Minimal parenthesization; the output reparses to the same tree.
std::string render_expr(const Expr& e);
std::string render_label(const Label& t, const Lattice& lattice);

// Canonical program text: `init` headers, then `#active` comments for the
// final active set (when given), then statements indented by two spaces.
std::string render_program(const Cmd& c, const Memory& init = {},
                           const std::optional<ActiveSet>& active = std::nullopt);

// One-line rendering of a single statement head, for diagnostics.
std::string render_statement_head(const Cmd& c);

std::string render_memory(const Memory& m);

}  // namespace iflow

#endif  // IFLOW_CORE_PRINTER_HPP

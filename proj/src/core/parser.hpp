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

#ifndef IFLOW_CORE_PARSER_HPP
#define IFLOW_CORE_PARSER_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "core/ast.hpp"
#include "core/label.hpp"
#include "core/lattice.hpp"
#include "core/memory.hpp"

namespace iflow {

struct ParseOptions {
  // Accept indexed copy names (`x@2`), as found in transformed programs.
  bool allow_copy_names = false;
};

// A parsed program file: the command plus optional `init x = n;` headers.
struct SourceFile {
  std::string path;
  std::string text;
  CmdPtr program;
  Memory init;
};

// Statements: `skip;`, `x := e;`, `[x := e];`, `if (e) {..} [else {..}]`,
// `while (e) {..}`. Lines starting with `#` are comments. Site ids are
// assigned in textual order.
SourceFile parse_program(std::string_view text, ParseOptions options = {});

// A single expression (copy names allowed).
ExprPtr parse_expr(std::string_view text);

// Annotation file:
//   lattice "levels.lat";         (optional)
//   label y : (l1 < 0 ? H : L);
//   label x@1 : L;
//   default : L;
struct LabelFile {
  std::optional<std::string> lattice_ref;
  std::map<std::string, LabelPtr> rules;
  LabelPtr default_label;

  // Copy-specific rule, then the base variable's rule, then the default.
  LabelPtr resolve(const std::string& var) const;
};

LabelFile parse_labels(std::string_view text, const Lattice& lattice);

// The `lattice "..."` reference of a label file, without resolving levels.
std::optional<std::string> peek_lattice_ref(std::string_view text);

// A label on its own, e.g. "(x > 0 ? H : L) \/ L".
LabelPtr parse_label(std::string_view text, const Lattice& lattice);

// `levels: a b c; order: a < b; b < c;`
Lattice parse_lattice(std::string_view text);

// Parses "x=3,y=-1" as used by `--init`.
Memory parse_assignments(std::string_view text);

}  // namespace iflow

#endif  // IFLOW_CORE_PARSER_HPP

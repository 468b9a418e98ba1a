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

#ifndef IFLOW_CORE_GEN_HPP
#define IFLOW_CORE_GEN_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "core/active_set.hpp"
#include "core/ast.hpp"
#include "core/label.hpp"
#include "core/lattice.hpp"
#include "core/memory.hpp"
#include "core/parser.hpp"

namespace iflow {

using Rng = std::mt19937_64;

// Independent stream for item `index` of a run seeded with `seed`.
Rng derive_rng(std::uint64_t seed, std::uint64_t index);

enum class LoopStyle {
  Counter,  // while (v < k) { ...; v := v + 1; }, usually terminating
  Free,     // arbitrary guard
};

struct GenConfig {
  std::uint64_t seed = 1;
  int max_depth = 3;
  std::vector<std::string> vars = {"h", "l", "x", "y", "z"};
  std::int64_t literal_min = -16;
  std::int64_t literal_max = 16;
  LoopStyle loop_style = LoopStyle::Counter;
  double bracket_probability = 0.3;
  double loop_probability = 0.15;
  double if_probability = 0.3;
  int max_block = 3;
};

CmdPtr gen_program(const GenConfig& cfg, Rng& rng);
// Uses a stream derived from cfg.seed alone.
CmdPtr gen_program(const GenConfig& cfg);

ExprPtr gen_expr(const GenConfig& cfg, Rng& rng, int depth);

Memory gen_memory(const std::set<std::string>& vars, const GenConfig& cfg, Rng& rng);

// Labels for the pool: names starting with 'h' are top, a few variables get a
// dependent label (guard ? top : bottom) whose guard reads a bottom variable,
// the rest are bottom. Copies inherit their base label.
LabelFile gen_labels(const GenConfig& cfg, const Lattice& lattice, Rng& rng,
                     double dependent_probability = 0.3);

// Two memories over the identity copies of `vars` (copies in `copies` start
// at zero) that are equivalent for `observer` under `env`. Values in `fixed`
// are the same in both. nullopt when `budget` resamples fail.
std::optional<std::pair<Memory, Memory>> gen_equiv_pair(
    const TypingEnv& env, const ActiveSet& initial, const std::set<std::string>& copies,
    Level observer, const Lattice& lattice, const GenConfig& cfg, Rng& rng,
    const Memory& fixed = {}, int budget = 32);

}  // namespace iflow

#endif  // IFLOW_CORE_GEN_HPP

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

// Helpers shared by the unit and acceptance tests.

#ifndef IFLOW_TESTS_SUPPORT_HPP
#define IFLOW_TESTS_SUPPORT_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "core/corpus.hpp"
#include "core/error.hpp"
#include "core/gen.hpp"
#include "core/parser.hpp"
#include "core/transform.hpp"
#include "core/typecheck.hpp"

namespace iflow::testing {

inline std::filesystem::path corpus_dir() { return IFLOW_TEST_CORPUS_DIR; }

// {L, M1, M2, H}: L below both middles, both middles below H.
inline const Lattice& diamond() {
  static const Lattice l({"L", "M1", "M2", "H"},
                         {{"L", "M1"}, {"L", "M2"}, {"M1", "H"}, {"M2", "H"}});
  return l;
}

// Transformed initial memory: source values on the identity copies, every
// fresh copy zero.
inline Memory transformed_memory(const Memory& source, const Cmd& transformed) {
  Memory m = source;
  for (const auto& v : fresh_vars(transformed)) m[v] = 0;
  return m;
}

struct WellTyped {
  std::uint64_t index = 0;
  CmdPtr source;
  LabelFile labels;
  CheckReport report;
};

// Draws random programs with random labels until `count` are accepted.
// Programs whose labels fail to resolve are skipped like rejected ones.
inline std::vector<WellTyped> well_typed_programs(std::size_t count, std::uint64_t seed,
                                                  const GenConfig& cfg, const Lattice& lattice,
                                                  std::size_t* attempts = nullptr) {
  std::vector<WellTyped> out;
  std::uint64_t i = 0;
  const std::uint64_t limit = 200 * static_cast<std::uint64_t>(count) + 1000;
  for (; out.size() < count && i < limit; ++i) {
    Rng rng = derive_rng(seed, i);
    CmdPtr program = gen_program(cfg, rng);
    LabelFile labels = gen_labels(cfg, lattice, rng);
    try {
      CheckOptions opts;
      opts.witness_memories = false;  // only the verdict matters here
      CheckReport r = check_program(program, labels, lattice, opts);
      if (r.accept) out.push_back({i, program, std::move(labels), std::move(r)});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Config) throw;
    }
  }
  if (attempts) *attempts = static_cast<std::size_t>(i);
  return out;
}

inline SourceFile corpus_source(const std::string& name) {
  return load_source(corpus_dir() / (name + ".while"));
}

inline LoadedLabels corpus_labels(const std::string& name) {
  return load_labels(corpus_dir() / (name + ".labels"), std::nullopt);
}

inline CheckReport corpus_check(const std::string& name) {
  const SourceFile src = corpus_source(name);
  const LoadedLabels labels = corpus_labels(name);
  CheckOptions opts;
  opts.init = src.init;
  return check_program(src.program, labels.labels, labels.lattice, opts);
}

}  // namespace iflow::testing

#endif  // IFLOW_TESTS_SUPPORT_HPP

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

#ifndef IFLOW_CORE_CORPUS_HPP
#define IFLOW_CORE_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "core/lattice.hpp"
#include "core/ni.hpp"
#include "core/parser.hpp"
#include "core/typecheck.hpp"

namespace iflow {

std::string read_file(const std::filesystem::path& path);

SourceFile load_source(const std::filesystem::path& path);

// Lattice for a label file: `override_path` when given, else the file's own
// `lattice "..."` reference (relative to the label file), else two-point.
Lattice load_lattice_for(const std::filesystem::path& labels_path,
                         const std::optional<std::filesystem::path>& override_path);

struct LoadedLabels {
  Lattice lattice;
  LabelFile labels;
};

LoadedLabels load_labels(const std::filesystem::path& path,
                         const std::optional<std::filesystem::path>& lattice_override);

struct CorpusEntry {
  std::string name;
  std::string program;
  std::string labels;
  bool expect_accept = false;
  bool insecure = false;
  std::optional<int> side_condition_line;
  std::optional<std::string> golden;
};

std::vector<CorpusEntry> load_manifest(const std::filesystem::path& dir);

struct SelftestRow {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string detail;
  double millis = 0;
  std::optional<NiTrialReport> ni;
};

struct SelftestOptions {
  std::int64_t ni_trials = 200;          // accepted entries: expect no failures
  std::int64_t ni_force_trials = 10000;  // insecure entries: expect a counterexample
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

struct SelftestReport {
  std::vector<SelftestRow> rows;
  bool all_pass() const;
  double total_millis = 0;
};

SelftestReport run_selftest(const std::filesystem::path& dir, const SelftestOptions& options);

}  // namespace iflow

#endif  // IFLOW_CORE_CORPUS_HPP

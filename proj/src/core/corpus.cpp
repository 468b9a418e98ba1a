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

#include "core/corpus.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "core/error.hpp"
#include "core/printer.hpp"

namespace iflow {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Usage, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

template <typename F>
auto with_path(const fs::path& path, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw Error(ErrorKind::Parse, path.string() + ":" + e.what());
  }
}

}  // namespace

SourceFile load_source(const fs::path& path) {
  const std::string text = read_file(path);
  SourceFile file = with_path(path, [&] { return parse_program(text); });
  file.path = path.string();
  return file;
}

Lattice load_lattice_for(const fs::path& labels_path,
                         const std::optional<fs::path>& override_path) {
  std::optional<fs::path> lattice_path = override_path;
  if (!lattice_path) {
    const std::string text = read_file(labels_path);
    if (auto ref = with_path(labels_path, [&] { return peek_lattice_ref(text); })) {
      lattice_path = labels_path.parent_path() / *ref;
    }
  }
  if (!lattice_path) return Lattice::two_point();
  const std::string text = read_file(*lattice_path);
  return with_path(*lattice_path, [&] { return parse_lattice(text); });
}

LoadedLabels load_labels(const fs::path& path, const std::optional<fs::path>& lattice_override) {
  Lattice lattice = load_lattice_for(path, lattice_override);
  const std::string text = read_file(path);
  LabelFile labels = with_path(path, [&] { return parse_labels(text, lattice); });
  return {std::move(lattice), std::move(labels)};
}

std::vector<CorpusEntry> load_manifest(const fs::path& dir) {
  const fs::path path = dir / "manifest.json";
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Config, path.string() + ": " + e.what());
  }
  std::vector<CorpusEntry> out;
  try {
    for (const auto& j : doc.at("entries")) {
      CorpusEntry e;
      e.name = j.at("name").get<std::string>();
      e.program = j.at("program").get<std::string>();
      e.labels = j.at("labels").get<std::string>();
      const std::string expect = j.at("expect").get<std::string>();
      if (expect != "accept" && expect != "reject") {
        fail(ErrorKind::Config, path.string() + ": bad expect value '" + expect + "'");
      }
      e.expect_accept = expect == "accept";
      e.insecure = j.value("insecure", false);
      if (j.contains("side_condition_line")) e.side_condition_line = j["side_condition_line"].get<int>();
      if (j.contains("golden")) e.golden = j["golden"].get<std::string>();
      out.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Config, path.string() + ": " + e.what());
  }
  return out;
}

bool SelftestReport::all_pass() const {
  for (const auto& r : rows) {
    if (!r.pass) return false;
  }
  return !rows.empty();
}

SelftestReport run_selftest(const fs::path& dir, const SelftestOptions& options) {
  using Clock = std::chrono::steady_clock;
  SelftestReport report;
  const auto start_all = Clock::now();
  for (const CorpusEntry& entry : load_manifest(dir)) {
    const auto start = Clock::now();
    SelftestRow row;
    row.name = entry.name;
    row.expected = entry.expect_accept ? "ACCEPT" : "REJECT";
    std::vector<std::string> problems;

    const SourceFile src = load_source(dir / entry.program);
    LoadedLabels labels = load_labels(dir / entry.labels, std::nullopt);
    CheckOptions copts;
    copts.init = src.init;
    const CheckReport check = check_program(src.program, labels.labels, labels.lattice, copts);
    row.actual = check.accept ? "ACCEPT" : "REJECT";
    if (check.accept != entry.expect_accept) problems.push_back("verdict");

    if (entry.side_condition_line) {
      bool found = false;
      for (const auto& s : check.side_conditions) found |= s.line == *entry.side_condition_line;
      if (!found) {
        problems.push_back("no side-condition failure at line " +
                           std::to_string(*entry.side_condition_line));
      }
    }
    if (entry.golden) {
      const std::string want = read_file(dir / *entry.golden);
      const std::string got =
          render_program(*check.transform.program, src.init, check.transform.alpha_final);
      if (want != got) problems.push_back("transformed program differs from golden");
    }

    NiOptions nopts;
    nopts.seed = options.seed;
    nopts.threads = options.threads;
    if (check.accept && options.ni_trials > 0) {
      nopts.trials = options.ni_trials;
      row.ni = ni_test(src.program, check, labels.lattice, nopts, src.init);
      if (row.ni->failed != 0) problems.push_back("noninterference failure on accepted program");
    } else if (entry.insecure && options.ni_force_trials > 0) {
      nopts.trials = options.ni_force_trials;
      row.ni = ni_test(src.program, check, labels.lattice, nopts, src.init);
      if (!row.ni->counterexample) problems.push_back("no counterexample found");
    }

    row.pass = problems.empty();
    for (const auto& p : problems) row.detail += (row.detail.empty() ? "" : "; ") + p;
    row.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    report.rows.push_back(std::move(row));
  }
  report.total_millis = std::chrono::duration<double, std::milli>(Clock::now() - start_all).count();
  return report;
}

}  // namespace iflow

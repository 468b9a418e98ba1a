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

// iflow command-line driver; a thin shell over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "iflow/iflow.h"

#ifndef IFLOW_DEFAULT_CORPUS_DIR
#define IFLOW_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace {

int exit_code(iflow_status s) {
  switch (s) {
    case IFLOW_OK: return 0;
    case IFLOW_REJECT: return 1;
    default: return 2;
  }
}

struct Handles {
  iflow_context* ctx = iflow_context_create();
  iflow_program* program = nullptr;
  iflow_result* result = nullptr;
  ~Handles() {
    iflow_result_destroy(result);
    iflow_program_destroy(program);
    iflow_context_destroy(ctx);
  }
};

bool write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "iflow: cannot write " << path << "\n";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Static information-flow checker for a WHILE language with dependent labels"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", iflow_version());

  std::string lattice_path;
  std::string format = "text";
  std::uint64_t seed = 1;
  app.add_option("--lattice", lattice_path, "Lattice file (overrides the label file's)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "Seed for randomized testing");

  std::string file;
  std::string labels;
  std::string output;

  auto* parse = app.add_subcommand("parse", "Parse a program and print it back");
  parse->add_option("FILE", file, "Program")->required();

  bool fully_bracketed = false;
  auto* transform = app.add_subcommand("transform", "Print the transformed program");
  transform->add_option("FILE", file, "Program")->required();
  transform->add_option("-o", output, "Write the transformed program to this file");
  transform->add_flag("--fully-bracketed", fully_bracketed, "Bracket every assignment first");

  auto* analyze = app.add_subcommand("analyze", "Dump live sets and predicates per site");
  analyze->add_option("FILE", file, "Program")->required();
  analyze->add_option("--labels", labels, "Label file")->required();

  bool levels_only = false;
  std::size_t guard_cap = 12;
  auto* check = app.add_subcommand("check", "Type check a program");
  check->add_option("FILE", file, "Program")->required();
  check->add_option("--labels", labels, "Label file")->required();
  check->add_flag("--levels-only", levels_only, "Require every label to be a plain level");
  check->add_option("--guard-cap", guard_cap, "Maximum guards split per obligation")
      ->check(CLI::PositiveNumber);

  bool erasure = false;
  std::int64_t max_steps = 10000;
  std::string init;
  auto* run = app.add_subcommand("run", "Run a program and print the final memory");
  run->add_option("FILE", file, "Program")->required();
  run->add_flag("--erasure", erasure, "Run the transformed program under erasure semantics");
  run->add_option("--labels", labels, "Label file (needed with --erasure)");
  run->add_option("--max-steps", max_steps, "Step limit")->check(CLI::PositiveNumber);
  run->add_option("--init", init, "Initial values, e.g. x=3,y=0");

  bool construct = false;
  bool verify = false;
  auto* hs = app.add_subcommand("hs", "Flow-sensitive level inference");
  hs->add_option("FILE", file, "Program")->required();
  hs->add_option("--labels", labels, "Initial levels")->required();
  hs->add_flag("--construct", construct, "Construct dependent labels for the bracketed program");
  hs->add_flag("--verify", verify, "Type check the construction in levels-only mode");
  hs->add_option("-o", output,
                 "With --construct, write PREFIX.while and PREFIX.labels");

  std::int64_t trials = 1000;
  bool force = false;
  auto* ni = app.add_subcommand("ni-test", "Randomized noninterference testing");
  ni->add_option("FILE", file, "Program")->required();
  ni->add_option("--labels", labels, "Label file")->required();
  ni->add_option("--trials", trials, "Number of memory pairs")->check(CLI::PositiveNumber);
  ni->add_option("--max-steps", max_steps, "Step limit per run")->check(CLI::PositiveNumber);
  ni->add_flag("--force", force, "Test even if the checker rejects the program");

  std::string corpus = IFLOW_DEFAULT_CORPUS_DIR;
  auto* selftest = app.add_subcommand("selftest", "Run the bundled corpus");
  selftest->add_option("--corpus", corpus, "Corpus directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Handles h;
  if (h.ctx == nullptr) {
    std::cerr << "iflow: out of memory\n";
    return 2;
  }
  iflow_context_set_format(h.ctx, format == "json" ? IFLOW_FORMAT_JSON : IFLOW_FORMAT_TEXT);
  iflow_context_set_seed(h.ctx, seed);
  iflow_context_set_max_steps(h.ctx, max_steps);
  iflow_context_set_levels_only(h.ctx, levels_only ? 1 : 0);
  iflow_context_set_guard_cap(h.ctx, guard_cap);
  if (!lattice_path.empty()) iflow_context_set_lattice(h.ctx, lattice_path.c_str());

  iflow_status status = IFLOW_OK;
  if (!selftest->parsed()) status = iflow_program_parse_file(h.ctx, file.c_str(), &h.program);
  const char* labels_arg = labels.empty() ? nullptr : labels.c_str();

  if (status == IFLOW_OK) {
    if (parse->parsed()) {
      status = iflow_render(h.ctx, h.program, &h.result);
    } else if (transform->parsed()) {
      status = iflow_transform(h.ctx, h.program, fully_bracketed, &h.result);
    } else if (analyze->parsed()) {
      status = iflow_analyze(h.ctx, h.program, labels_arg, &h.result);
    } else if (check->parsed()) {
      status = iflow_check(h.ctx, h.program, labels_arg, &h.result);
    } else if (run->parsed()) {
      status = iflow_run(h.ctx, h.program, erasure, labels_arg,
                         init.empty() ? nullptr : init.c_str(), &h.result);
    } else if (hs->parsed()) {
      unsigned flags = 0;
      if (construct) flags |= IFLOW_HS_CONSTRUCT;
      if (verify) flags |= IFLOW_HS_VERIFY;
      status = iflow_hs(h.ctx, h.program, labels_arg, flags, &h.result);
    } else if (ni->parsed()) {
      status = iflow_ni_test(h.ctx, h.program, labels_arg, trials, force, &h.result);
    } else if (selftest->parsed()) {
      status = iflow_selftest(h.ctx, corpus.c_str(), &h.result);
    }
  }

  if (h.result != nullptr) {
    if (transform->parsed() && !output.empty()) {
      if (!write_file(output, iflow_result_artifact(h.result, "program"))) return 2;
    } else {
      std::fputs(iflow_result_text(h.result), stdout);
    }
    if (hs->parsed() && !output.empty()) {
      const char* prog = iflow_result_artifact(h.result, "program");
      const char* lab = iflow_result_artifact(h.result, "labels");
      if (prog == nullptr || lab == nullptr) {
        std::cerr << "iflow: -o requires --construct\n";
        return 2;
      }
      if (!write_file(output + ".while", prog) || !write_file(output + ".labels", lab)) return 2;
    }
  }
  if (status != IFLOW_OK && status != IFLOW_REJECT) {
    std::cerr << "iflow: " << iflow_status_name(status) << ": "
              << iflow_context_last_error(h.ctx) << "\n";
  }
  return exit_code(status);
}

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

#include "iflow/iflow.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "core/corpus.hpp"
#include "core/error.hpp"
#include "core/hs.hpp"
#include "core/interp.hpp"
#include "core/ni.hpp"
#include "core/parser.hpp"
#include "core/printer.hpp"
#include "core/projection.hpp"
#include "core/report.hpp"
#include "core/transform.hpp"
#include "core/typecheck.hpp"

struct iflow_context {
  std::optional<std::filesystem::path> lattice;
  iflow::Format format = iflow::Format::Text;
  std::uint64_t seed = 1;
  std::int64_t max_steps = iflow::kDefaultMaxSteps;
  bool levels_only = false;
  std::size_t guard_cap = iflow::kDefaultGuardCap;
  unsigned threads = 0;
  std::string last_error;
};

struct iflow_program {
  iflow::SourceFile source;
};

struct iflow_result {
  std::string text;
  std::map<std::string, std::string> artifacts;
};

namespace {

using namespace iflow;

iflow_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return IFLOW_ERROR_USAGE;
    case ErrorKind::Parse: return IFLOW_ERROR_PARSE;
    case ErrorKind::Config: return IFLOW_ERROR_CONFIG;
    case ErrorKind::Runtime: return IFLOW_ERROR_RUNTIME;
    case ErrorKind::Analysis:
    case ErrorKind::Internal: return IFLOW_ERROR_INTERNAL;
  }
  return IFLOW_ERROR_INTERNAL;
}

// Runs `body`, translating exceptions into a status and the context's error.
template <typename F>
iflow_status guarded(iflow_context* ctx, F&& body) {
  if (ctx == nullptr) return IFLOW_ERROR_USAGE;
  ctx->last_error.clear();
  try {
    return body();
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return IFLOW_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = std::string("internal error: ") + e.what();
    return IFLOW_ERROR_INTERNAL;
  }
}

void require(bool ok, const char* message) {
  if (!ok) fail(ErrorKind::Usage, message);
}

iflow_result* emit(iflow_result** out, std::string text,
                   std::map<std::string, std::string> artifacts = {}) {
  *out = new iflow_result{std::move(text), std::move(artifacts)};
  return *out;
}

CheckOptions check_options(const iflow_context* ctx, const SourceFile& src) {
  CheckOptions opts;
  opts.levels_only = ctx->levels_only;
  opts.guard_cap = ctx->guard_cap;
  opts.init = src.init;
  return opts;
}

LoadedLabels labels_for(const iflow_context* ctx, const char* path) {
  require(path != nullptr && *path != '\0', "a label file is required (--labels)");
  return load_labels(path, ctx->lattice);
}

// Memory over the program's variables: zero, then `init` headers, then `extra`.
Memory initial_memory(const SourceFile& src, const Memory& extra) {
  Memory m;
  for (const auto& v : program_vars(*src.program)) m[v] = 0;
  for (const auto& [k, v] : src.init) m[k] = v;
  for (const auto& [k, v] : extra) m[k] = v;
  return m;
}

std::string constructed_labels_text(const Construction& built, const Lattice& lattice) {
  std::ostringstream out;
  out << "# constructed from the final flow-sensitive levels\n";
  for (const auto& [v, b] : built.env) {
    out << "label " << v << " : " << lattice.name(b.level) << ";  # " << b.rule << "\n";
  }
  return out.str();
}

}  // namespace

extern "C" {

const char* iflow_version(void) { return "0.1.0"; }

const char* iflow_status_name(iflow_status status) {
  switch (status) {
    case IFLOW_OK: return "ok";
    case IFLOW_REJECT: return "reject";
    case IFLOW_ERROR_USAGE: return "usage error";
    case IFLOW_ERROR_PARSE: return "parse error";
    case IFLOW_ERROR_CONFIG: return "configuration error";
    case IFLOW_ERROR_RUNTIME: return "runtime error";
    case IFLOW_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

iflow_context* iflow_context_create(void) { return new (std::nothrow) iflow_context(); }

void iflow_context_destroy(iflow_context* ctx) { delete ctx; }

const char* iflow_context_last_error(const iflow_context* ctx) {
  return ctx == nullptr ? "null context" : ctx->last_error.c_str();
}

iflow_status iflow_context_set_lattice(iflow_context* ctx, const char* path) {
  return guarded(ctx, [&] {
    if (path == nullptr) {
      ctx->lattice.reset();
    } else {
      ctx->lattice = std::filesystem::path(path);
    }
    return IFLOW_OK;
  });
}

iflow_status iflow_context_set_format(iflow_context* ctx, iflow_format format) {
  return guarded(ctx, [&] {
    require(format == IFLOW_FORMAT_TEXT || format == IFLOW_FORMAT_JSON, "unknown format");
    ctx->format = format == IFLOW_FORMAT_JSON ? Format::Json : Format::Text;
    return IFLOW_OK;
  });
}

iflow_status iflow_context_set_seed(iflow_context* ctx, uint64_t seed) {
  return guarded(ctx, [&] {
    ctx->seed = seed;
    return IFLOW_OK;
  });
}

iflow_status iflow_context_set_max_steps(iflow_context* ctx, int64_t max_steps) {
  return guarded(ctx, [&] {
    require(max_steps > 0, "max steps must be positive");
    ctx->max_steps = max_steps;
    return IFLOW_OK;
  });
}

iflow_status iflow_context_set_levels_only(iflow_context* ctx, int levels_only) {
  return guarded(ctx, [&] {
    ctx->levels_only = levels_only != 0;
    return IFLOW_OK;
  });
}

iflow_status iflow_context_set_guard_cap(iflow_context* ctx, size_t cap) {
  return guarded(ctx, [&] {
    require(cap > 0, "guard cap must be positive");
    ctx->guard_cap = cap;
    return IFLOW_OK;
  });
}

iflow_status iflow_context_set_threads(iflow_context* ctx, unsigned threads) {
  return guarded(ctx, [&] {
    ctx->threads = threads;
    return IFLOW_OK;
  });
}

iflow_status iflow_program_parse_file(iflow_context* ctx, const char* path,
                                      iflow_program** out) {
  return guarded(ctx, [&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = new iflow_program{load_source(path)};
    return IFLOW_OK;
  });
}

iflow_status iflow_program_parse_text(iflow_context* ctx, const char* text,
                                      iflow_program** out) {
  return guarded(ctx, [&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = new iflow_program{parse_program(text)};
    return IFLOW_OK;
  });
}

void iflow_program_destroy(iflow_program* program) { delete program; }

iflow_status iflow_render(iflow_context* ctx, const iflow_program* program,
                          iflow_result** out) {
  return guarded(ctx, [&] {
    require(program != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    emit(out, report_program(program->source, ctx->format));
    return IFLOW_OK;
  });
}

iflow_status iflow_transform(iflow_context* ctx, const iflow_program* program,
                             int fully_bracketed, iflow_result** out) {
  return guarded(ctx, [&] {
    require(program != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const SourceFile& src = program->source;
    const CmdPtr input = fully_bracketed ? bracket_all(src.program) : src.program;
    std::set<std::string> extra;
    for (const auto& [k, v] : src.init) extra.insert(k);
    const TransformResult t = transform_program(input, extra);
    emit(out, report_transform(t, src.init, ctx->format),
         {{"program", render_program(*t.program, src.init, t.alpha_final)}});
    return IFLOW_OK;
  });
}

iflow_status iflow_analyze(iflow_context* ctx, const iflow_program* program,
                           const char* labels_path, iflow_result** out) {
  return guarded(ctx, [&] {
    require(program != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const LoadedLabels labels = labels_for(ctx, labels_path);
    const CheckReport r = check_program(program->source.program, labels.labels, labels.lattice,
                                        check_options(ctx, program->source));
    emit(out, report_analyze(r, labels.lattice, ctx->format));
    return IFLOW_OK;
  });
}

iflow_status iflow_check(iflow_context* ctx, const iflow_program* program,
                         const char* labels_path, iflow_result** out) {
  return guarded(ctx, [&] {
    require(program != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const LoadedLabels labels = labels_for(ctx, labels_path);
    const CheckReport r = check_program(program->source.program, labels.labels, labels.lattice,
                                        check_options(ctx, program->source));
    emit(out, report_check(r, labels.lattice, ctx->format));
    return r.accept ? IFLOW_OK : IFLOW_REJECT;
  });
}

iflow_status iflow_run(iflow_context* ctx, const iflow_program* program, int erasure,
                       const char* labels_path, const char* init, iflow_result** out) {
  return guarded(ctx, [&] {
    require(program != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const SourceFile& src = program->source;
    const Memory extra = init != nullptr ? parse_assignments(init) : Memory{};
    Memory m0 = initial_memory(src, extra);
    RunOutcome outcome;
    if (!erasure) {
      outcome = run(src.program, m0, ctx->max_steps);
    } else {
      const LoadedLabels labels = labels_for(ctx, labels_path);
      CheckOptions opts = check_options(ctx, src);
      for (const auto& [k, v] : extra) opts.init[k] = v;
      const CheckReport r = check_program(src.program, labels.labels, labels.lattice, opts);
      for (const auto& v : fresh_vars(*r.transform.program)) m0[v] = 0;
      outcome = erasure_run(r.transform.program, m0, r.env, r.live, ctx->max_steps);
      if (auto* t = std::get_if<Terminated>(&outcome)) {
        t->final = project_memory(t->final, r.transform.alpha_final);
      }
    }
    emit(out, report_run(outcome, ctx->format));
    if (std::holds_alternative<Terminated>(outcome)) return IFLOW_OK;
    ctx->last_error = describe(outcome);
    return IFLOW_ERROR_RUNTIME;
  });
}

iflow_status iflow_hs(iflow_context* ctx, const iflow_program* program,
                      const char* labels_path, unsigned flags, iflow_result** out) {
  return guarded(ctx, [&] {
    require(program != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const SourceFile& src = program->source;
    const LoadedLabels labels = labels_for(ctx, labels_path);
    const Lattice& lattice = labels.lattice;
    HsEnv env;
    std::set<std::string> vars = program_vars(*src.program);
    for (const auto& [k, v] : src.init) vars.insert(k);
    for (const auto& v : vars) {
      const LabelPtr t = labels.labels.resolve(v);
      if (!t) fail(ErrorKind::Config, "no initial level for '" + v + "'");
      if (!is_bare_level(*t)) {
        fail(ErrorKind::Config, "initial level of '" + v + "' must be a plain security level");
      }
      env[v] = t->level;
    }
    const Level pc = lattice.bottom();
    const HsEnv final_env = hs_check(pc, env, *src.program, lattice);
    std::optional<Construction> built;
    std::optional<VerifyReport> verified;
    std::map<std::string, std::string> artifacts;
    if (flags & (IFLOW_HS_CONSTRUCT | IFLOW_HS_VERIFY)) {
      built = construct_env(pc, env, bracket_all(src.program), lattice);
      artifacts["program"] = render_program(*built->program, src.init, built->alpha_out);
      artifacts["labels"] = constructed_labels_text(*built, lattice);
    }
    if (flags & IFLOW_HS_VERIFY) verified = verify_construction(*built, pc, lattice);
    emit(out,
         report_hs(final_env, built ? &*built : nullptr, verified ? &*verified : nullptr,
                   lattice, ctx->format),
         std::move(artifacts));
    return verified && !verified->ok ? IFLOW_REJECT : IFLOW_OK;
  });
}

iflow_status iflow_ni_test(iflow_context* ctx, const iflow_program* program,
                           const char* labels_path, int64_t trials, int force,
                           iflow_result** out) {
  return guarded(ctx, [&] {
    require(program != nullptr && out != nullptr, "null argument");
    require(trials > 0, "trial count must be positive");
    *out = nullptr;
    const SourceFile& src = program->source;
    const LoadedLabels labels = labels_for(ctx, labels_path);
    const CheckReport r =
        check_program(src.program, labels.labels, labels.lattice, check_options(ctx, src));
    if (!r.accept && !force) {
      fail(ErrorKind::Usage,
           "the checker rejects this program; pass --force to search for a counterexample");
    }
    NiOptions opts;
    opts.trials = trials;
    opts.seed = ctx->seed;
    opts.max_steps = ctx->max_steps;
    opts.threads = ctx->threads;
    const NiTrialReport report = ni_test(src.program, r, labels.lattice, opts, src.init);
    emit(out, report_ni(report, ctx->format));
    return report.counterexample ? IFLOW_REJECT : IFLOW_OK;
  });
}

iflow_status iflow_selftest(iflow_context* ctx, const char* corpus_dir, iflow_result** out) {
  return guarded(ctx, [&] {
    require(corpus_dir != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    SelftestOptions opts;
    opts.seed = ctx->seed;
    opts.threads = ctx->threads;
    const SelftestReport r = run_selftest(corpus_dir, opts);
    emit(out, report_selftest(r, ctx->format));
    return r.all_pass() ? IFLOW_OK : IFLOW_REJECT;
  });
}

const char* iflow_result_text(const iflow_result* result) {
  return result == nullptr ? "" : result->text.c_str();
}

const char* iflow_result_artifact(const iflow_result* result, const char* name) {
  if (result == nullptr || name == nullptr) return nullptr;
  auto it = result->artifacts.find(name);
  return it == result->artifacts.end() ? nullptr : it->second.c_str();
}

void iflow_result_destroy(iflow_result* result) { delete result; }

}  // extern "C"

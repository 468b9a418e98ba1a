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

// C interface to the iflow checker. All handles are opaque; functions report
// failures through iflow_status and iflow_context_last_error().

#ifndef IFLOW_IFLOW_H
#define IFLOW_IFLOW_H

#include <stddef.h>
#include <stdint.h>

#if defined(IFLOW_BUILDING_LIBRARY)
#define IFLOW_API __attribute__((visibility("default")))
#else
#define IFLOW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iflow_status {
  IFLOW_OK = 0,
  IFLOW_REJECT = 1,  // check rejected, counterexample found, or selftest row failed
  IFLOW_ERROR_USAGE = 2,
  IFLOW_ERROR_PARSE = 3,
  IFLOW_ERROR_CONFIG = 4,
  IFLOW_ERROR_RUNTIME = 5,
  IFLOW_ERROR_INTERNAL = 6,
} iflow_status;

typedef enum iflow_format {
  IFLOW_FORMAT_TEXT = 0,
  IFLOW_FORMAT_JSON = 1,
} iflow_format;

enum {
  IFLOW_HS_CONSTRUCT = 1u << 0,
  IFLOW_HS_VERIFY = 1u << 1,
};

typedef struct iflow_context iflow_context;
typedef struct iflow_program iflow_program;
typedef struct iflow_result iflow_result;

IFLOW_API const char* iflow_version(void);
IFLOW_API const char* iflow_status_name(iflow_status status);

IFLOW_API iflow_context* iflow_context_create(void);
IFLOW_API void iflow_context_destroy(iflow_context* ctx);
// Message of the last failed call on this context; empty string if none.
IFLOW_API const char* iflow_context_last_error(const iflow_context* ctx);

// NULL restores the lattice named by the label file (or the two-point one).
IFLOW_API iflow_status iflow_context_set_lattice(iflow_context* ctx, const char* path);
IFLOW_API iflow_status iflow_context_set_format(iflow_context* ctx, iflow_format format);
IFLOW_API iflow_status iflow_context_set_seed(iflow_context* ctx, uint64_t seed);
IFLOW_API iflow_status iflow_context_set_max_steps(iflow_context* ctx, int64_t max_steps);
IFLOW_API iflow_status iflow_context_set_levels_only(iflow_context* ctx, int levels_only);
IFLOW_API iflow_status iflow_context_set_guard_cap(iflow_context* ctx, size_t cap);
// 0 = one worker per hardware thread.
IFLOW_API iflow_status iflow_context_set_threads(iflow_context* ctx, unsigned threads);

IFLOW_API iflow_status iflow_program_parse_file(iflow_context* ctx, const char* path,
                                                iflow_program** out);
IFLOW_API iflow_status iflow_program_parse_text(iflow_context* ctx, const char* text,
                                                iflow_program** out);
IFLOW_API void iflow_program_destroy(iflow_program* program);

// Every operation below stores its report in *out (also on REJECT). On an
// error status *out is NULL and the message is in iflow_context_last_error(),
// except that iflow_run still reports the partial memory of a failed run.
IFLOW_API iflow_status iflow_render(iflow_context* ctx, const iflow_program* program,
                                    iflow_result** out);
IFLOW_API iflow_status iflow_transform(iflow_context* ctx, const iflow_program* program,
                                       int fully_bracketed, iflow_result** out);
IFLOW_API iflow_status iflow_analyze(iflow_context* ctx, const iflow_program* program,
                                     const char* labels_path, iflow_result** out);
IFLOW_API iflow_status iflow_check(iflow_context* ctx, const iflow_program* program,
                                   const char* labels_path, iflow_result** out);
// `init` is a comma-separated list `x=3,y=0` (may be NULL). With `erasure`
// the program is transformed and run under erasure semantics against the
// labels; the report shows the final memory projected through the final
// active set.
IFLOW_API iflow_status iflow_run(iflow_context* ctx, const iflow_program* program,
                                 int erasure, const char* labels_path, const char* init,
                                 iflow_result** out);
// `flags` is a mask of IFLOW_HS_*. Construction fully brackets the program
// first; IFLOW_HS_VERIFY implies IFLOW_HS_CONSTRUCT.
IFLOW_API iflow_status iflow_hs(iflow_context* ctx, const iflow_program* program,
                                const char* labels_path, unsigned flags, iflow_result** out);
// Without `force`, a program the checker rejects is a usage error.
IFLOW_API iflow_status iflow_ni_test(iflow_context* ctx, const iflow_program* program,
                                     const char* labels_path, int64_t trials, int force,
                                     iflow_result** out);
IFLOW_API iflow_status iflow_selftest(iflow_context* ctx, const char* corpus_dir,
                                      iflow_result** out);

IFLOW_API const char* iflow_result_text(const iflow_result* result);
// Named secondary output, or NULL when absent: "program" (transform, hs with
// IFLOW_HS_CONSTRUCT) and "labels" (hs with IFLOW_HS_CONSTRUCT).
IFLOW_API const char* iflow_result_artifact(const iflow_result* result, const char* name);
IFLOW_API void iflow_result_destroy(iflow_result* result);

#ifdef __cplusplus
}
#endif

#endif  // IFLOW_IFLOW_H

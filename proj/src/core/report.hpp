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

#ifndef IFLOW_CORE_REPORT_HPP
#define IFLOW_CORE_REPORT_HPP

#include <optional>
#include <string>

#include "core/corpus.hpp"
#include "core/hs.hpp"
#include "core/interp.hpp"
#include "core/ni.hpp"
#include "core/typecheck.hpp"

namespace iflow {

enum class Format { Text, Json };

// Throws a Usage error for anything but "text" or "json".
Format parse_format(const std::string& name);

std::string render_fact(const Fact& f);

std::string report_check(const CheckReport& r, const Lattice& lattice, Format format);
std::string report_analyze(const CheckReport& r, const Lattice& lattice, Format format);
std::string report_transform(const TransformResult& t, const Memory& init, Format format);
std::string report_run(const RunOutcome& outcome, Format format);
std::string report_hs(const HsEnv& final_env, const Construction* built,
                      const VerifyReport* verify, const Lattice& lattice, Format format);
std::string report_ni(const NiTrialReport& r, Format format);
std::string report_selftest(const SelftestReport& r, Format format);
std::string report_program(const SourceFile& src, Format format);

}  // namespace iflow

#endif  // IFLOW_CORE_REPORT_HPP

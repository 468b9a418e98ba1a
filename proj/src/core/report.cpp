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

#include "core/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "core/error.hpp"
#include "core/printer.hpp"

namespace iflow {

using nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  fail(ErrorKind::Usage, "unknown format '" + name + "' (expected text or json)");
}

std::string render_fact(const Fact& f) {
  const std::string e = render_expr(*f.expr);
  return f.holds ? e : "!(" + e + ")";
}

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json memory_json(const Memory& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

ordered_json active_json(const ActiveSet& a) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : a.entries()) j[k] = v;
  return j;
}

ordered_json vars_json(const VarSet& s) {
  ordered_json j = ordered_json::array();
  for (const auto& v : s) j.push_back(v);
  return j;
}

std::string vars_text(const VarSet& s) {
  std::string out = "{";
  for (const auto& v : s) out += (out.size() > 1 ? ", " : "") + v;
  return out + "}";
}

std::string active_text(const ActiveSet& a) {
  std::string out = "{";
  for (const auto& [k, v] : a.entries()) out += (out.size() > 1 ? ", " : "") + k + " -> " + v;
  return out + "}";
}

std::string facts_text(const FactSet& s) {
  if (s.empty()) return "true";
  std::string out;
  for (const auto& f : s.facts()) out += (out.empty() ? "" : " && ") + render_fact(f);
  return out;
}

ordered_json facts_json(const FactSet& s) {
  ordered_json j = ordered_json::array();
  for (const auto& f : s.facts()) j.push_back(render_fact(f));
  return j;
}

ordered_json witness_json(const Witness& w, const Lattice& lattice) {
  ordered_json j;
  ordered_json guards = ordered_json::array();
  for (const auto& [g, v] : w.guards) guards.push_back({{"guard", render_expr(*g)}, {"value", v}});
  j["guards"] = guards;
  j["lhs_level"] = lattice.name(w.lhs_level);
  j["rhs_level"] = lattice.name(w.rhs_level);
  j["memory"] = w.memory ? memory_json(*w.memory) : ordered_json(nullptr);
  return j;
}

std::string witness_text(const Witness& w, const Lattice& lattice) {
  std::string out = "case";
  for (const auto& [g, v] : w.guards) out += " [" + render_expr(*g) + (v ? "]=true" : "]=false");
  if (w.guards.empty()) out += " (no guards)";
  out += ": " + lattice.name(w.lhs_level) + " is not below " + lattice.name(w.rhs_level);
  if (w.memory) out += "; e.g. " + render_memory(*w.memory);
  return out;
}

// Assignment statements of a transformed program by site.
void collect_sites(const Cmd& c, std::map<SiteId, const Cmd*>& out) {
  switch (c.kind) {
    case Cmd::Kind::Assign:
    case Cmd::Kind::BracketAssign: out[c.site] = &c; return;
    case Cmd::Kind::Seq:
    case Cmd::Kind::If:
      collect_sites(*c.first, out);
      collect_sites(*c.second, out);
      return;
    case Cmd::Kind::While: collect_sites(*c.first, out); return;
    case Cmd::Kind::Skip: return;
  }
}

}  // namespace

std::string report_check(const CheckReport& r, const Lattice& lattice, Format format) {
  if (format == Format::Json) {
    ordered_json j;
    j["verdict"] = r.accept ? "accept" : "reject";
    j["final_active_set"] = active_json(r.transform.alpha_final);
    j["transformed"] = render_program(*r.transform.program);
    ordered_json labels = ordered_json::object();
    for (const auto& [v, t] : r.env.entries()) labels[v] = render_label(*t, lattice);
    j["labels"] = labels;
    ordered_json wf = ordered_json::array();
    for (const auto& w : r.wellformed) {
      ordered_json e{{"var", w.var}, {"dependency", w.dependency}, {"reason", w.reason}};
      if (w.witness) e["witness"] = witness_json(*w.witness, lattice);
      wf.push_back(e);
    }
    j["wellformed"] = wf;
    ordered_json obs = ordered_json::array();
    for (const auto& o : r.obligations) {
      ordered_json e;
      e["site"] = o.site.value;
      e["line"] = o.line;
      e["target"] = o.target;
      e["hypothesis"] = facts_json(o.hypothesis);
      e["lhs"] = render_label(*o.lhs, lattice);
      e["rhs"] = render_label(*o.rhs, lattice);
      e["status"] = status_name(o.result.status);
      e["cases"] = o.result.cases;
      e["skipped"] = o.result.skipped;
      if (o.result.witness) e["witness"] = witness_json(*o.result.witness, lattice);
      if (!o.result.note.empty()) e["note"] = o.result.note;
      obs.push_back(e);
    }
    j["obligations"] = obs;
    ordered_json sides = ordered_json::array();
    for (const auto& s : r.side_conditions) {
      sides.push_back({{"site", s.site.value}, {"line", s.line}, {"target", s.target},
                       {"dependent", s.dependent}});
    }
    j["side_conditions"] = sides;
    return dump(j);
  }

  std::ostringstream out;
  out << (r.accept ? "ACCEPT" : "REJECT") << "\n";
  out << "final active set: " << active_text(r.transform.alpha_final) << "\n";
  out << "obligations: " << r.count(ObligationStatus::Valid) << " valid, "
      << r.count(ObligationStatus::Violated) << " violated, "
      << r.count(ObligationStatus::Unknown) << " unknown\n";
  for (const auto& w : r.wellformed) {
    out << "ill-formed labels: " << w.var << " reads " << w.dependency << ": " << w.reason << "\n";
  }
  for (const auto& o : r.obligations) {
    if (o.result.status == ObligationStatus::Valid) continue;
    out << status_name(o.result.status) << ": line " << o.line << " (site " << o.site.value
        << ") " << o.target << ": " << facts_text(o.hypothesis) << " |= "
        << render_label(*o.lhs, lattice) << " <= " << render_label(*o.rhs, lattice) << "\n";
    if (o.result.witness) out << "  " << witness_text(*o.result.witness, lattice) << "\n";
    if (!o.result.note.empty()) out << "  " << o.result.note << "\n";
  }
  for (const auto& s : r.side_conditions) {
    out << "liveness side condition: line " << s.line << " (site " << s.site.value
        << "): assigning " << s.target << " changes the label of live variable " << s.dependent
        << "\n";
  }
  return out.str();
}

std::string report_analyze(const CheckReport& r, const Lattice& lattice, Format format) {
  std::map<SiteId, const Cmd*> sites;
  collect_sites(*r.transform.program, sites);
  if (format == Format::Json) {
    ordered_json j;
    j["final_active_set"] = active_json(r.transform.alpha_final);
    j["transformed"] = render_program(*r.transform.program);
    j["live_at_entry"] = vars_json(r.live.entry);
    ordered_json arr = ordered_json::array();
    for (const auto& [site, cmd] : sites) {
      ordered_json e;
      e["site"] = site.value;
      e["line"] = cmd->line;
      e["statement"] = render_statement_head(*cmd);
      const LiveSets& live = r.live.at(site);
      e["live_before"] = vars_json(live.before);
      e["live_after"] = vars_json(live.after);
      auto p = r.predicates.find(site);
      e["predicate"] = p == r.predicates.end() ? ordered_json::array() : facts_json(p->second);
      arr.push_back(e);
    }
    j["sites"] = arr;
    ordered_json labels = ordered_json::object();
    for (const auto& [v, t] : r.env.entries()) labels[v] = render_label(*t, lattice);
    j["labels"] = labels;
    return dump(j);
  }
  std::ostringstream out;
  out << "final active set: " << active_text(r.transform.alpha_final) << "\n";
  out << "live at entry: " << vars_text(r.live.entry) << "\n";
  for (const auto& [site, cmd] : sites) {
    const LiveSets& live = r.live.at(site);
    auto p = r.predicates.find(site);
    out << "site " << site.value << " (line " << cmd->line << ") " << render_statement_head(*cmd)
        << "\n  live before: " << vars_text(live.before)
        << "\n  live after:  " << vars_text(live.after)
        << "\n  predicate:   " << (p == r.predicates.end() ? "true" : facts_text(p->second))
        << "\n";
  }
  return out.str();
}

std::string report_transform(const TransformResult& t, const Memory& init, Format format) {
  const std::string text = render_program(*t.program, init, t.alpha_final);
  if (format == Format::Json) {
    ordered_json j;
    j["program"] = text;
    j["final_active_set"] = active_json(t.alpha_final);
    ordered_json fresh = ordered_json::array();
    for (const auto& v : fresh_vars(*t.program)) fresh.push_back(v);
    j["fresh"] = fresh;
    return dump(j);
  }
  return text;
}

std::string report_run(const RunOutcome& outcome, Format format) {
  if (format == Format::Json) {
    ordered_json j;
    if (const auto* t = std::get_if<Terminated>(&outcome)) {
      j["status"] = "terminated";
      j["steps"] = t->steps;
      j["memory"] = memory_json(t->final);
    } else if (const auto* l = std::get_if<StepLimit>(&outcome)) {
      j["status"] = "step_limit";
      j["steps"] = l->steps;
      j["memory"] = memory_json(l->partial);
    } else {
      const auto& f = std::get<RuntimeFailure>(outcome);
      j["status"] = "runtime_error";
      j["line"] = f.line;
      j["reason"] = f.reason;
      j["memory"] = memory_json(f.partial);
    }
    return dump(j);
  }
  std::ostringstream out;
  const Memory* m = nullptr;
  if (const auto* t = std::get_if<Terminated>(&outcome)) {
    out << "terminated after " << t->steps << " steps\n";
    m = &t->final;
  } else if (const auto* l = std::get_if<StepLimit>(&outcome)) {
    out << "step limit reached after " << l->steps << " steps\n";
    m = &l->partial;
  } else {
    const auto& f = std::get<RuntimeFailure>(outcome);
    out << "runtime error at line " << f.line << ": " << f.reason << "\n";
    m = &f.partial;
  }
  for (const auto& [k, v] : *m) out << k << " = " << v << "\n";
  return out.str();
}

std::string report_hs(const HsEnv& final_env, const Construction* built,
                      const VerifyReport* verify, const Lattice& lattice, Format format) {
  if (format == Format::Json) {
    ordered_json j;
    ordered_json env = ordered_json::object();
    for (const auto& [v, l] : final_env) env[v] = lattice.name(l);
    j["final_env"] = env;
    if (built) {
      ordered_json c;
      c["program"] = render_program(*built->program, {}, built->alpha_out);
      ordered_json labels = ordered_json::object();
      for (const auto& [v, b] : built->env) {
        labels[v] = {{"level", lattice.name(b.level)}, {"rule", b.rule}};
      }
      c["labels"] = labels;
      c["merge_overlaps"] = built->overlaps;
      ordered_json conflicts = ordered_json::array();
      for (const auto& m : built->conflicts) {
        conflicts.push_back({{"var", m.var}, {"kept", lattice.name(m.kept)},
                             {"dropped", lattice.name(m.dropped)}});
      }
      c["conflicts"] = conflicts;
      ordered_json ext = ordered_json::array();
      for (const auto& e : built->extension_violations) {
        ext.push_back({{"var", e.var}, {"line", e.line}, {"before", lattice.name(e.before)},
                       {"after", lattice.name(e.after)}});
      }
      c["extension_violations"] = ext;
      j["construction"] = c;
    }
    if (verify) {
      ordered_json v;
      v["ok"] = verify->ok;
      v["accepted"] = verify->accepted;
      v["domain_ok"] = verify->domain_ok;
      v["outside_domain"] = verify->outside_domain;
      v["obligations_violated"] = verify->check.count(ObligationStatus::Violated);
      j["verify"] = v;
    }
    return dump(j);
  }
  std::ostringstream out;
  out << "final levels:\n";
  for (const auto& [v, l] : final_env) out << "  " << v << " : " << lattice.name(l) << "\n";
  if (built) {
    out << "transformed program:\n" << render_program(*built->program, {}, built->alpha_out);
    out << "constructed labels:\n";
    for (const auto& [v, b] : built->env) {
      out << "label " << v << " : " << lattice.name(b.level) << ";  # " << b.rule << "\n";
    }
    out << "merge overlaps: " << built->overlaps << ", conflicts: " << built->conflicts.size()
        << ", extension violations: " << built->extension_violations.size() << "\n";
  }
  if (verify) {
    out << "verification: " << (verify->ok ? "OK" : "FAILED") << " (type check "
        << (verify->accepted ? "accepts" : "rejects") << ", domain "
        << (verify->domain_ok ? "ok" : "violated") << ")\n";
    for (const auto& v : verify->outside_domain) out << "  outside domain: " << v << "\n";
    if (!verify->accepted) out << report_check(verify->check, lattice, Format::Text);
  }
  return out.str();
}

std::string report_ni(const NiTrialReport& r, Format format) {
  if (format == Format::Json) {
    ordered_json j;
    j["attempted"] = r.attempted;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["discarded"] = {{"divergence", r.discarded_divergence},
                      {"runtime", r.discarded_runtime},
                      {"sampling", r.discarded_sampling}};
    if (r.counterexample) {
      const auto& c = *r.counterexample;
      j["counterexample"] = {{"trial", c.trial},
                             {"kind", failure_name(c.kind)},
                             {"observer", c.observer},
                             {"variable", c.variable},
                             {"detail", c.detail},
                             {"initial1", memory_json(c.initial1)},
                             {"initial2", memory_json(c.initial2)},
                             {"final1", memory_json(c.final1)},
                             {"final2", memory_json(c.final2)}};
    } else {
      j["counterexample"] = nullptr;
    }
    return dump(j);
  }
  std::ostringstream out;
  out << "trials: " << r.attempted << ", passed: " << r.passed << ", failed: " << r.failed
      << ", discarded: " << r.discarded() << " (divergence " << r.discarded_divergence
      << ", runtime " << r.discarded_runtime << ", sampling " << r.discarded_sampling << ")\n";
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out << "counterexample (trial " << c.trial << ", " << failure_name(c.kind) << ", observer "
        << c.observer << "): " << c.detail << "\n";
    if (!c.variable.empty()) out << "  distinguishing variable: " << c.variable << "\n";
    out << "  initial 1: " << render_memory(c.initial1) << "\n"
        << "  initial 2: " << render_memory(c.initial2) << "\n"
        << "  final 1:   " << render_memory(c.final1) << "\n"
        << "  final 2:   " << render_memory(c.final2) << "\n";
  }
  return out.str();
}

std::string report_selftest(const SelftestReport& r, Format format) {
  if (format == Format::Json) {
    ordered_json j;
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
      ordered_json e{{"name", row.name},     {"expected", row.expected}, {"actual", row.actual},
                     {"pass", row.pass},     {"detail", row.detail},     {"millis", row.millis}};
      if (row.ni) {
        e["ni"] = {{"trials", row.ni->attempted},
                   {"failed", row.ni->failed},
                   {"counterexample_trial",
                    row.ni->counterexample ? ordered_json(row.ni->counterexample->trial)
                                           : ordered_json(nullptr)}};
      }
      rows.push_back(e);
    }
    j["rows"] = rows;
    j["all_pass"] = r.all_pass();
    j["total_millis"] = r.total_millis;
    return dump(j);
  }
  std::size_t name_width = 20;
  for (const auto& row : r.rows) name_width = std::max(name_width, row.name.size() + 2);
  const int nw = static_cast<int>(name_width);
  std::ostringstream out;
  out << std::left << std::setw(nw) << "entry" << std::setw(10) << "expected" << std::setw(10)
      << "actual" << std::setw(26) << "noninterference" << "result\n";
  for (const auto& row : r.rows) {
    std::string ni = "-";
    if (row.ni) {
      ni = row.ni->counterexample
               ? "leak at trial " + std::to_string(row.ni->counterexample->trial)
               : std::to_string(row.ni->passed) + "/" + std::to_string(row.ni->attempted) +
                     " passed";
    }
    out << std::setw(nw) << row.name << std::setw(10) << row.expected << std::setw(10)
        << row.actual << std::setw(26) << ni << (row.pass ? "PASS" : "FAIL");
    if (!row.detail.empty()) out << "  " << row.detail;
    out << "\n";
  }
  out << (r.all_pass() ? "all entries pass" : "FAILURES present") << " ("
      << std::fixed << std::setprecision(1) << r.total_millis << " ms)\n";
  return out.str();
}

std::string report_program(const SourceFile& src, Format format) {
  const std::string text = render_program(*src.program, src.init);
  if (format == Format::Json) {
    ordered_json j;
    j["program"] = text;
    j["init"] = memory_json(src.init);
    j["assignments"] = count_assignments(*src.program);
    j["brackets"] = contains_bracket(*src.program);
    ordered_json vars = ordered_json::array();
    for (const auto& v : program_vars(*src.program)) vars.push_back(v);
    j["variables"] = vars;
    return dump(j);
  }
  return text;
}

}  // namespace iflow

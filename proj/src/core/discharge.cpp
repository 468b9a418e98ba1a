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

#include "core/discharge.hpp"

#include <optional>
#include <random>
#include <set>

#include "core/error.hpp"

namespace iflow {

std::string_view status_name(ObligationStatus s) {
  switch (s) {
    case ObligationStatus::Valid: return "valid";
    case ObligationStatus::Violated: return "violated";
    case ObligationStatus::Unknown: return "unknown";
  }
  return "?";
}

Level label_eval_guards(const Label& t, const std::vector<std::pair<ExprPtr, bool>>& guards,
                        const Lattice& lattice) {
  switch (t.kind) {
    case Label::Kind::Level: return t.level;
    case Label::Kind::Cond: {
      for (const auto& [g, value] : guards) {
        if (*g == *t.guard) {
          return label_eval_guards(value ? *t.a : *t.b, guards, lattice);
        }
      }
      fail(ErrorKind::Internal, "guard missing from valuation");
    }
    case Label::Kind::Join:
      return lattice.join(label_eval_guards(*t.a, guards, lattice),
                          label_eval_guards(*t.b, guards, lattice));
    case Label::Kind::Meet:
      return lattice.meet(label_eval_guards(*t.a, guards, lattice),
                          label_eval_guards(*t.b, guards, lattice));
  }
  return lattice.bottom();
}

namespace {

// Literals over structurally identical atoms with opposite polarity, or a
// literal constant with the wrong truth value.
bool clashes(const std::vector<Fact>& literals) {
  for (std::size_t i = 0; i < literals.size(); ++i) {
    const Fact& a = literals[i];
    if (a.expr->kind == Expr::Kind::Literal && (a.expr->value != 0) != a.holds) return true;
    for (std::size_t j = i + 1; j < literals.size(); ++j) {
      if (a.holds != literals[j].holds && *a.expr == *literals[j].expr) return true;
    }
  }
  return false;
}

// Variables fixed by `v == n` or `v == w` facts, with w already fixed.
Memory pinned_values(const std::vector<Fact>& literals) {
  Memory pinned;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Fact& f : literals) {
      const Expr& e = *f.expr;
      if (!f.holds || e.kind != Expr::Kind::Binary || e.op != BinOp::Eq) continue;
      const auto value_of = [&](const Expr& side) -> std::optional<std::int64_t> {
        if (side.kind == Expr::Kind::Literal) return side.value;
        if (side.kind == Expr::Kind::Variable) {
          auto it = pinned.find(side.name);
          if (it != pinned.end()) return it->second;
        }
        return std::nullopt;
      };
      for (const auto& [var, other] : {std::pair{e.lhs, e.rhs}, std::pair{e.rhs, e.lhs}}) {
        if (var->kind != Expr::Kind::Variable || pinned.count(var->name)) continue;
        if (auto v = value_of(*other)) {
          pinned[var->name] = *v;
          changed = true;
        }
      }
    }
  }
  return pinned;
}

// Random search for a memory satisfying every literal; values in [-16, 16]
// first, then a wider range. Variables pinned by equalities are not sampled.
std::optional<Memory> find_memory(const std::vector<Fact>& literals) {
  std::set<std::string> vars;
  for (const Fact& f : literals) collect_free_vars(*f.expr, vars);
  const Memory pinned = pinned_values(literals);
  for (const auto& [v, value] : pinned) vars.erase(v);
  std::mt19937_64 rng(0x5eed);
  constexpr int kAttempts = 4000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::int64_t span = attempt < kAttempts / 2 ? 16 : 1000;
    std::uniform_int_distribution<std::int64_t> dist(-span, span);
    Memory m = pinned;
    for (const auto& v : vars) m[v] = dist(rng);
    bool ok = true;
    try {
      for (const Fact& f : literals) {
        if ((eval_expr(m, *f.expr) != 0) != f.holds) {
          ok = false;
          break;
        }
      }
    } catch (const Error&) {
      ok = false;
    }
    if (ok) return m;
  }
  return std::nullopt;
}

}  // namespace

DischargeResult discharge(const FactSet& hypo, const Label& lhs, const Label& rhs,
                          const Lattice& lattice, const DischargeOptions& options) {
  DischargeResult result;
  std::vector<ExprPtr> guards;
  collect_guards(lhs, guards);
  collect_guards(rhs, guards);
  if (guards.size() > options.guard_cap) {
    result.status = ObligationStatus::Unknown;
    result.note = std::to_string(guards.size()) + " guards exceed the cap of " +
                  std::to_string(options.guard_cap);
    return result;
  }

  std::vector<LinearConstraint> hypo_constraints;
  for (const Fact& f : hypo.facts()) constraints_of(*f.expr, f.holds, hypo_constraints);

  const std::size_t n = guards.size();
  bool unknown_seen = false;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    ++result.cases;
    std::vector<std::pair<ExprPtr, bool>> valuation;
    std::vector<Fact> literals = hypo.facts();
    std::vector<LinearConstraint> system = hypo_constraints;
    for (std::size_t i = 0; i < n; ++i) {
      const bool value = (bits >> i) & 1U;
      valuation.emplace_back(guards[i], value);
      literals.push_back(Fact{guards[i], value});
      constraints_of(*guards[i], value, system);
    }
    if (clashes(literals)) {
      ++result.skipped;
      continue;
    }
    const Feasibility feasible = fm_feasible(std::move(system), options.constraint_cap);
    if (feasible == Feasibility::Infeasible) {
      ++result.skipped;
      continue;
    }
    const Level l = label_eval_guards(lhs, valuation, lattice);
    const Level r = label_eval_guards(rhs, valuation, lattice);
    if (lattice.leq(l, r)) continue;

    if (feasible == Feasibility::Unknown) {
      // Cannot tell whether the case is reachable; keep looking for a
      // definite violation.
      unknown_seen = true;
      if (result.note.empty()) result.note = "constraint system exceeded the cap";
      continue;
    }
    Witness w;
    w.guards = std::move(valuation);
    w.lhs_level = l;
    w.rhs_level = r;
    if (options.search_memory) w.memory = find_memory(literals);
    result.status = ObligationStatus::Violated;
    result.witness = std::move(w);
    return result;
  }
  result.status = unknown_seen ? ObligationStatus::Unknown : ObligationStatus::Valid;
  return result;
}

}  // namespace iflow

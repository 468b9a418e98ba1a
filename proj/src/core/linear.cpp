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

#include "core/linear.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "core/printer.hpp"

namespace iflow {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

void drop_zeros(LinearTerm& t) {
  std::erase_if(t.coeff, [](const auto& kv) { return kv.second == 0; });
}

LinearTerm constant(const BigInt& k) {
  LinearTerm t;
  t.constant = k;
  return t;
}

LinearTerm atom(const std::string& name) {
  LinearTerm t;
  t.coeff[name] = 1;
  return t;
}

// floor(a / b) for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

BigInt coeff_gcd(const LinearTerm& t) {
  BigInt g = 0;
  for (const auto& [v, c] : t.coeff) g = gcd(g, abs(c));
  return g;
}

// Returns false when the constraint is trivially unsatisfiable.
bool normalize(LinearConstraint& c) {
  drop_zeros(c.term);
  if (c.term.is_constant()) {
    return c.equality ? c.term.constant == 0 : c.term.constant <= 0;
  }
  const BigInt g = coeff_gcd(c.term);
  if (g > 1) {
    if (c.equality) {
      if (c.term.constant % g != 0) return false;
      c.term.constant /= g;
    } else {
      // sum(a x) <= -k  ==>  sum(a/g x) <= floor(-k/g)
      c.term.constant = ceil_div(c.term.constant, g);
    }
    for (auto& [v, a] : c.term.coeff) a /= g;
  }
  return true;
}

// Replaces `var` in `t` by `def` (where var = def).
void substitute(LinearTerm& t, const std::string& var, const LinearTerm& def) {
  auto it = t.coeff.find(var);
  if (it == t.coeff.end()) return;
  const BigInt k = it->second;
  t.coeff.erase(it);
  t += def.scaled(k);
  drop_zeros(t);
}

}  // namespace

LinearTerm& LinearTerm::operator+=(const LinearTerm& o) {
  for (const auto& [v, c] : o.coeff) coeff[v] += c;
  constant += o.constant;
  drop_zeros(*this);
  return *this;
}

LinearTerm LinearTerm::scaled(const BigInt& k) const {
  LinearTerm out;
  if (k == 0) return out;
  for (const auto& [v, c] : coeff) out.coeff[v] = c * k;
  out.constant = constant * k;
  return out;
}

LinearTerm linearize(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal: return constant(e.value);
    case Expr::Kind::Variable: return atom(e.name);
    case Expr::Kind::Binary: break;
  }
  switch (e.op) {
    case BinOp::Add: {
      LinearTerm t = linearize(*e.lhs);
      t += linearize(*e.rhs);
      return t;
    }
    case BinOp::Sub: {
      LinearTerm t = linearize(*e.lhs);
      t += linearize(*e.rhs).scaled(-1);
      return t;
    }
    case BinOp::Mul: {
      LinearTerm a = linearize(*e.lhs);
      LinearTerm b = linearize(*e.rhs);
      if (a.is_constant()) return b.scaled(a.constant);
      if (b.is_constant()) return a.scaled(b.constant);
      break;
    }
    default: break;
  }
  // Opaque: a fresh unknown per distinct sub-expression text.
  return atom("{" + render_expr(e) + "}");
}

void constraints_of(const Expr& e, bool holds, std::vector<LinearConstraint>& out) {
  if (e.kind == Expr::Kind::Binary) {
    if (e.op == BinOp::And && holds) {
      constraints_of(*e.lhs, true, out);
      constraints_of(*e.rhs, true, out);
      return;
    }
    if (e.op == BinOp::Or && !holds) {
      constraints_of(*e.lhs, false, out);
      constraints_of(*e.rhs, false, out);
      return;
    }
    if (is_comparison(e.op)) {
      BinOp op = e.op;
      if (!holds) {
        switch (op) {
          case BinOp::Eq: op = BinOp::Ne; break;
          case BinOp::Ne: op = BinOp::Eq; break;
          case BinOp::Lt: op = BinOp::Ge; break;
          case BinOp::Le: op = BinOp::Gt; break;
          case BinOp::Gt: op = BinOp::Le; break;
          case BinOp::Ge: op = BinOp::Lt; break;
          default: break;
        }
      }
      LinearTerm d = linearize(*e.lhs);
      d += linearize(*e.rhs).scaled(-1);  // lhs - rhs
      switch (op) {
        case BinOp::Eq: out.push_back({d, true}); return;
        case BinOp::Ne: return;  // disjunctive; not representable
        case BinOp::Le: out.push_back({d, false}); return;
        case BinOp::Lt: d.constant += 1; out.push_back({d, false}); return;
        case BinOp::Ge: out.push_back({d.scaled(-1), false}); return;
        case BinOp::Gt: {
          LinearTerm n = d.scaled(-1);
          n.constant += 1;
          out.push_back({n, false});
          return;
        }
        default: return;
      }
    }
    if (e.op == BinOp::And || e.op == BinOp::Or) return;
  }
  // A value used as a truth value: zero is an equation, nonzero is not.
  if (!holds) out.push_back({linearize(e), true});
  else if (e.kind == Expr::Kind::Literal && e.value == 0) out.push_back({constant(1), false});
}

Feasibility fm_feasible(std::vector<LinearConstraint> system, std::size_t cap) {
  for (auto& c : system) {
    if (!normalize(c)) return Feasibility::Infeasible;
  }

  // Eliminate equalities, preferring a unit coefficient so substitution
  // stays integral; otherwise split into two inequalities.
  std::vector<LinearConstraint> ineqs;
  while (true) {
    auto eq = std::find_if(system.begin(), system.end(), [](const LinearConstraint& c) {
      return c.equality && !c.term.is_constant();
    });
    if (eq == system.end()) break;
    LinearConstraint chosen = *eq;
    system.erase(eq);
    std::string var;
    for (const auto& [v, a] : chosen.term.coeff) {
      if (abs(a) == 1) {
        var = v;
        break;
      }
    }
    if (var.empty()) {
      system.push_back({chosen.term, false});
      system.push_back({chosen.term.scaled(-1), false});
      continue;
    }
    // a*var + rest == 0  ==>  var = -rest / a, with a = +-1.
    const BigInt a = chosen.term.coeff.at(var);
    LinearTerm rest = chosen.term;
    rest.coeff.erase(var);
    LinearTerm def = rest.scaled(-a);  // 1/a == a for a = +-1
    for (auto& c : system) {
      substitute(c.term, var, def);
      if (!normalize(c)) return Feasibility::Infeasible;
    }
  }
  for (auto& c : system) {
    if (c.equality) continue;  // constant and already checked
    ineqs.push_back(std::move(c));
  }

  auto dedupe = [](std::vector<LinearConstraint>& v) {
    // Keep the tightest constant per coefficient vector.
    std::map<std::map<std::string, BigInt>, BigInt> best;
    for (const auto& c : v) {
      auto [it, inserted] = best.emplace(c.term.coeff, c.term.constant);
      if (!inserted && c.term.constant > it->second) it->second = c.term.constant;
    }
    v.clear();
    for (auto& [coeff, k] : best) {
      LinearConstraint c;
      c.term.coeff = coeff;
      c.term.constant = k;
      v.push_back(std::move(c));
    }
  };

  while (true) {
    std::vector<LinearConstraint> live;
    for (auto& c : ineqs) {
      if (c.term.is_constant()) {
        if (c.term.constant > 0) return Feasibility::Infeasible;
      } else {
        live.push_back(std::move(c));
      }
    }
    dedupe(live);
    if (live.size() > cap) return Feasibility::Unknown;
    if (live.empty()) return Feasibility::Feasible;

    // Pick the variable whose elimination creates the fewest constraints.
    std::map<std::string, std::pair<std::size_t, std::size_t>> signs;
    for (const auto& c : live) {
      for (const auto& [v, a] : c.term.coeff) {
        auto& s = signs[v];
        (a > 0 ? s.first : s.second)++;
      }
    }
    std::string var;
    std::size_t best_cost = 0;
    for (const auto& [v, s] : signs) {
      const std::size_t cost = s.first * s.second;
      if (var.empty() || cost < best_cost) {
        var = v;
        best_cost = cost;
      }
    }

    std::vector<LinearConstraint> pos, neg, next;
    for (auto& c : live) {
      auto it = c.term.coeff.find(var);
      if (it == c.term.coeff.end()) next.push_back(std::move(c));
      else if (it->second > 0) pos.push_back(std::move(c));
      else neg.push_back(std::move(c));
    }
    for (const auto& p : pos) {
      const BigInt ap = p.term.coeff.at(var);
      for (const auto& n : neg) {
        const BigInt an = -n.term.coeff.at(var);
        LinearConstraint combined;
        combined.term = p.term.scaled(an);
        combined.term += n.term.scaled(ap);
        if (!normalize(combined)) return Feasibility::Infeasible;
        next.push_back(std::move(combined));
      }
    }
    if (next.size() > cap) return Feasibility::Unknown;
    ineqs = std::move(next);
  }
}

}  // namespace iflow

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

#ifndef IFLOW_CORE_LINEAR_HPP
#define IFLOW_CORE_LINEAR_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "core/ast.hpp"

namespace iflow {

using BigInt = boost::multiprecision::cpp_int;

// sum(coeff[v] * v) + constant
struct LinearTerm {
  std::map<std::string, BigInt> coeff;
  BigInt constant = 0;

  LinearTerm& operator+=(const LinearTerm& o);
  LinearTerm scaled(const BigInt& k) const;
  bool is_constant() const { return coeff.empty(); }
};

// term <= 0, or term == 0 when `equality`.
struct LinearConstraint {
  LinearTerm term;
  bool equality = false;
};

// Integer-linear view of an expression. Sub-expressions outside linear
// arithmetic (`%`, products of two variables, comparisons used as values)
// become opaque atoms named by their text, which only weakens what can be
// refuted.
LinearTerm linearize(const Expr& e);

// Constraints implied by `e` evaluating to nonzero (holds) or zero. Literals
// with no linear reading (disequalities, disjunctions) contribute nothing.
void constraints_of(const Expr& e, bool holds, std::vector<LinearConstraint>& out);

enum class Feasibility { Infeasible, Feasible, Unknown };

inline constexpr std::size_t kDefaultConstraintCap = 400;

// Fourier–Motzkin elimination over the integers: equalities are substituted
// away, every inequality is gcd-normalized with its constant rounded, and
// strict bounds are tightened by one. Infeasible is a proof that no integer
// point satisfies the system; Feasible means no contradiction was derived.
// Unknown when the system grows past `cap` constraints.
Feasibility fm_feasible(std::vector<LinearConstraint> system,
                        std::size_t cap = kDefaultConstraintCap);

}  // namespace iflow

#endif  // IFLOW_CORE_LINEAR_HPP

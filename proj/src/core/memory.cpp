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

#include "core/memory.hpp"

#include <limits>

#include "core/error.hpp"

namespace iflow {

namespace {

[[noreturn]] void overflow(const Expr& e) {
  fail(ErrorKind::Runtime, std::string("integer overflow in '") +
                               std::string(op_symbol(e.op)) + "'");
}

}  // namespace

std::int64_t eval_expr(const Memory& m, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal: return e.value;
    case Expr::Kind::Variable: {
      auto it = m.find(e.name);
      if (it == m.end()) {
        fail(ErrorKind::Runtime, "read of undefined variable '" + e.name + "'");
      }
      return it->second;
    }
    case Expr::Kind::Binary: break;
  }
  const std::int64_t a = eval_expr(m, *e.lhs);
  const std::int64_t b = eval_expr(m, *e.rhs);
  std::int64_t r = 0;
  switch (e.op) {
    case BinOp::Add:
      if (__builtin_add_overflow(a, b, &r)) overflow(e);
      return r;
    case BinOp::Sub:
      if (__builtin_sub_overflow(a, b, &r)) overflow(e);
      return r;
    case BinOp::Mul:
      if (__builtin_mul_overflow(a, b, &r)) overflow(e);
      return r;
    case BinOp::Mod:
      if (b == 0) fail(ErrorKind::Runtime, "modulo by zero");
      if (b == -1) return 0;  // INT64_MIN % -1 traps on x86
      return a % b;
    case BinOp::Eq: return a == b ? 1 : 0;
    case BinOp::Ne: return a != b ? 1 : 0;
    case BinOp::Lt: return a < b ? 1 : 0;
    case BinOp::Le: return a <= b ? 1 : 0;
    case BinOp::Gt: return a > b ? 1 : 0;
    case BinOp::Ge: return a >= b ? 1 : 0;
    case BinOp::And: return (a != 0 && b != 0) ? 1 : 0;
    case BinOp::Or: return (a != 0 || b != 0) ? 1 : 0;
  }
  return 0;
}

Memory zero_memory(const std::set<std::string>& vars, const Memory& init) {
  Memory m;
  for (const auto& v : vars) m[v] = 0;
  for (const auto& [k, v] : init) m[k] = v;
  return m;
}

}  // namespace iflow

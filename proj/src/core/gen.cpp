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

#include "core/gen.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/projection.hpp"

namespace iflow {

Rng derive_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x1f10u};
  return Rng(seq);
}

namespace {

bool chance(Rng& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

template <typename T>
const T& pick(const std::vector<T>& v, Rng& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

std::int64_t literal(const GenConfig& cfg, Rng& rng) {
  return std::uniform_int_distribution<std::int64_t>(cfg.literal_min, cfg.literal_max)(rng);
}

const std::vector<BinOp> kArith = {BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Mod};
const std::vector<BinOp> kCompare = {BinOp::Eq, BinOp::Ne, BinOp::Lt,
                                     BinOp::Le, BinOp::Gt, BinOp::Ge};

ExprPtr gen_guard(const GenConfig& cfg, Rng& rng) {
  ExprPtr g = Expr::binary(pick(kCompare, rng), gen_expr(cfg, rng, 1), gen_expr(cfg, rng, 0));
  if (chance(rng, 0.1)) {
    g = Expr::binary(chance(rng, 0.5) ? BinOp::And : BinOp::Or, g,
                     Expr::binary(pick(kCompare, rng), gen_expr(cfg, rng, 0),
                                  gen_expr(cfg, rng, 0)));
  }
  return g;
}

CmdPtr gen_assign(const GenConfig& cfg, Rng& rng) {
  const std::string& target = pick(cfg.vars, rng);
  ExprPtr rhs = gen_expr(cfg, rng, 2);
  if (chance(rng, cfg.bracket_probability)) return make_bracket_assign(target, rhs);
  return make_assign(target, rhs);
}

CmdPtr gen_cmd(const GenConfig& cfg, Rng& rng, int depth);

CmdPtr gen_block(const GenConfig& cfg, Rng& rng, int depth) {
  const int n = std::uniform_int_distribution<int>(1, cfg.max_block)(rng);
  std::vector<CmdPtr> stmts;
  for (int i = 0; i < n; ++i) stmts.push_back(gen_cmd(cfg, rng, depth));
  CmdPtr acc = stmts.back();
  for (std::size_t k = stmts.size() - 1; k-- > 0;) acc = make_seq(stmts[k], acc);
  return acc;
}

CmdPtr gen_cmd(const GenConfig& cfg, Rng& rng, int depth) {
  if (depth <= 0) return chance(rng, 0.05) ? make_skip() : gen_assign(cfg, rng);
  const double r = std::uniform_real_distribution<double>(0, 1)(rng);
  if (r < cfg.loop_probability) {
    if (cfg.loop_style == LoopStyle::Counter) {
      const std::string& v = pick(cfg.vars, rng);
      const std::int64_t bound = std::uniform_int_distribution<std::int64_t>(0, 6)(rng);
      ExprPtr guard = Expr::binary(BinOp::Lt, Expr::variable(v), Expr::literal(bound));
      CmdPtr step = make_assign(v, Expr::binary(BinOp::Add, Expr::variable(v), Expr::literal(1)));
      if (chance(rng, cfg.bracket_probability)) step = make_bracket_assign(step->target, step->expr);
      // The body leaves the counter alone so the loop runs at most
      // bound - v0 times.
      GenConfig inner = cfg;
      if (inner.vars.size() > 1) std::erase(inner.vars, v);
      return make_while(std::move(guard), make_seq(gen_block(inner, rng, depth - 1), step));
    }
    return make_while(gen_guard(cfg, rng), gen_block(cfg, rng, depth - 1));
  }
  if (r < cfg.loop_probability + cfg.if_probability) {
    CmdPtr else_branch = chance(rng, 0.3) ? make_skip() : gen_block(cfg, rng, depth - 1);
    return make_if(gen_guard(cfg, rng), gen_block(cfg, rng, depth - 1), else_branch);
  }
  if (r < cfg.loop_probability + cfg.if_probability + 0.2) return gen_block(cfg, rng, depth - 1);
  return gen_assign(cfg, rng);
}

}  // namespace

ExprPtr gen_expr(const GenConfig& cfg, Rng& rng, int depth) {
  if (depth <= 0 || chance(rng, 0.4)) {
    if (chance(rng, 0.6)) return Expr::variable(pick(cfg.vars, rng));
    return Expr::literal(literal(cfg, rng));
  }
  const BinOp op = pick(kArith, rng);
  ExprPtr lhs = gen_expr(cfg, rng, depth - 1);
  ExprPtr rhs = gen_expr(cfg, rng, depth - 1);
  if (op == BinOp::Mod || op == BinOp::Mul) {
    // Small nonzero constants keep values bounded and `%` total.
    std::int64_t k = std::uniform_int_distribution<std::int64_t>(2, 5)(rng);
    rhs = Expr::literal(k);
  }
  return Expr::binary(op, lhs, rhs);
}

CmdPtr gen_program(const GenConfig& cfg, Rng& rng) {
  if (cfg.vars.empty()) fail(ErrorKind::Usage, "generator needs at least one variable");
  if (cfg.max_depth <= 0) return gen_assign(cfg, rng);
  return number_sites(gen_block(cfg, rng, cfg.max_depth));
}

CmdPtr gen_program(const GenConfig& cfg) {
  Rng rng = derive_rng(cfg.seed, 0);
  return gen_program(cfg, rng);
}

Memory gen_memory(const std::set<std::string>& vars, const GenConfig& cfg, Rng& rng) {
  Memory m;
  for (const auto& v : vars) m[v] = literal(cfg, rng);
  return m;
}

LabelFile gen_labels(const GenConfig& cfg, const Lattice& lattice, Rng& rng,
                     double dependent_probability) {
  LabelFile file;
  const LabelPtr low = Label::of(lattice.bottom());
  const LabelPtr high = Label::of(lattice.top());
  std::vector<std::string> lows;
  std::vector<std::string> candidates;
  for (const auto& v : cfg.vars) {
    if (!v.empty() && v[0] == 'h') {
      file.rules[v] = high;
    } else if (chance(rng, dependent_probability)) {
      candidates.push_back(v);
    } else if (lattice.size() > 2 && chance(rng, 0.3)) {
      // Richer lattices: any plain level, intermediate ones included.
      const int k = std::uniform_int_distribution<int>(0, static_cast<int>(lattice.size()) - 1)(rng);
      file.rules[v] = Label::of(Level{k});
    } else {
      file.rules[v] = low;
      lows.push_back(v);
    }
  }
  for (const auto& v : candidates) {
    if (lows.empty()) {
      file.rules[v] = low;
      continue;
    }
    const std::string& g = pick(lows, rng);
    ExprPtr guard;
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0:
        guard = Expr::binary(BinOp::Gt, Expr::variable(g), Expr::literal(literal(cfg, rng) / 4));
        break;
      case 1:
        guard = Expr::binary(BinOp::Eq, Expr::binary(BinOp::Mod, Expr::variable(g), Expr::literal(2)),
                             Expr::literal(0));
        break;
      default:
        guard = Expr::binary(BinOp::Lt, Expr::variable(g), Expr::literal(0));
        break;
    }
    file.rules[v] = chance(rng, 0.5) ? Label::cond(guard, high, low) : Label::cond(guard, low, high);
  }
  file.default_label = low;
  return file;
}

std::optional<std::pair<Memory, Memory>> gen_equiv_pair(
    const TypingEnv& env, const ActiveSet& initial, const std::set<std::string>& copies,
    Level observer, const Lattice& lattice, const GenConfig& cfg, Rng& rng,
    const Memory& fixed, int budget) {
  for (int attempt = 0; attempt < budget; ++attempt) {
    Memory m1 = gen_memory(initial.range(), cfg, rng);
    for (const auto& c : copies) m1[c] = 0;
    for (const auto& [v, value] : fixed) m1[v] = value;
    Memory m2 = m1;
    for (const auto& [source, copy] : initial.entries()) {
      if (fixed.count(copy)) continue;
      const Level level = label_eval(m1, *env.lookup(copy), lattice);
      if (!lattice.leq(level, observer)) m2[copy] = literal(cfg, rng);
    }
    // Re-randomizing may move a dependent label across the observer; keep
    // only pairs that are still equivalent.
    if (low_equiv_projected(m1, m2, env, initial, observer, lattice)) {
      return std::make_pair(std::move(m1), std::move(m2));
    }
  }
  return std::nullopt;
}

}  // namespace iflow

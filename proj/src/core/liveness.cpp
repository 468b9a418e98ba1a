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

#include "core/liveness.hpp"

#include <algorithm>
#include <vector>

#include "core/error.hpp"

namespace iflow {

const LiveSets& LivenessMap::at(SiteId site) const {
  auto it = sites.find(site);
  if (it == sites.end()) {
    fail(ErrorKind::Internal, "no liveness for site " + std::to_string(site.value));
  }
  return it->second;
}

VarSet read_set(const Expr& e, const TypingEnv& env) {
  VarSet out = free_vars(e);
  const VarSet direct = out;
  for (const std::string& v : direct) {
    if (const LabelPtr* label = env.find(v)) collect_label_free_vars(**label, out);
  }
  return out;
}

LivenessMap liveness(const Cfg& cfg, const TypingEnv& env, const ActiveSet& a_final) {
  const std::size_t n = cfg.nodes.size();
  std::vector<VarSet> gen(n);
  std::vector<const std::string*> kill(n, nullptr);
  for (std::size_t i = 0; i < n; ++i) {
    const CfgNode& node = cfg.nodes[i];
    if (node.kind == CfgNode::Kind::Assign) {
      gen[i] = read_set(*node.cmd->expr, env);
      kill[i] = &node.cmd->target;
    } else if (node.kind == CfgNode::Kind::Guard) {
      gen[i] = read_set(*node.cmd->expr, env);
    }
  }

  std::vector<VarSet> in(n);
  std::vector<VarSet> out(n);
  out[Cfg::kFinal] = a_final.range();
  in[Cfg::kFinal] = out[Cfg::kFinal];

  // Round-robin in reverse creation order: nodes are created roughly in
  // program order, so this visits successors first.
  LivenessMap result;
  bool changed = true;
  while (changed) {
    changed = false;
    ++result.iterations;
    for (std::size_t k = n; k-- > 1;) {
      const CfgNode& node = cfg.nodes[k];
      VarSet o;
      for (int s : node.succ) o.insert(in[s].begin(), in[s].end());
      VarSet i = o;
      if (kill[k]) i.erase(*kill[k]);
      i.insert(gen[k].begin(), gen[k].end());
      if (o != out[k] || i != in[k]) {
        out[k] = std::move(o);
        in[k] = std::move(i);
        changed = true;
      }
    }
  }

  for (std::size_t k = 1; k < n; ++k) {
    const CfgNode& node = cfg.nodes[k];
    if (node.kind == CfgNode::Kind::Assign) {
      result.sites[node.cmd->site] = LiveSets{in[k], out[k]};
    }
  }
  result.entry = in[cfg.entry];
  return result;
}

LivenessMap liveness(const Cmd& c, const TypingEnv& env, const ActiveSet& a_final) {
  return liveness(build_cfg(c), env, a_final);
}

}  // namespace iflow

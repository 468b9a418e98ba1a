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

#include "core/lattice.hpp"

#include <algorithm>
#include <optional>

#include "core/error.hpp"

namespace iflow {

Lattice::Lattice(std::vector<std::string> names,
                 const std::vector<std::pair<std::string, std::string>>& below)
    : names_(std::move(names)) {
  if (names_.empty()) fail(ErrorKind::Config, "lattice has no levels");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) {
        fail(ErrorKind::Config, "duplicate level '" + names_[i] + "'");
      }
    }
  }
  const std::size_t count = n();
  leq_.assign(count * count, false);
  for (std::size_t i = 0; i < count; ++i) leq_[i * count + i] = true;
  for (const auto& [lo, hi] : below) {
    leq_[level(lo).index * count + level(hi).index] = true;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!leq_[i * count + k]) continue;
      for (std::size_t j = 0; j < count; ++j) {
        if (leq_[k * count + j]) leq_[i * count + j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (leq_[i * count + j] && leq_[j * count + i]) {
        fail(ErrorKind::Config, "not a lattice: order has a cycle through '" +
                                    names_[i] + "' and '" + names_[j] + "'");
      }
    }
  }

  join_.assign(count * count, -1);
  meet_.assign(count * count, -1);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      std::optional<std::size_t> lub;
      std::optional<std::size_t> glb;
      for (std::size_t c = 0; c < count; ++c) {
        if (leq_[a * count + c] && leq_[b * count + c]) {
          if (!lub || leq_[c * count + *lub]) lub = c;
        }
        if (leq_[c * count + a] && leq_[c * count + b]) {
          if (!glb || leq_[*glb * count + c]) glb = c;
        }
      }
      // The candidate must be below (resp. above) every other bound.
      auto least = [&](std::optional<std::size_t> cand, bool upper) {
        if (!cand) return false;
        for (std::size_t c = 0; c < count; ++c) {
          bool bound = upper ? (leq_[a * count + c] && leq_[b * count + c])
                             : (leq_[c * count + a] && leq_[c * count + b]);
          if (!bound) continue;
          bool ok = upper ? leq_[*cand * count + c] : leq_[c * count + *cand];
          if (!ok) return false;
        }
        return true;
      };
      if (!least(lub, true)) {
        fail(ErrorKind::Config, "not a lattice: '" + names_[a] + "' and '" +
                                    names_[b] + "' have no join");
      }
      if (!least(glb, false)) {
        fail(ErrorKind::Config, "not a lattice: '" + names_[a] + "' and '" +
                                    names_[b] + "' have no meet");
      }
      join_[a * count + b] = static_cast<int>(*lub);
      meet_[a * count + b] = static_cast<int>(*glb);
    }
  }

  Level acc_bottom{0};
  Level acc_top{0};
  for (std::size_t i = 1; i < count; ++i) {
    acc_bottom = meet(acc_bottom, Level{static_cast<int>(i)});
    acc_top = join(acc_top, Level{static_cast<int>(i)});
  }
  bottom_ = acc_bottom;
  top_ = acc_top;

  // Longest chain via DP over a topological order (by number of elements
  // below).
  std::vector<int> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = static_cast<int>(i);
  auto below_count = [&](int x) {
    int k = 0;
    for (std::size_t c = 0; c < count; ++c) k += leq_[c * count + x] ? 1 : 0;
    return k;
  };
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return below_count(x) < below_count(y); });
  std::vector<int> chain(count, 0);
  for (int x : order) {
    for (int y : order) {
      if (y != x && leq_[y * count + x]) {
        chain[x] = std::max(chain[x], chain[y] + 1);
      }
    }
    height_ = std::max(height_, chain[x]);
  }
}

const Lattice& Lattice::two_point() {
  static const Lattice lattice({"L", "H"}, {{"L", "H"}});
  return lattice;
}

Level Lattice::level(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return Level{static_cast<int>(i)};
  }
  fail(ErrorKind::Config, "unknown security level '" + std::string(name) + "'");
}

bool Lattice::has_level(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

LatticeOps lattice_ops(const Lattice& l, std::string_view a,
                       std::string_view b) {
  const Level la = l.level(a);
  const Level lb = l.level(b);
  return {l.leq(la, lb), l.join(la, lb), l.meet(la, lb)};
}

}  // namespace iflow

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

#ifndef IFLOW_CORE_LATTICE_HPP
#define IFLOW_CORE_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iflow {

// Index of an element within its Lattice.
struct Level {
  int index = 0;
  auto operator<=>(const Level&) const = default;
};

// A finite security lattice. The order is the reflexive-transitive closure
// of the declared covering pairs; construction fails unless every pair of
// levels has a unique join and meet.
class Lattice {
 public:
  Lattice(std::vector<std::string> names,
          const std::vector<std::pair<std::string, std::string>>& below);

  // {L, H} with L below H.
  static const Lattice& two_point();

  std::size_t size() const { return names_.size(); }
  const std::string& name(Level l) const { return names_.at(l.index); }
  const std::vector<std::string>& names() const { return names_; }
  Level level(std::string_view name) const;  // throws Config on unknown
  bool has_level(std::string_view name) const;

  bool leq(Level a, Level b) const { return leq_[a.index * n() + b.index]; }
  Level join(Level a, Level b) const { return {join_[a.index * n() + b.index]}; }
  Level meet(Level a, Level b) const { return {meet_[a.index * n() + b.index]}; }
  Level bottom() const { return bottom_; }
  Level top() const { return top_; }
  // Length of the longest strictly increasing chain.
  int height() const { return height_; }

 private:
  std::size_t n() const { return names_.size(); }

  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<int> join_;
  std::vector<int> meet_;
  Level bottom_;
  Level top_;
  int height_ = 0;
};

struct LatticeOps {
  bool leq;
  Level join;
  Level meet;
};

LatticeOps lattice_ops(const Lattice& l, std::string_view a, std::string_view b);

}  // namespace iflow

#endif  // IFLOW_CORE_LATTICE_HPP

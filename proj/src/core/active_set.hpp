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

#ifndef IFLOW_CORE_ACTIVE_SET_HPP
#define IFLOW_CORE_ACTIVE_SET_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace iflow {

// Separator between a source variable and its copy index: `x@3`.
inline constexpr char kCopySeparator = '@';

// Source variable of a (possibly indexed) transformed variable: x@3 -> x.
// Throws an Analysis error for malformed names.
std::string base_of(std::string_view v);
bool is_copy_name(std::string_view v);
std::string copy_name(std::string_view base, int index);

// Maps each source variable to its active copy in the transformed program.
class ActiveSet {
 public:
  using Map = std::map<std::string, std::string>;

  ActiveSet() = default;
  explicit ActiveSet(Map entries) : map_(std::move(entries)) {}

  static ActiveSet identity(const std::set<std::string>& vars);

  // Throws an Analysis error when `source` is not in the domain.
  const std::string& at(const std::string& source) const;
  bool contains(const std::string& source) const {
    return map_.count(source) != 0;
  }
  void set(const std::string& source, std::string copy) {
    map_[source] = std::move(copy);
  }

  const Map& entries() const { return map_; }
  std::set<std::string> domain() const;
  std::set<std::string> range() const;
  bool injective() const;
  bool keeps_bases() const;  // base_of(a(x)) == x for all x

  bool operator==(const ActiveSet&) const = default;

 private:
  Map map_;
};

}  // namespace iflow

#endif  // IFLOW_CORE_ACTIVE_SET_HPP

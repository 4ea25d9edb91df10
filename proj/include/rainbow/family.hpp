// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RAINBOW_FAMILY_HPP_
#define RAINBOW_FAMILY_HPP_

#include <optional>
#include <vector>

#include "rainbow/element_set.hpp"
#include "rainbow/matroid.hpp"

namespace rainbow {

// n pairwise-disjoint sets of size n, each independent in both matroids.
// Colors are 0-based: set `sets[c]` has color c.
struct Family {
  MatroidSpec m;
  MatroidSpec n;
  std::vector<ElementSet> sets;

  std::size_t size() const { return sets.size(); }

  friend bool operator==(const Family&, const Family&) = default;
};

// Throws ValidationError naming the first violated hypothesis.
void validate_family(const Family& family);

// Partial choice function: picks[c] is the element chosen from color c.
struct RainbowSet {
  std::vector<std::optional<ElementId>> picks;

  RainbowSet() = default;
  explicit RainbowSet(std::size_t colors) : picks(colors) {}

  std::size_t size() const;
  ElementSet elements() const;
  // Color that picked `e`, if any.
  std::optional<std::size_t> color_of(ElementId e) const;

  friend bool operator==(const RainbowSet&, const RainbowSet&) = default;
};

}  // namespace rainbow

#endif  // RAINBOW_FAMILY_HPP_

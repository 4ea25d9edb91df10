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

#include "rainbow/family.hpp"

#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

void validate_family(const Family& family) {
  if (family.m.ground_size() != family.n.ground_size()) {
    throw ValidationError("matroids M and N have different ground sets");
  }
  const std::size_t n = family.size();
  const std::size_t ground = family.m.ground_size();
  std::vector<bool> seen(ground, false);
  for (std::size_t c = 0; c < n; ++c) {
    const ElementSet& set = family.sets[c];
    if (set.size() != n) {
      throw ValidationError("set " + std::to_string(c) + " has size " +
                            std::to_string(set.size()) +
                            ", expected n = " + std::to_string(n));
    }
    for (ElementId e : set) {
      if (e >= ground) {
        throw ValidationError("set " + std::to_string(c) + " holds id " +
                              std::to_string(e) + " outside ground set");
      }
      if (seen[e]) throw ValidationError("sets not pairwise disjoint");
      seen[e] = true;
    }
    if (!is_independent(family.m, set)) {
      throw ValidationError("set " + std::to_string(c) + " is dependent in M");
    }
    if (!is_independent(family.n, set)) {
      throw ValidationError("set " + std::to_string(c) + " is dependent in N");
    }
  }
}

std::size_t RainbowSet::size() const {
  std::size_t count = 0;
  for (const auto& p : picks) count += p.has_value() ? 1 : 0;
  return count;
}

ElementSet RainbowSet::elements() const {
  std::vector<ElementId> ids;
  for (const auto& p : picks) {
    if (p) ids.push_back(*p);
  }
  return ElementSet(std::move(ids));
}

std::optional<std::size_t> RainbowSet::color_of(ElementId e) const {
  for (std::size_t c = 0; c < picks.size(); ++c) {
    if (picks[c] == e) return c;
  }
  return std::nullopt;
}

}  // namespace rainbow

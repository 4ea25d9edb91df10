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

#include "rainbow/element_set.hpp"

#include <algorithm>
#include <iterator>

#include "rainbow/errors.hpp"

namespace rainbow {

ElementSet::ElementSet(std::initializer_list<ElementId> ids)
    : ElementSet(std::vector<ElementId>(ids)) {}

ElementSet::ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw DomainError("duplicate element id in set");
  }
}

bool ElementSet::contains(ElementId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

ElementSet ElementSet::with(ElementId id) const {
  auto pos = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (pos != ids_.end() && *pos == id) return *this;
  std::vector<ElementId> out;
  out.reserve(ids_.size() + 1);
  out.insert(out.end(), ids_.begin(), pos);
  out.push_back(id);
  out.insert(out.end(), pos, ids_.end());
  return ElementSet(Sorted{}, std::move(out));
}

ElementSet ElementSet::without(ElementId id) const {
  std::vector<ElementId> out;
  out.reserve(ids_.size());
  for (ElementId e : ids_) {
    if (e != id) out.push_back(e);
  }
  return ElementSet(Sorted{}, std::move(out));
}

ElementSet ElementSet::united(const ElementSet& other) const {
  std::vector<ElementId> out;
  out.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out));
  return ElementSet(Sorted{}, std::move(out));
}

ElementSet ElementSet::minus(const ElementSet& other) const {
  std::vector<ElementId> out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(out));
  return ElementSet(Sorted{}, std::move(out));
}

ElementSet ElementSet::intersected(const ElementSet& other) const {
  std::vector<ElementId> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out));
  return ElementSet(Sorted{}, std::move(out));
}

bool ElementSet::disjoint_from(const ElementSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(ids_[i]);
  }
  out += "}";
  return out;
}

}  // namespace rainbow

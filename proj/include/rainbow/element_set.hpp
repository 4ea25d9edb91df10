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

#ifndef RAINBOW_ELEMENT_SET_HPP_
#define RAINBOW_ELEMENT_SET_HPP_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rainbow {

// Index into the ground set shared by both matroids of an instance.
using ElementId = std::uint32_t;

// Finite set of element ids, kept in ascending order without duplicates.
// All set algebra returns new sets; instances are immutable values.
class ElementSet {
 public:
  ElementSet() = default;
  // Throws DomainError on duplicate ids.
  ElementSet(std::initializer_list<ElementId> ids);
  explicit ElementSet(std::vector<ElementId> ids);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(ElementId id) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  ElementId operator[](std::size_t i) const { return ids_[i]; }
  std::span<const ElementId> ids() const { return ids_; }

  // A + x and A - x.
  ElementSet with(ElementId id) const;
  ElementSet without(ElementId id) const;

  ElementSet united(const ElementSet& other) const;
  ElementSet minus(const ElementSet& other) const;
  ElementSet intersected(const ElementSet& other) const;
  bool disjoint_from(const ElementSet& other) const;
  bool subset_of(const ElementSet& other) const;

  // "{0, 3, 7}"
  std::string to_string() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  struct Sorted {};
  ElementSet(Sorted, std::vector<ElementId> ids) : ids_(std::move(ids)) {}

  std::vector<ElementId> ids_;
};

}  // namespace rainbow

#endif  // RAINBOW_ELEMENT_SET_HPP_

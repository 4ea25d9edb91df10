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

#ifndef RAINBOW_MATROID_HPP_
#define RAINBOW_MATROID_HPP_

#include <cstdint>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rainbow/element_set.hpp"

namespace rainbow {

enum class MatroidClass { kUniform, kPartition, kGraphic, kLinear };

std::string_view class_name(MatroidClass c);
// Inverse of class_name; throws DomainError on unknown names.
MatroidClass parse_class(std::string_view name);

// Declarative matroid over the ground set {0, ..., ground_size - 1}.
//
// Construct through the static factories, which enforce the per-variant
// invariants and throw DomainError otherwise. Independence is decided
// exactly; the linear variant uses modular arithmetic over GF(p).
class MatroidSpec {
 public:
  struct Uniform {
    std::size_t rank;
  };
  struct Partition {
    std::vector<ElementSet> blocks;
    std::vector<std::size_t> capacities;
    std::vector<std::size_t> block_of;  // element -> block index
  };
  struct Graphic {
    std::size_t vertices;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // by element
  };
  struct Linear {
    std::uint32_t prime;
    std::size_t rows;
    std::vector<std::vector<std::uint32_t>> columns;  // by element, reduced
  };
  using Variant = std::variant<Uniform, Partition, Graphic, Linear>;

  static MatroidSpec uniform(std::size_t ground_size, std::size_t rank);
  // Blocks must be non-empty, pairwise disjoint and cover the ground set.
  static MatroidSpec partition(std::size_t ground_size,
                               std::vector<ElementSet> blocks,
                               std::vector<std::size_t> capacities);
  // edges[e] are the endpoints of element e; loops and parallel edges are
  // allowed.
  static MatroidSpec graphic(
      std::size_t vertices,
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);
  // columns[e] is the column vector of element e; entries are reduced mod p.
  static MatroidSpec linear(std::uint32_t prime, std::size_t rows,
                            std::vector<std::vector<std::uint32_t>> columns);

  std::size_t ground_size() const { return ground_size_; }
  MatroidClass matroid_class() const;
  const Variant& variant() const { return variant_; }

  friend bool operator==(const MatroidSpec&, const MatroidSpec&);

 private:
  MatroidSpec(std::size_t ground_size, Variant v)
      : ground_size_(ground_size), variant_(std::move(v)) {}

  std::size_t ground_size_;
  Variant variant_;
};

bool operator==(const MatroidSpec::Uniform&, const MatroidSpec::Uniform&);
bool operator==(const MatroidSpec::Partition&, const MatroidSpec::Partition&);
bool operator==(const MatroidSpec::Graphic&, const MatroidSpec::Graphic&);
bool operator==(const MatroidSpec::Linear&, const MatroidSpec::Linear&);

bool is_prime(std::uint64_t p);

// Independence oracle. Throws DomainError when `s` holds an id outside the
// ground set.
bool is_independent(const MatroidSpec& spec, const ElementSet& s);

// Size of a maximum independent subset, found greedily in ascending order.
std::size_t rank(const MatroidSpec& spec, const ElementSet& s);

// The ascending-order greedy basis of `s`.
ElementSet greedy_basis(const MatroidSpec& spec, const ElementSet& s);

// True iff x is in a or rank(a + x) == rank(a).
bool spans(const MatroidSpec& spec, const ElementSet& a, ElementId x);

// Minimal subset of the independent set `i` spanning x, i.e. the
// fundamental circuit of x with respect to `i` minus x. Requires i
// independent, x not in i and i + x dependent (ContractError otherwise).
ElementSet circuit_support(const MatroidSpec& spec, const ElementSet& i,
                           ElementId x);

// J1 within j \ i such that i + J1 is independent and |i + J1| = |j|.
// Scans j \ i in ascending order.
ElementSet augment_to(const MatroidSpec& spec, const ElementSet& i,
                      const ElementSet& j);

// Minimum-size K within `base` such that (base \ K) + add is independent,
// the lexicographically least one on ties. Requires `add` independent.
ElementSet min_removal(const MatroidSpec& spec, const ElementSet& base,
                       const ElementSet& add);

}  // namespace rainbow

#endif  // RAINBOW_MATROID_HPP_

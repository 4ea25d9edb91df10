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

#include "rainbow/matroid.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

constexpr std::size_t kNoBlock = std::numeric_limits<std::size_t>::max();

// Union-find over graph vertices, reset per oracle call.
class Forest {
 public:
  explicit Forest(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False if a and b are already connected.
  bool Link(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

// Rank of the selected columns over GF(p) by Gaussian elimination.
std::size_t column_rank(const MatroidSpec::Linear& lin, const ElementSet& s) {
  const std::uint64_t p = lin.prime;
  std::vector<std::vector<std::uint64_t>> m;
  m.reserve(s.size());
  for (ElementId e : s) {
    m.emplace_back(lin.columns[e].begin(), lin.columns[e].end());
  }
  // Each selected column is a row of `m`; eliminate column by column.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < lin.rows && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const std::uint64_t inv = pow_mod(m[rank][col], p - 2, p);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const std::uint64_t factor = m[r][col] * inv % p;
      for (std::size_t c = col; c < lin.rows; ++c) {
        m[r][c] = (m[r][c] + (p - factor) * m[rank][c]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

void check_ids(const MatroidSpec& spec, const ElementSet& s) {
  if (!s.empty() && *(s.end() - 1) >= spec.ground_size()) {
    throw DomainError("element id " + std::to_string(*(s.end() - 1)) +
                      " outside ground set of size " +
                      std::to_string(spec.ground_size()));
  }
}

void check_id(const MatroidSpec& spec, ElementId x) {
  if (x >= spec.ground_size()) {
    throw DomainError("element id " + std::to_string(x) +
                      " outside ground set of size " +
                      std::to_string(spec.ground_size()));
  }
}

}  // namespace

std::string_view class_name(MatroidClass c) {
  switch (c) {
    case MatroidClass::kUniform:
      return "uniform";
    case MatroidClass::kPartition:
      return "partition";
    case MatroidClass::kGraphic:
      return "graphic";
    case MatroidClass::kLinear:
      return "linear";
  }
  return "unknown";
}

MatroidClass parse_class(std::string_view name) {
  for (MatroidClass c : {MatroidClass::kUniform, MatroidClass::kPartition,
                         MatroidClass::kGraphic, MatroidClass::kLinear}) {
    if (class_name(c) == name) return c;
  }
  throw DomainError("unknown matroid class '" + std::string(name) + "'");
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

MatroidSpec MatroidSpec::uniform(std::size_t ground_size, std::size_t rank) {
  if (ground_size == 0) throw DomainError("ground set must be non-empty");
  return MatroidSpec(ground_size, Uniform{rank});
}

MatroidSpec MatroidSpec::partition(std::size_t ground_size,
                                   std::vector<ElementSet> blocks,
                                   std::vector<std::size_t> capacities) {
  if (ground_size == 0) throw DomainError("ground set must be non-empty");
  if (blocks.size() != capacities.size()) {
    throw DomainError("partition needs one capacity per block");
  }
  std::vector<std::size_t> block_of(ground_size, kNoBlock);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw DomainError("partition block is empty");
    for (ElementId e : blocks[b]) {
      if (e >= ground_size) {
        throw DomainError("partition block holds id " + std::to_string(e) +
                          " outside ground set");
      }
      if (block_of[e] != kNoBlock) {
        throw DomainError("partition blocks overlap at element " +
                          std::to_string(e));
      }
      block_of[e] = b;
    }
  }
  for (std::size_t e = 0; e < ground_size; ++e) {
    if (block_of[e] == kNoBlock) {
      throw DomainError("partition blocks do not cover element " +
                        std::to_string(e));
    }
  }
  return MatroidSpec(
      ground_size,
      Partition{std::move(blocks), std::move(capacities), std::move(block_of)});
}

MatroidSpec MatroidSpec::graphic(
    std::size_t vertices,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  if (edges.empty()) throw DomainError("ground set must be non-empty");
  for (const auto& [u, v] : edges) {
    if (u >= vertices || v >= vertices) {
      throw DomainError("edge endpoint outside vertex range");
    }
  }
  const std::size_t ground = edges.size();
  return MatroidSpec(ground, Graphic{vertices, std::move(edges)});
}

MatroidSpec MatroidSpec::linear(
    std::uint32_t prime, std::size_t rows,
    std::vector<std::vector<std::uint32_t>> columns) {
  if (columns.empty()) throw DomainError("ground set must be non-empty");
  if (!is_prime(prime)) {
    throw DomainError(std::to_string(prime) + " is not prime");
  }
  // Products of two residues must fit in 64 bits.
  if (prime > (1u << 31)) throw DomainError("prime too large");
  for (auto& col : columns) {
    if (col.size() != rows) {
      throw DomainError("column length does not match row count");
    }
    for (auto& x : col) x %= prime;
  }
  const std::size_t ground = columns.size();
  return MatroidSpec(ground, Linear{prime, rows, std::move(columns)});
}

MatroidClass MatroidSpec::matroid_class() const {
  return static_cast<MatroidClass>(variant_.index());
}

bool operator==(const MatroidSpec::Uniform& a, const MatroidSpec::Uniform& b) {
  return a.rank == b.rank;
}
bool operator==(const MatroidSpec::Partition& a,
                const MatroidSpec::Partition& b) {
  return a.blocks == b.blocks && a.capacities == b.capacities;
}
bool operator==(const MatroidSpec::Graphic& a, const MatroidSpec::Graphic& b) {
  return a.vertices == b.vertices && a.edges == b.edges;
}
bool operator==(const MatroidSpec::Linear& a, const MatroidSpec::Linear& b) {
  return a.prime == b.prime && a.rows == b.rows && a.columns == b.columns;
}

bool operator==(const MatroidSpec& a, const MatroidSpec& b) {
  return a.ground_size_ == b.ground_size_ && a.variant_ == b.variant_;
}

bool is_independent(const MatroidSpec& spec, const ElementSet& s) {
  check_ids(spec, s);
  struct Visitor {
    const ElementSet& s;
    bool operator()(const MatroidSpec::Uniform& u) const {
      return s.size() <= u.rank;
    }
    bool operator()(const MatroidSpec::Partition& part) const {
      std::vector<std::size_t> used(part.blocks.size(), 0);
      for (ElementId e : s) {
        const std::size_t b = part.block_of[e];
        if (++used[b] > part.capacities[b]) return false;
      }
      return true;
    }
    bool operator()(const MatroidSpec::Graphic& g) const {
      if (s.size() >= g.vertices) return s.empty();
      Forest forest(g.vertices);
      for (ElementId e : s) {
        if (!forest.Link(g.edges[e].first, g.edges[e].second)) return false;
      }
      return true;
    }
    bool operator()(const MatroidSpec::Linear& lin) const {
      if (s.size() > lin.rows) return false;
      return column_rank(lin, s) == s.size();
    }
  };
  return std::visit(Visitor{s}, spec.variant());
}

ElementSet greedy_basis(const MatroidSpec& spec, const ElementSet& s) {
  check_ids(spec, s);
  ElementSet kept;
  for (ElementId e : s) {
    ElementSet next = kept.with(e);
    if (is_independent(spec, next)) kept = std::move(next);
  }
  return kept;
}

std::size_t rank(const MatroidSpec& spec, const ElementSet& s) {
  return greedy_basis(spec, s).size();
}

bool spans(const MatroidSpec& spec, const ElementSet& a, ElementId x) {
  check_ids(spec, a);
  check_id(spec, x);
  if (a.contains(x)) return true;
  const ElementSet basis = greedy_basis(spec, a);
  return !is_independent(spec, basis.with(x));
}

ElementSet circuit_support(const MatroidSpec& spec, const ElementSet& i,
                           ElementId x) {
  check_id(spec, x);
  if (i.contains(x)) throw ContractError("circuit_support: x lies in i");
  if (!is_independent(spec, i)) {
    throw ContractError("circuit_support: base set is dependent");
  }
  const ElementSet with_x = i.with(x);
  if (is_independent(spec, with_x)) {
    throw ContractError("circuit_support: x is not spanned");
  }
  std::vector<ElementId> support;
  for (ElementId y : i) {
    if (is_independent(spec, with_x.without(y))) support.push_back(y);
  }
  return ElementSet(std::move(support));
}

ElementSet augment_to(const MatroidSpec& spec, const ElementSet& i,
                      const ElementSet& j) {
  if (i.size() >= j.size()) throw ContractError("augment_to: |i| >= |j|");
  if (!is_independent(spec, i) || !is_independent(spec, j)) {
    throw ContractError("augment_to: inputs must be independent");
  }
  ElementSet current = i;
  std::vector<ElementId> added;
  for (ElementId e : j.minus(i)) {
    if (current.size() == j.size()) break;
    ElementSet next = current.with(e);
    if (is_independent(spec, next)) {
      current = std::move(next);
      added.push_back(e);
    }
  }
  if (current.size() != j.size()) {
    throw ContractError("augment_to: augmentation axiom failed");
  }
  return ElementSet(std::move(added));
}

ElementSet min_removal(const MatroidSpec& spec, const ElementSet& base,
                       const ElementSet& add) {
  if (!is_independent(spec, add)) {
    throw ContractError("min_removal: added set is dependent");
  }
  check_ids(spec, base);
  // Keeping large ids first leaves the lexicographically least K among the
  // minimum ones (greedy on the dual).
  ElementSet kept = add;
  std::vector<ElementId> removed;
  for (auto it = base.ids().rbegin(); it != base.ids().rend(); ++it) {
    const ElementId e = *it;
    if (add.contains(e)) continue;
    ElementSet next = kept.with(e);
    if (is_independent(spec, next)) {
      kept = std::move(next);
    } else {
      removed.push_back(e);
    }
  }
  std::reverse(removed.begin(), removed.end());
  return ElementSet(std::move(removed));
}

}  // namespace rainbow

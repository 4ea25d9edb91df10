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

#ifndef RAINBOW_VERIFIER_HPP_
#define RAINBOW_VERIFIER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/family.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

// Independent checks that do not share code paths with the solver beyond
// the independence oracles.

inline constexpr std::size_t kDefaultBruteLimit = 5;

// Picks lie in their color sets, at most one per color, distinct, and the
// chosen elements are independent in both matroids. On failure writes a
// reason to `diagnostic` when given.
bool check_rainbow(const RainbowSet& rainbow, const Family& family,
                   std::string* diagnostic = nullptr);

// t == n or (n - t)^2 <= t. False when t > n.
bool check_bound(std::size_t t, std::size_t n);
// Smallest t accepted by check_bound for this n.
std::size_t bound_floor(std::size_t n);

struct BruteForceResult {
  std::size_t size = 0;
  RainbowSet witness;  // lexicographically least optimal choice
};

// Exact maximum rainbow independent matching by depth-first search over
// colors. Throws LimitError when n exceeds `limit`.
BruteForceResult brute_force_max(const Family& family,
                                 std::size_t limit = kDefaultBruteLimit);

struct VerifyReport {
  std::size_t n = 0;
  std::size_t solver_size = 0;
  std::optional<std::size_t> optimum;
  bool bound_ok = false;
  bool valid = false;
  // optimum - (n - 1); non-negative means the n-1 conjecture holds here.
  std::optional<std::int64_t> conjecture_gap;
  std::string diagnostic;
};

// Solves, validates and (when n <= brute_limit) brute-forces one family.
VerifyReport verify_family(const Family& family,
                           std::size_t brute_limit = kDefaultBruteLimit,
                           const SolveOptions& options = {});

std::string render_text(const VerifyReport& report);
std::string render_kv(const VerifyReport& report);

struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_counterexample;
};

struct PropertyReport {
  std::vector<PropertyResult> results;

  bool ok() const;
  const PropertyResult* find(const std::string& name) const;
};

// Individual randomized checks; each runs `trials` trials on ground sets of
// at most 8 elements, cycling through the four matroid classes.
PropertyResult check_unique_support(std::size_t trials, std::uint64_t seed);
PropertyResult check_exchange(std::size_t trials, std::uint64_t seed);
PropertyResult check_circuit_elimination(std::size_t trials,
                                         std::uint64_t seed);
PropertyResult check_augmentation(std::size_t trials, std::uint64_t seed);
PropertyResult check_support_persistence(std::size_t trials,
                                         std::uint64_t seed);
PropertyResult check_axioms(std::size_t trials, std::uint64_t seed);
PropertyResult check_rank_laws(std::size_t trials, std::uint64_t seed);
// Solves random small instances with every claim assertion enabled.
PropertyResult check_solver_claims(std::size_t trials, std::uint64_t seed);

// All of the above with the same trial count. trials == 0 gives an empty
// report.
PropertyReport property_suite(std::uint64_t seed, std::size_t trials);

std::string render_text(const PropertyReport& report);

}  // namespace rainbow

#endif  // RAINBOW_VERIFIER_HPP_

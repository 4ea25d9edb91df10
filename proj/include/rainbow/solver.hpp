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

#ifndef RAINBOW_SOLVER_HPP_
#define RAINBOW_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "rainbow/element_set.hpp"
#include "rainbow/family.hpp"

namespace rainbow {

// Rainbow independent matchings via colorful alternating paths.
//
// Given a rainbow set R of size t < n whose picked colors are 0..t-1, the
// unpicked colors t, t+1, ... each contribute one level of an auxiliary
// sequence. Level i (1-based) holds
//   A_i: a subset of F_{t+i-1} with R^i + A_i independent in N, |R^i+A_i| = n
//   R_i: a minimum subset of R^i with (R^i \ R_i) + A_i independent in M
// where R^1 = R and R^{i+1} = R^i \ R_i. If every level's A_i lies in
// span_M(R), all delta = n - t levels exist and t >= delta^2. Otherwise the
// first level with an element a such that R + a is independent in M seeds
// an alternating path b_0 = a, r_1, b_1, ..., r_k, b_k that trades r's out
// and b's in; it ends with R + b_0 - r_1 + b_1 - ... - r_k + b_k independent
// in both matroids, one larger than R.

struct SolveOptions {
  // Check every intermediate claim of the correctness argument with the
  // oracles. Costs extra oracle calls; violations raise ContractError.
  bool check_claims = false;
  // Start from this rainbow set (original colors) instead of the greedy
  // one. Must be a valid rainbow independent matching.
  std::optional<RainbowSet> start;
};

// Counts of assertions evaluated while check_claims was on.
struct ClaimStats {
  std::size_t spanned_in_n = 0;     // b_k in span_N(R) before extending
  std::size_t level_drop = 0;       // r_{k+1} comes from a lower level
  std::size_t partner_exists = 0;   // some x in A_p has r_{k+1} in C_M(R, x)
  std::size_t fresh_removal = 0;    // r_{k+1} not in C_N(R, b_i), i < k
  std::size_t support_kept = 0;     // r_{k+1} stays in both updated supports
  std::size_t path_conditions = 0;  // (P_M)/(P_N) span and independence
  std::size_t path_identity = 0;    // R_M(k) + b_0 == R_N(k) + b_k
  std::size_t monotonicity = 0;     // strictly decreasing source levels
  std::size_t length_bound = 0;     // k <= delta - 1
  std::size_t aux_invariants = 0;   // level sizes and independence

  std::size_t total() const;
  ClaimStats& operator+=(const ClaimStats& other);
};

// Color permutation putting picked colors first. original[k] is the
// original color now labelled k.
struct ColorOrder {
  std::vector<std::size_t> original;

  bool is_identity() const;
};

struct Relabeled {
  Family family;
  RainbowSet rainbow;
  ColorOrder order;
};

struct AuxSequence {
  ElementSet rainbow;  // R
  std::size_t t = 0;
  std::size_t delta = 0;
  // Level i (1-based) is stored at index i - 1.
  std::vector<ElementSet> a;
  std::vector<ElementSet> r;
  std::vector<ElementSet> residues;  // R^1, R^2, ...
  std::vector<std::size_t> colors;   // color of F that A_i was drawn from

  // 1-based level of the R_p holding `e`, if any.
  std::optional<std::size_t> r_level(ElementId e) const;
};

struct Breakpoint {
  std::size_t level = 0;  // m, 1-based
  ElementId element = 0;  // a in A_m with R + a independent in M
};

struct AuxResult {
  AuxSequence aux;
  // Empty when all delta levels were built with A_i inside span_M(R).
  std::optional<Breakpoint> breakpoint;

  bool complete() const { return !breakpoint.has_value(); }
};

struct Cap {
  std::vector<ElementId> b;  // b_0..b_k
  std::vector<std::size_t> b_level;
  std::vector<ElementId> r;  // r_1..r_k, r[i-1] is r_i
  std::vector<std::size_t> r_level;

  std::size_t length() const { return r.size(); }
  // R - r_1 + b_1 - ... - r_k + b_k
  ElementSet rm(const ElementSet& rainbow) const;
  // R + b_0 - r_1 + b_1 - ... + b_{k-1} - r_k
  ElementSet rn(const ElementSet& rainbow) const;
};

RainbowSet greedy_init(const Family& family);

ColorOrder relabel_order(const RainbowSet& rainbow);
Relabeled relabel(const RainbowSet& rainbow, const Family& family);
// Maps a rainbow set over the relabelled colors back to original colors.
RainbowSet restore_colors(const RainbowSet& rainbow, const ColorOrder& order);

// Requires the picked colors to be exactly 0..t-1.
AuxResult build_aux(const RainbowSet& rainbow, const Family& family,
                    const SolveOptions& options = {},
                    ClaimStats* stats = nullptr);

// Alternating path from the breakpoint element; always augmenting.
Cap find_cap(const Family& family, const AuxSequence& aux,
             const Breakpoint& start, const SolveOptions& options = {},
             ClaimStats* stats = nullptr);

// R + b_0 - r_1 + ... - r_k + b_k, with each b placed on its source color.
RainbowSet apply_cap(const RainbowSet& rainbow, const Cap& cap,
                     const Family& family, const AuxSequence& aux);

struct Certificate {
  bool full = false;  // t == n
  std::size_t delta = 0;
  std::vector<std::size_t> a_sizes;  // |A_i| of the final auxiliary sequence
  std::vector<std::size_t> r_sizes;  // |R_i|
  std::vector<std::size_t> colors;   // original color of each level
};

struct SolveReport {
  RainbowSet rainbow;  // original colors
  std::size_t n = 0;
  std::size_t initial_size = 0;
  std::size_t augmentations = 0;
  std::vector<std::size_t> cap_lengths;
  Certificate certificate;
  ClaimStats claims;

  std::size_t size() const { return rainbow.size(); }
};

// Greedy start, then augment until the auxiliary sequence completes.
// Throws ValidationError for invalid families and ContractError if any
// internal invariant breaks.
SolveReport solve(const Family& family, const SolveOptions& options = {});

}  // namespace rainbow

#endif  // RAINBOW_SOLVER_HPP_

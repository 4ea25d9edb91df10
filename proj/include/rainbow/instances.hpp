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

#ifndef RAINBOW_INSTANCES_HPP_
#define RAINBOW_INSTANCES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/family.hpp"
#include "rainbow/matroid.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

// n x n array of symbols 0..n-1.
struct LatinSquare {
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> cells;
};

// Every row must be a permutation of 0..n-1; unless `rows_only`, every
// column too. Throws ValidationError.
void validate_latin(const LatinSquare& square, bool rows_only = false);

// cells[r][c] = (r + c) mod n.
LatinSquare cyclic_latin(std::size_t n);
// Cyclic square with rows, columns and symbols randomly permuted.
LatinSquare random_latin(std::size_t n, std::uint64_t seed);

// Ground set = cell positions r * n + c; F_r = row r; M = capacity-1
// column blocks; N = capacity-1 symbol blocks. Rainbow independent
// matchings are exactly the partial transversals.
Family latin_to_family(const LatinSquare& square);

// n x n matrix over the ground set of a rank-n matroid with every row a
// basis.
struct RowMls {
  std::size_t n = 0;
  MatroidSpec matroid;
  std::vector<std::vector<ElementId>> cells;
};

void validate_rowmls(const RowMls& mls);

// Lifts the matroid to cell positions r * n + c (a cell behaves like its
// entry; repeated entries act as parallel copies, hence dependent) and
// pairs it with the capacity-1 column partition matroid. Rainbow
// independent matchings are the independent partial transversals.
//
// Graphic and linear matroids lift exactly. Partition matroids lift when
// every repeated entry sits in a capacity-1 block; uniform matroids and
// other partition matroids require all entries to be distinct.
Family rowmls_to_family(const RowMls& mls);

// Rows are random spanning trees of K_{n+1}.
RowMls random_rowmls_graphic(std::size_t n, std::uint64_t seed);
// Entries drawn from 2n random vectors of GF(prime)^n that span the space;
// each row is a random basis among them.
RowMls random_rowmls_linear(std::size_t n, std::uint32_t prime,
                            std::uint64_t seed);

// Small random matroid of the given class, for property tests.
MatroidSpec random_matroid(MatroidClass cls, std::size_t ground, Rng& rng);

// Randomized greedy search for n disjoint n-sets independent in both
// matroids, restarting up to `restarts` times. Deterministic in `seed`.
// Throws GenerationError when the budget runs out or when the ground set is
// smaller than n^2.
Family gen_random_family(const MatroidSpec& m, const MatroidSpec& n_spec,
                         std::size_t n, std::uint64_t seed,
                         std::size_t restarts = 200);

// Two capacity-1 partition matroids (left and right endpoints) over the
// edges of a bipartite multigraph that is the union of n random perfect
// matchings; the matchings are the sets.
Family gen_bipartite_family(std::size_t n, std::uint64_t seed);

// Family over n^2 shuffled ids where each matroid is built around the
// sets, so the hypotheses hold by construction.
Family gen_planted_family(MatroidClass m_class, MatroidClass n_class,
                          std::size_t n, std::uint64_t seed);

struct InstanceFile {
  Family family;
  std::optional<std::uint64_t> seed;
  std::string generator;
};

// Generator names: "<class>,<class>" over uniform|partition|graphic|linear,
// "latin", "rowmls-graphic", "rowmls-linear", "bipartite".
InstanceFile generate_instance(std::string_view generator, std::size_t n,
                               std::uint64_t seed);
// Names accepted by generate_instance, in a fixed order.
std::vector<std::string> generator_names();

std::string serialize(const InstanceFile& instance);
// Throws ParseError for malformed text and ValidationError when the text
// describes an invalid family.
InstanceFile parse_instance(std::string_view text);

}  // namespace rainbow

#endif  // RAINBOW_INSTANCES_HPP_

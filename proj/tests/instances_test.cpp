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

#include "rainbow/instances.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <set>
#include <string>

#include "oracles.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verifier.hpp"

namespace rainbow {
namespace {

using ::testing::HasSubstr;

std::string ErrorOf(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

constexpr char kTwoByTwo[] =
    "rainbow-instance v1\n"
    "ground 4\n"
    "matroid M partition 0,2=1 1,3=1\n"
    "matroid N partition 0,3=1 1,2=1\n"
    "family 2\n"
    "set 0: 0 1\n"
    "set 1: 2 3\n";

TEST(LatinTest, ValidationAndShapes) {
  EXPECT_NO_THROW(validate_latin(cyclic_latin(5)));
  LatinSquare rows_only{2, {{0, 1}, {0, 1}}};
  EXPECT_THROW(validate_latin(rows_only), ValidationError);
  EXPECT_NO_THROW(validate_latin(rows_only, true));
  EXPECT_THROW(validate_latin({2, {{0, 0}, {1, 0}}}, true), ValidationError);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_NO_THROW(validate_latin(random_latin(6, seed)));
  }
}

TEST(LatinTest, OrderOne) {
  auto f = latin_to_family(cyclic_latin(1));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.sets[0].size(), 1u);
  EXPECT_EQ(solve(f).size(), 1u);
}

TEST(LatinTest, CyclicOrderTwoHasOnlySizeOne) {
  auto f = latin_to_family(cyclic_latin(2));
  // The two diagonals each repeat a symbol; nothing else uses two rows
  // and two columns.
  for (ElementId a : f.sets[0]) {
    for (ElementId b : f.sets[1]) {
      ElementSet pair{a, b};
      EXPECT_FALSE(oracle::independent(f.m, pair) &&
                   oracle::independent(f.n, pair));
    }
  }
  EXPECT_EQ(oracle::max_rainbow(f), 1u);
}

TEST(LatinTest, CyclicOrderThreeHasFullTransversal) {
  auto f = latin_to_family(cyclic_latin(3));
  EXPECT_EQ(oracle::max_rainbow(f), 3u);
  // The main diagonal has symbols 0, 2, 1.
  ElementSet diagonal{0, 4, 8};
  EXPECT_TRUE(oracle::independent(f.m, diagonal));
  EXPECT_TRUE(oracle::independent(f.n, diagonal));
}

TEST(LatinTest, RainbowSetsAreExactlyPartialTransversals) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto square = random_latin(n, 40 + n);
    auto f = latin_to_family(square);
    std::vector<ElementId> all(n * n);
    for (ElementId e = 0; e < all.size(); ++e) all[e] = e;
    for (const auto& cells : oracle::subsets(ElementSet(all))) {
      std::set<std::size_t> rows, cols, symbols;
      for (ElementId e : cells) {
        rows.insert(e / n);
        cols.insert(e % n);
        symbols.insert(square.cells[e / n][e % n]);
      }
      const bool transversal = rows.size() == cells.size() &&
                               cols.size() == cells.size() &&
                               symbols.size() == cells.size();
      const bool rainbow = rows.size() == cells.size() &&
                           is_independent(f.m, cells) &&
                           is_independent(f.n, cells);
      ASSERT_EQ(transversal, rainbow) << "n=" << n << " " << cells.to_string();
    }
  }
}

TEST(RowMlsTest, PartitionMatroidGivesTheLatinReduction) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto square = random_latin(3, seed);
    std::vector<ElementSet> blocks;
    for (ElementId s = 0; s < 3; ++s) blocks.push_back({s});
    RowMls mls{3, MatroidSpec::partition(3, blocks, {1, 1, 1}), {}};
    for (const auto& row : square.cells) {
      mls.cells.emplace_back(row.begin(), row.end());
    }
    auto lifted = rowmls_to_family(mls);
    auto latin = latin_to_family(square);
    EXPECT_EQ(lifted.sets, latin.sets);
    // Symbols and columns trade places between M and N.
    for (const auto& s :
         oracle::subsets(ElementSet{0, 1, 2, 3, 4, 5, 6, 7, 8})) {
      ASSERT_EQ(is_independent(lifted.m, s), is_independent(latin.n, s));
      ASSERT_EQ(is_independent(lifted.n, s), is_independent(latin.m, s));
    }
  }
}

TEST(RowMlsTest, Gf2DegreeTwo) {
  RowMls mls{2, MatroidSpec::linear(2, 2, {{1, 0}, {0, 1}}), {{0, 1}, {0, 1}}};
  auto f = rowmls_to_family(mls);
  // Cells (0,0) and (1,1) hold different unit vectors.
  EXPECT_EQ(oracle::max_rainbow(f), 2u);
  auto rep = solve(f, {true});
  EXPECT_GE(rep.size(), 1u);
  EXPECT_TRUE(oracle::rainbow_ok(rep.rainbow, f));
}

TEST(RowMlsTest, RepeatedEntryInOneTransversalIsDependent) {
  RowMls mls{2, MatroidSpec::linear(2, 2, {{1, 0}, {0, 1}}), {{0, 1}, {1, 0}}};
  auto f = rowmls_to_family(mls);
  // Cells (0,1) and (1,0) both hold element 1.
  EXPECT_FALSE(is_independent(f.m, {1, 2}));
  EXPECT_FALSE(is_independent(f.m, {0, 3}));
  EXPECT_TRUE(is_independent(f.m, {0, 2}));
}

TEST(RowMlsTest, RandomGraphicAndLinearValidate) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto g = random_rowmls_graphic(n, seed);
      EXPECT_NO_THROW(validate_rowmls(g));
      EXPECT_NO_THROW(validate_family(rowmls_to_family(g)));
      auto l = random_rowmls_linear(n, 3, seed);
      EXPECT_NO_THROW(validate_rowmls(l));
      EXPECT_NO_THROW(validate_family(rowmls_to_family(l)));
    }
  }
}

TEST(RowMlsTest, RejectsNonBasisRow) {
  auto tri = MatroidSpec::graphic(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_THROW(validate_rowmls({2, tri, {{0, 1}, {0, 0}}}), ValidationError);
  EXPECT_THROW(
      rowmls_to_family({2, MatroidSpec::uniform(3, 2), {{0, 1}, {1, 2}}}),
      ValidationError);
}

TEST(GeneratorTest, EveryGeneratorValidates) {
  for (const auto& gen : generator_names()) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const std::size_t n = 2 + seed % 7;
      auto inst = generate_instance(gen, n, seed);
      ASSERT_EQ(inst.family.size(), n);
      ASSERT_NO_THROW(validate_family(inst.family)) << gen << " " << seed;
      ASSERT_EQ(inst.generator, gen);
      ASSERT_EQ(inst.seed, seed);
    }
  }
}

TEST(GeneratorTest, DeterministicInSeed) {
  for (const auto& gen : generator_names()) {
    EXPECT_EQ(serialize(generate_instance(gen, 6, 11)),
              serialize(generate_instance(gen, 6, 11)));
    EXPECT_NE(serialize(generate_instance(gen, 6, 11)),
              serialize(generate_instance(gen, 6, 12)));
  }
  Rng a(5), b(5);
  auto m = random_matroid(MatroidClass::kLinear, 6, a);
  EXPECT_EQ(m, random_matroid(MatroidClass::kLinear, 6, b));
}

TEST(GeneratorTest, BipartiteMatchingsAreTheSets) {
  auto f = gen_bipartite_family(5, 3);
  for (const auto& s : f.sets) {
    EXPECT_TRUE(is_independent(f.m, s));
    EXPECT_TRUE(is_independent(f.n, s));
  }
  EXPECT_NO_THROW(validate_family(f));
}

TEST(GeneratorTest, RandomFamilyReportsExhaustedBudget) {
  // Rank 1 leaves no room for sets of size 2.
  auto u = MatroidSpec::uniform(4, 1);
  EXPECT_THROW(gen_random_family(u, u, 2, 0), GenerationError);
  EXPECT_THROW(gen_random_family(u, u, 3, 0), GenerationError);
  auto free4 = MatroidSpec::uniform(4, 4);
  EXPECT_NO_THROW(validate_family(gen_random_family(free4, free4, 2, 0)));
  EXPECT_THROW(generate_instance("matching", 3, 0), DomainError);
}

TEST(FormatTest, RoundTrip) {
  for (const auto& gen : generator_names()) {
    for (std::size_t n = 1; n <= 6; ++n) {
      auto inst = generate_instance(gen, n, n * 7);
      auto text = serialize(inst);
      auto back = parse_instance(text);
      ASSERT_EQ(back.family, inst.family) << gen << " n=" << n;
      ASSERT_EQ(back.seed, inst.seed);
      ASSERT_EQ(back.generator, inst.generator);
      ASSERT_EQ(serialize(back), text);
    }
  }
}

TEST(FormatTest, MinimalFileParses) {
  auto inst = parse_instance(kTwoByTwo);
  EXPECT_EQ(inst.family, latin_to_family(cyclic_latin(2)));
  EXPECT_FALSE(inst.seed.has_value());
  // Comments and blank lines anywhere are ignored.
  auto spaced = parse_instance(std::string("# hello\n\n") + kTwoByTwo +
                               "\n# seed=9 gen=latin\n");
  EXPECT_EQ(spaced.family, inst.family);
  EXPECT_EQ(spaced.seed, 9u);
}

TEST(FormatTest, OverlappingSets) {
  std::string text = kTwoByTwo;
  text.replace(text.find("set 1: 2 3"), 10, "set 1: 1 3");
  EXPECT_THAT(ErrorOf(text), HasSubstr("sets not pairwise disjoint"));
}

TEST(FormatTest, WrongSetSize) {
  std::string text = kTwoByTwo;
  text.replace(text.find("set 0: 0 1"), 10, "set 0: 0");
  auto message = ErrorOf(text);
  EXPECT_THAT(message, HasSubstr("set 0 has size 1"));
  EXPECT_THAT(message, HasSubstr("n = 2"));
}

TEST(FormatTest, PositionedParseErrors) {
  try {
    parse_instance("rainbow-instance v1\nground four\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    std::string text = kTwoByTwo;
    text.replace(text.find("matroid N"), 9, "matroid Q");
    parse_instance(text);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(parse_instance("rainbow-instance v2\n"), ParseError);
  EXPECT_THROW(parse_instance(""), ParseError);
  EXPECT_THROW(parse_instance(std::string(kTwoByTwo) + "set 2: 4\n"),
               ParseError);
}

TEST(FormatTest, SemanticErrorsAreValidationErrors) {
  std::string text = kTwoByTwo;
  text.replace(text.find("0,2=1 1,3=1"), 11, "0,2=1 1,2=1");
  EXPECT_THROW(parse_instance(text), ValidationError);
  text = kTwoByTwo;
  text.replace(text.find("set 1: 2 3"), 10, "set 1: 2 9");
  EXPECT_THROW(parse_instance(text), ValidationError);
}

}  // namespace
}  // namespace rainbow

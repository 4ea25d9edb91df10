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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/instances.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {
namespace {

MatroidSpec Triangle() {
  return MatroidSpec::graphic(3, {{0, 1}, {1, 2}, {2, 0}});
}

MatroidSpec Gf2Plane() {
  return MatroidSpec::linear(2, 2, {{1, 0}, {0, 1}, {1, 1}});
}

// Path 0-1-2-3 plus chord (0,2).
MatroidSpec PathWithChord() {
  return MatroidSpec::graphic(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
}

constexpr MatroidClass kClasses[] = {
    MatroidClass::kUniform, MatroidClass::kPartition, MatroidClass::kGraphic,
    MatroidClass::kLinear};

TEST(ElementSetTest, SortsAndRejectsDuplicates) {
  ElementSet s{3, 1, 2};
  EXPECT_EQ(s.to_string(), "{1, 2, 3}");
  EXPECT_THROW((ElementSet{1, 1}), DomainError);
  EXPECT_EQ(s.minus(ElementSet{2}), (ElementSet{1, 3}));
  EXPECT_EQ(s.with(0).without(3), (ElementSet{0, 1, 2}));
  EXPECT_TRUE((ElementSet{1}).subset_of(s));
  EXPECT_TRUE(s.disjoint_from(ElementSet{0, 4}));
}

TEST(IsIndependentTest, Examples) {
  EXPECT_FALSE(is_independent(MatroidSpec::uniform(4, 2), {0, 1, 2}));
  EXPECT_FALSE(is_independent(Triangle(), {0, 1, 2}));
  EXPECT_TRUE(is_independent(Triangle(), {0, 1}));
  EXPECT_FALSE(is_independent(Gf2Plane(), {0, 1, 2}));
  EXPECT_TRUE(is_independent(Gf2Plane(), {1, 2}));
}

TEST(IsIndependentTest, LoopsAndParallelEdges) {
  auto g = MatroidSpec::graphic(2, {{0, 0}, {0, 1}, {1, 0}});
  EXPECT_FALSE(is_independent(g, {0}));
  EXPECT_TRUE(is_independent(g, {1}));
  EXPECT_FALSE(is_independent(g, {1, 2}));
  auto zero = MatroidSpec::linear(3, 2, {{0, 0}, {3, 6}});
  EXPECT_FALSE(is_independent(zero, {0}));
  EXPECT_FALSE(is_independent(zero, {1}));  // reduced to the zero vector
}

TEST(IsIndependentTest, RejectsBadIds) {
  EXPECT_THROW(is_independent(Triangle(), {3}), DomainError);
  EXPECT_THROW(rank(MatroidSpec::uniform(2, 1), {5}), DomainError);
}

TEST(MatroidSpecTest, FactoriesValidate) {
  EXPECT_TRUE(is_independent(MatroidSpec::uniform(2, 3), {0, 1}));
  EXPECT_THROW(MatroidSpec::partition(3, {{0, 1}}, {1}), DomainError);
  EXPECT_THROW(MatroidSpec::partition(3, {{0, 1}, {1, 2}}, {1, 1}),
               DomainError);
  EXPECT_THROW(MatroidSpec::partition(2, {{0, 1}, {}}, {1, 1}), DomainError);
  EXPECT_THROW(MatroidSpec::graphic(2, {{0, 2}}), DomainError);
  EXPECT_THROW(MatroidSpec::linear(4, 1, {{1}}), DomainError);
  EXPECT_THROW(MatroidSpec::linear(5, 2, {{1}}), DomainError);
  EXPECT_EQ(parse_class(class_name(MatroidClass::kLinear)),
            MatroidClass::kLinear);
  EXPECT_THROW(parse_class("vector"), DomainError);
}

TEST(RankTest, Examples) {
  EXPECT_EQ(rank(MatroidSpec::uniform(4, 2), {0, 1, 2, 3}), 2u);
  EXPECT_EQ(rank(Triangle(), {0, 1, 2}), 2u);
  for (const auto& spec :
       {Triangle(), Gf2Plane(), MatroidSpec::uniform(3, 1)}) {
    EXPECT_EQ(rank(spec, {}), 0u);
  }
}

TEST(SpansTest, Examples) {
  EXPECT_TRUE(spans(MatroidSpec::uniform(4, 2), {0, 1}, 2));
  EXPECT_FALSE(spans(Triangle(), {0}, 1));
  auto p = MatroidSpec::partition(3, {{0, 1}, {2}}, {1, 1});
  EXPECT_TRUE(spans(p, {0}, 1));
  EXPECT_TRUE(spans(Triangle(), {0}, 0));
}

TEST(CircuitSupportTest, Examples) {
  EXPECT_EQ(circuit_support(MatroidSpec::uniform(4, 2), {0, 1}, 2),
            (ElementSet{0, 1}));
  auto p = MatroidSpec::partition(3, {{0, 1}, {2}}, {1, 1});
  EXPECT_EQ(circuit_support(p, {0, 2}, 1), (ElementSet{0}));
}

TEST(CircuitSupportTest, PathWithChordMatchesBruteForce) {
  auto g = PathWithChord();
  ElementSet i{0, 1, 2};
  auto expected = oracle::support(g, i, 3);
  EXPECT_EQ(expected, (ElementSet{0, 1}));
  EXPECT_EQ(circuit_support(g, i, 3), expected);
}

TEST(CircuitSupportTest, RejectsBrokenPreconditions) {
  EXPECT_THROW(circuit_support(Triangle(), {0, 1, 2}, 0), ContractError);
  EXPECT_THROW(circuit_support(Triangle(), {0}, 1), ContractError);
  EXPECT_THROW(circuit_support(Triangle(), {0, 1}, 1), ContractError);
}

TEST(AugmentToTest, Examples) {
  EXPECT_EQ(augment_to(MatroidSpec::uniform(5, 3), {0}, {1, 2, 3}),
            (ElementSet{1, 2}));
  EXPECT_EQ(augment_to(Triangle(), {0}, {1, 2}), (ElementSet{1}));
}

TEST(AugmentToTest, Gf2MatchesBruteForce) {
  auto m = Gf2Plane();
  auto j1 = augment_to(m, {2}, {0, 1});
  EXPECT_EQ(j1, (ElementSet{0}));
  EXPECT_TRUE(oracle::independent(m, ElementSet{2}.united(j1)));
  // Every valid completion of {2} inside {0, 1} has exactly one element.
  for (const auto& sub : oracle::subsets(ElementSet{0, 1})) {
    if (oracle::independent(m, sub.with(2))) EXPECT_LE(sub.size(), 1u);
  }
}

TEST(AugmentToTest, RejectsBrokenPreconditions) {
  EXPECT_THROW(augment_to(Triangle(), {0, 1}, {2}), ContractError);
  EXPECT_THROW(augment_to(Triangle(), {0}, {0, 1, 2}), ContractError);
}

TEST(MinRemovalTest, Examples) {
  EXPECT_EQ(min_removal(MatroidSpec::uniform(4, 2), {0, 1}, {2, 3}),
            (ElementSet{0, 1}));
  EXPECT_EQ(min_removal(Triangle(), {0, 1}, {}), ElementSet{});
  EXPECT_THROW(min_removal(Triangle(), {0}, {0, 1, 2}), ContractError);
}

TEST(MinRemovalTest, TriangleMatchesBruteForce) {
  auto expected = oracle::min_removal(Triangle(), {0, 1}, {2});
  EXPECT_EQ(expected, (ElementSet{0}));
  EXPECT_EQ(min_removal(Triangle(), {0, 1}, {2}), expected);
}

// Oracle cross-checks on random small matroids of every class.

ElementSet RandomSubset(std::size_t ground, Rng& rng) {
  std::vector<ElementId> ids;
  for (ElementId e = 0; e < ground; ++e) {
    if (rng.chance(1, 2)) ids.push_back(e);
  }
  return ElementSet(ids);
}

ElementSet RandomIndependent(const MatroidSpec& m, Rng& rng) {
  std::vector<ElementId> order(m.ground_size());
  for (ElementId e = 0; e < order.size(); ++e) order[e] = e;
  rng.shuffle(order);
  ElementSet s;
  const std::size_t want = rng.below(m.ground_size() + 1);
  for (ElementId e : order) {
    if (s.size() == want) break;
    if (is_independent(m, s.with(e))) s = s.with(e);
  }
  return s;
}

class RandomMatroidTest : public ::testing::TestWithParam<MatroidClass> {};

TEST_P(RandomMatroidTest, OperationsAgreeWithBruteForce) {
  Rng rng(17 + static_cast<int>(GetParam()));
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t ground = rng.between(1, 8);
    auto m = random_matroid(GetParam(), ground, rng);
    auto s = RandomSubset(ground, rng);
    ASSERT_EQ(is_independent(m, s), oracle::independent(m, s)) << s.to_string();
    ASSERT_EQ(rank(m, s), oracle::rank(m, s));
    const ElementId x = rng.below(ground);
    ASSERT_EQ(spans(m, s, x), oracle::spans(m, s, x));

    auto i = RandomIndependent(m, rng);
    if (!i.contains(x) && !is_independent(m, i.with(x))) {
      auto sup = circuit_support(m, i, x);
      ASSERT_EQ(sup, oracle::support(m, i, x));
      // Unique minimal: no other subset of the same size spans x.
      for (const auto& other : oracle::subsets(i)) {
        if (other.size() <= sup.size() && other != sup) {
          ASSERT_FALSE(oracle::spans(m, other, x)) << other.to_string();
        }
      }
    }

    auto j = RandomIndependent(m, rng);
    if (i.size() < j.size()) {
      auto j1 = augment_to(m, i, j);
      ASSERT_TRUE(j1.subset_of(j.minus(i)));
      ASSERT_TRUE(oracle::independent(m, i.united(j1)));
      ASSERT_EQ(i.united(j1).size(), j.size());
    }
    ASSERT_EQ(min_removal(m, i, j), oracle::min_removal(m, i, j));
  }
}

TEST_P(RandomMatroidTest, AxiomsHoldExhaustively) {
  Rng rng(91 + static_cast<int>(GetParam()));
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t ground = rng.between(1, 7);
    auto m = random_matroid(GetParam(), ground, rng);
    std::vector<ElementId> all(ground);
    for (ElementId e = 0; e < ground; ++e) all[e] = e;
    auto family = oracle::subsets(ElementSet(all));
    std::vector<ElementSet> indep;
    for (const auto& s : family) {
      if (is_independent(m, s)) indep.push_back(s);
    }
    ASSERT_TRUE(is_independent(m, {}));
    for (const auto& a : indep) {
      for (ElementId e : a) ASSERT_TRUE(is_independent(m, a.without(e)));
      for (const auto& b : indep) {
        if (a.size() >= b.size()) continue;
        bool extends = false;
        for (ElementId e : b.minus(a)) {
          extends = extends || is_independent(m, a.with(e));
        }
        ASSERT_TRUE(extends) << a.to_string() << " " << b.to_string();
      }
    }
    // Rank: monotone and submodular.
    for (const auto& a : family) {
      for (const auto& b : family) {
        if (a.subset_of(b)) ASSERT_LE(rank(m, a), rank(m, b));
        ASSERT_LE(rank(m, a.united(b)) + rank(m, a.intersected(b)),
                  rank(m, a) + rank(m, b));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllClasses, RandomMatroidTest,
                         ::testing::ValuesIn(kClasses), [](const auto& info) {
                           return std::string(class_name(info.param));
                         });

}  // namespace
}  // namespace rainbow

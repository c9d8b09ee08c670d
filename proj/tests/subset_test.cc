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

#include "rsmax/subset.h"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "gtest/gtest.h"

namespace rsmax {
namespace {

TEST(SubsetTest, InsertEraseContains) {
  Subset s{3, 0, 7};
  EXPECT_EQ(s.Size(), 3);
  EXPECT_TRUE(s.Contains(7));
  EXPECT_FALSE(s.Contains(1));
  EXPECT_FALSE(s.Contains(-1));
  s.Erase(3);
  s.Erase(500);
  EXPECT_EQ(s.ToString(), "{0,7}");
  EXPECT_EQ(s.Highest(), 7);
  EXPECT_EQ(Subset().Highest(), -1);
  EXPECT_TRUE(Subset().Empty());
}

TEST(SubsetTest, WideSetsSpillToHeap) {
  Subset s{1, 64, 130};
  EXPECT_EQ(s.Size(), 3);
  EXPECT_EQ(s.WordCount(), 3u);
  EXPECT_EQ(s.Highest(), 130);
  EXPECT_EQ(s.Elements(), (std::vector<int>{1, 64, 130}));
  s.Erase(130);
  // Trailing zero words do not affect equality or hashing.
  EXPECT_EQ(s, (Subset{1, 64}));
  EXPECT_EQ(SubsetHash()(s), SubsetHash()(Subset{1, 64}));
  EXPECT_EQ(Subset::Range(130).Size(), 130);
  EXPECT_FALSE(Subset::Range(130).Contains(130));
  EXPECT_TRUE(Subset::Range(130).Contains(129));
  EXPECT_TRUE(Subset::Range(0).Empty());
}

TEST(SubsetTest, SetAlgebraAcrossWidths) {
  const Subset a{0, 5, 70};
  const Subset b{5, 6};
  EXPECT_EQ(a | b, (Subset{0, 5, 6, 70}));
  EXPECT_EQ(a & b, (Subset{5}));
  EXPECT_EQ(a - b, (Subset{0, 70}));
  EXPECT_EQ(b - a, (Subset{6}));
  EXPECT_TRUE((Subset{5}).IsSubsetOf(a));
  EXPECT_FALSE(a.IsSubsetOf(b));
  EXPECT_TRUE(a.Intersects(b));
  EXPECT_FALSE((Subset{1, 2}).Intersects(Subset{3, 100}));
  EXPECT_EQ(a.With(1).Without(70), (Subset{0, 1, 5}));
}

TEST(SubsetTest, LexicographicOrder) {
  EXPECT_TRUE((Subset{0, 1}) < (Subset{0, 2}));
  EXPECT_TRUE((Subset{0, 2}) < (Subset{1}));
  EXPECT_TRUE((Subset{0}) < (Subset{0, 1}));
  EXPECT_TRUE(Subset() < (Subset{0}));
  EXPECT_FALSE((Subset{1}) < (Subset{1}));
  EXPECT_TRUE((Subset{0, 100}) < (Subset{1}));
  EXPECT_TRUE((Subset{3, 64}) < (Subset{3, 65}));
}

TEST(SubsetTest, LexicographicOrderMatchesSortedSequences) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> xs, ys;
    for (int i = 0; i < 140; i += 1 + coin(rng) * 9) {
      if (coin(rng) == 0) xs.push_back(i);
      if (coin(rng) == 0) ys.push_back(i);
    }
    const Subset x = Subset::FromElements(xs);
    const Subset y = Subset::FromElements(ys);
    EXPECT_EQ(x < y, std::lexicographical_compare(xs.begin(), xs.end(),
                                                  ys.begin(), ys.end()));
  }
}

TEST(SubsetTest, CombinationsAreLexicographicAndComplete) {
  const Subset items{1, 3, 4, 8, 9, 70};
  for (int r = 0; r <= 6; ++r) {
    std::vector<Subset> seen;
    ForEachCombination(items, r, [&](const Subset& s) {
      seen.push_back(s);
      return true;
    });
    EXPECT_EQ(seen.size(), Binomial(6, r));
    EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
    std::unordered_set<Subset, SubsetHash> unique(seen.begin(), seen.end());
    EXPECT_EQ(unique.size(), seen.size());
    for (const Subset& s : seen) {
      EXPECT_EQ(s.Size(), r);
      EXPECT_TRUE(s.IsSubsetOf(items));
    }
  }
  int visits = 0;
  EXPECT_FALSE(ForEachCombination(items, 2, [&](const Subset&) {
    return ++visits < 3;
  }));
  EXPECT_EQ(visits, 3);
  EXPECT_TRUE(ForEachCombination(items, 7, [](const Subset&) { return true; }));
}

TEST(SubsetTest, BinomialSaturates) {
  EXPECT_EQ(Binomial(10, 3), 120u);
  EXPECT_EQ(Binomial(5, 0), 1u);
  EXPECT_EQ(Binomial(5, 6), 0u);
  EXPECT_EQ(Binomial(62, 31), 465428353255261088ull);
  EXPECT_EQ(Binomial(200, 100), ~std::uint64_t{0});
  EXPECT_EQ(SaturatingMul(~std::uint64_t{0}, 2), ~std::uint64_t{0});
  EXPECT_EQ(SaturatingMul(6, 7), 42u);
}

}  // namespace
}  // namespace rsmax

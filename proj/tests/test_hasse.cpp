#include <gtest/gtest.h>

#include <random>

#include "tamaripop/hasse.hpp"

namespace tamaripop {
namespace {

using Index = FinitePoset::Index;

// 0 < 1 < 2 < 4, 0 < 3 < 4
FinitePoset pentagon() { return FinitePoset::from_lower_covers({{}, {0}, {1}, {0}, {2, 3}}); }

TEST(FinitePoset, PentagonOrder) {
  const auto p = pentagon();
  EXPECT_EQ(p.size(), 5u);
  EXPECT_TRUE(p.leq(0, 4));
  EXPECT_TRUE(p.leq(1, 2));
  EXPECT_FALSE(p.leq(2, 3));
  EXPECT_FALSE(p.leq(3, 1));
  EXPECT_EQ(p.down_set_size(4), 5u);
  EXPECT_EQ(p.down_set_size(2), 3u);
}

TEST(FinitePoset, PentagonMeets) {
  const auto p = pentagon();
  EXPECT_EQ(p.meet(2, 3), Index{0});
  EXPECT_EQ(p.meet(1, 2), Index{1});
  EXPECT_EQ(p.meet(4, 3), Index{3});
  EXPECT_EQ(p.meet(2, 2), Index{2});
}

TEST(FinitePoset, MissingMeet) {
  // Two minimal elements below a common top.
  const auto p = FinitePoset::from_lower_covers({{}, {}, {0, 1}});
  EXPECT_FALSE(p.meet(0, 1).has_value());
  // Bowtie: 0,1 < 2,3; 2 and 3 have two maximal lower bounds.
  const auto bow = FinitePoset::from_lower_covers({{}, {}, {0, 1}, {0, 1}});
  EXPECT_FALSE(bow.meet(2, 3).has_value());
}

TEST(FinitePoset, CycleRejected) {
  EXPECT_THROW(FinitePoset::from_lower_covers({{1}, {0}}), std::invalid_argument);
}

TEST(FinitePoset, UpperCoversInvertLowerCovers) {
  const auto p = pentagon();
  const auto up = p.upper_covers();
  EXPECT_EQ(up[0], (std::vector<Index>{1, 3}));
  EXPECT_EQ(up[2], (std::vector<Index>{4}));
  EXPECT_TRUE(up[4].empty());
}

TEST(FinitePoset, FromOrderRecoversCovers) {
  // Divisibility on 1..36 against direct cover detection.
  const Index n = 36;
  auto divides = [](Index a, Index b) { return (b + 1) % (a + 1) == 0; };
  const auto p = FinitePoset::from_order(n, divides);
  for (Index x = 0; x < n; ++x) {
    std::vector<Index> expected;
    for (Index y = 0; y < n; ++y) {
      if (y == x || !divides(y, x)) continue;
      bool cover = true;
      for (Index z = 0; z < n; ++z)
        if (z != x && z != y && divides(y, z) && divides(z, x)) cover = false;
      if (cover) expected.push_back(y);
    }
    auto got = p.lower_covers()[x];
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << x + 1;
  }
  // gcd is the meet.
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) EXPECT_EQ(p.meet(a, b), Index(std::gcd(a + 1, b + 1) - 1));
}

TEST(FinitePoset, MeetAgreesWithBruteForceOnRandomPosets) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 5 + static_cast<Index>(rng() % 90);
    std::vector<std::vector<Index>> lower(n);
    for (Index x = 1; x < n; ++x)
      for (Index y = 0; y < x; ++y)
        if (rng() % 6 == 0) lower[x].push_back(y);
    const auto p = FinitePoset::from_lower_covers(lower);
    // Brute-force reachability; covers only point to smaller indices.
    std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
    for (Index x = 0; x < n; ++x) {
      le[x][x] = 1;
      for (Index y : lower[x])
        for (Index z = 0; z < n; ++z)
          if (le[y][z]) le[x][z] = 1;
    }
    // le[x][z] means z <= x.
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        ASSERT_EQ(p.leq(b, a), le[a][b] == 1);
        std::vector<Index> common;
        for (Index z = 0; z < n; ++z)
          if (le[a][z] && le[b][z]) common.push_back(z);
        std::optional<Index> glb;
        for (Index g : common) {
          bool all = true;
          for (Index z : common) all = all && le[g][z];
          if (all) glb = g;
        }
        ASSERT_EQ(p.meet(a, b), glb);
      }
  }
}

}  // namespace
}  // namespace tamaripop

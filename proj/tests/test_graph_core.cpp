#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gallai/graph_core.hpp"
#include "oracles.hpp"

using namespace gallai;

TEST(EdgeIndex, Examples) {
  EXPECT_EQ(edge_index(0, 1, 4), 0u);
  EXPECT_EQ(edge_index(2, 3, 4), 5u);
  auto e = edge_index(1, 3, 5);
  EXPECT_EQ(edge_endpoints(e, 5), std::make_pair(1, 3));
}

TEST(EdgeIndex, BijectionForAllSmallOrders) {
  for (int n = 2; n <= 12; ++n) {
    std::set<std::size_t> seen;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) {
        auto e = edge_index(i, j, n);
        ASSERT_LT(e, pair_count(n));
        ASSERT_TRUE(seen.insert(e).second);
        ASSERT_EQ(edge_endpoints(e, n), std::make_pair(i, j));
      }
    EXPECT_EQ(seen.size(), pair_count(n));
  }
}

TEST(EdgeIndex, RejectsBadPairs) {
  EXPECT_THROW(edge_index(2, 2, 4), InvalidArgument);
  EXPECT_THROW(edge_index(3, 1, 4), InvalidArgument);
  EXPECT_THROW(edge_index(0, 4, 4), InvalidArgument);
  EXPECT_THROW(edge_index(-1, 2, 4), InvalidArgument);
}

TEST(ColoredComplete, SetColorRoundTripAndBitsetsAgree) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 8; ++n) {
    const int k = 4;
    auto c = ColoredComplete::monochromatic(n, k, 1);
    std::uniform_int_distribution<int> pick(1, k);
    std::vector<Color> expect(pair_count(n), 1);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) {
        Color col = static_cast<Color>(pick(rng));
        c.set_color(i, j, col);
        expect[edge_index(i, j, n)] = col;
      }
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) {
        Color col = expect[edge_index(i, j, n)];
        ASSERT_EQ(c.color(i, j), col);
        for (int other = 1; other <= k; ++other) {
          bool adjacent = c.neighbors(static_cast<Color>(other), i) & bit(j);
          ASSERT_EQ(adjacent, other == col);
        }
      }
    EXPECT_EQ(c, ColoredComplete(n, k, expect));
  }
}

TEST(ColoredComplete, Exactness) {
  auto c = ColoredComplete::monochromatic(4, 2, 1);
  EXPECT_FALSE(c.exact());
  c.set_color(0, 1, 2);
  EXPECT_TRUE(c.exact());
  EXPECT_EQ(c.used_color_count(), 2);
  c.set_color(0, 1, 1);
  EXPECT_FALSE(c.exact());
}

TEST(ColoredComplete, ConstructorValidates) {
  EXPECT_THROW(ColoredComplete(3, 2, {1, 2}), InvalidArgument);
  EXPECT_THROW(ColoredComplete(3, 2, {1, 2, 3}), InvalidArgument);
  EXPECT_THROW(ColoredComplete(3, 2, {0, 1, 1}), InvalidArgument);
  EXPECT_THROW(ColoredComplete(0, 1, {}), InvalidArgument);
  EXPECT_THROW(ColoredComplete::monochromatic(65, 1, 1), UnsupportedSize);
  EXPECT_NO_THROW(ColoredComplete::monochromatic(64, 1, 1));
}

TEST(ColoredComplete, PermutedAndInduced) {
  std::mt19937_64 rng(5);
  auto c = oracle::random_coloring(rng, 7, 3);
  auto perm = oracle::random_permutation(rng, 7);
  auto p = c.permuted(perm);
  for (Vertex i = 0; i < 7; ++i)
    for (Vertex j = i + 1; j < 7; ++j) EXPECT_EQ(p.color(perm[i], perm[j]), c.color(i, j));
  std::vector<Vertex> sub{6, 2, 4};
  auto s = c.induced(sub);
  EXPECT_EQ(s.order(), 3);
  EXPECT_EQ(s.color(0, 1), c.color(6, 2));
  EXPECT_EQ(s.color(1, 2), c.color(2, 4));
}

TEST(TargetGraph, Validation) {
  EXPECT_NO_THROW(TargetGraph::star_plus(5, 2));
  EXPECT_THROW(TargetGraph::star_plus(4, 2), InvalidArgument);
  EXPECT_THROW(TargetGraph::star_plus(4, -1), InvalidArgument);
  EXPECT_THROW(TargetGraph::pineapple(5, 5), InvalidArgument);
  EXPECT_NO_THROW(TargetGraph::pineapple(6, 5));
  EXPECT_THROW(TargetGraph::arbitrary(3, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(TargetGraph::arbitrary(3, {{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(TargetGraph::arbitrary(3, {{0, 3}}), InvalidArgument);
}

TEST(TargetGraph, EdgeCounts) {
  EXPECT_EQ(TargetGraph::complete(5).edge_count(), 10u);
  EXPECT_EQ(TargetGraph::star_plus(7, 3).edge_count(), 9u);
  EXPECT_EQ(TargetGraph::pineapple(7, 5).edge_count(), 12u);
  EXPECT_EQ(TargetGraph::complete_minus_matching(6).edge_count(), 12u);
  EXPECT_EQ(TargetGraph::complete_minus_matching(7).edge_count(), 18u);
  EXPECT_TRUE(TargetGraph::star_plus(3, 1).is_complete_graph());
  EXPECT_FALSE(TargetGraph::star_plus(4, 1).is_complete_graph());
}

TEST(TargetProperties, Examples) {
  EXPECT_EQ(target_properties(TargetGraph::star_plus(4, 1)), (TargetProperties{4, 3, 3}));
  EXPECT_EQ(target_properties(TargetGraph::pineapple(6, 5)), (TargetProperties{6, 5, 5}));
  EXPECT_EQ(target_properties(TargetGraph::complete(5)), (TargetProperties{5, 4, 5}));
}

TEST(TargetProperties, ClosedFormsMatchBruteForce) {
  std::vector<TargetGraph> all;
  for (int t = 2; t <= 10; ++t) {
    all.push_back(TargetGraph::complete(t));
    for (int r = 0; 2 * r + 1 <= t; ++r) all.push_back(TargetGraph::star_plus(t, r));
    for (int w = 2; w + 1 <= t; ++w) all.push_back(TargetGraph::pineapple(t, w));
    if (t >= 3) all.push_back(TargetGraph::complete_minus_matching(t));
  }
  for (const auto& h : all) {
    auto closed = target_properties(h);
    auto brute = target_properties(TargetGraph::arbitrary(h.order(), h.edges()));
    EXPECT_EQ(closed, brute) << "t=" << h.order();
  }
}

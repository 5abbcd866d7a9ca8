#include <gtest/gtest.h>

#include <set>

#include "gallai/enumerate.hpp"
#include "gallai/search.hpp"
#include "oracles.hpp"

using namespace gallai;

namespace {

std::set<CanonicalKey> keys_of(const std::vector<KeyedColoring>& v) {
  std::set<CanonicalKey> out;
  for (const auto& kc : v) out.insert(kc.key);
  return out;
}

std::set<CanonicalKey> oracle_keys(int n, int k) {
  std::set<CanonicalKey> out;
  oracle::restricted_growth_colorings(n, k, [&](const ColoredComplete& c) {
    if (!oracle::has_rainbow_path(c, 4)) out.insert(canonical_form(c));
  });
  return out;
}

}  // namespace

TEST(Catalog, GraphCountsWithoutIsolatedVertices) {
  // graphs on s vertices, no isolated vertex, up to isomorphism (OEIS A002494)
  const std::vector<std::size_t> expect{0, 0, 1, 2, 7, 23, 122};
  for (int s = 2; s <= 6; ++s) EXPECT_EQ(graphs_without_isolated_vertices(s).size(), expect[s]) << s;
}

TEST(Enumerate, Preconditions) {
  EXPECT_THROW(enumerate_p5free(4, 4), InvalidArgument);
  EXPECT_THROW(enumerate_p5free(6, 3), Unsupported);
  EXPECT_THROW(enumerate_p5free(10, 4), UnsupportedSize);
  EXPECT_TRUE(enumerate_p5free(5, 11).empty());
}

TEST(Enumerate, SoundAndDeduplicated) {
  for (int n = 5; n <= 8; ++n)
    for (int k = 4; k <= 8; ++k) {
      auto out = enumerate_p5free(n, k);
      std::set<CanonicalKey> seen;
      for (const auto& kc : out) {
        ASSERT_TRUE(kc.coloring.exact());
        ASSERT_EQ(kc.coloring.used_color_count(), k);
        ASSERT_FALSE(find_rainbow_path(kc.coloring, 4));
        ASSERT_EQ(canonical_form(kc.coloring), kc.key);
        ASSERT_TRUE(seen.insert(kc.key).second);
      }
      ASSERT_TRUE(std::is_sorted(out.begin(), out.end(),
                                 [](const auto& a, const auto& b) { return a.key < b.key; }));
    }
}

class EnumerateCompleteness : public ::testing::TestWithParam<int> {};

TEST_P(EnumerateCompleteness, MatchesRestrictedGrowthOracleAtN5) {
  const int k = GetParam();
  EXPECT_EQ(keys_of(enumerate_p5free(5, k)), oracle_keys(5, k));
}

INSTANTIATE_TEST_SUITE_P(K, EnumerateCompleteness, ::testing::Values(4, 5, 6, 7, 8, 9, 10));

TEST(Enumerate, MatchesRestrictedGrowthOracleAtN6ManyColors) {
  for (int k : {12, 13, 14})
    EXPECT_EQ(keys_of(enumerate_p5free(6, k)), oracle_keys(6, k)) << "k=" << k;
}

TEST(Enumerate, MatchesBruteForceFilterAtN5K4) {
  std::set<CanonicalKey> brute;
  brute_force_colorings(5, 4, [&](const ColoredComplete& c) {
    if (!has_rainbow_p5(c)) brute.insert(canonical_form(c));
  });
  EXPECT_EQ(keys_of(enumerate_p5free(5, 4)), brute);
}

TEST(Enumerate, ThreadCountDoesNotChangeOutput) {
  for (int n : {6, 7})
    for (int k : {4, 5, 6}) {
      auto one = enumerate_p5free(n, k, {1, kDefaultEnumerationBound});
      auto many = enumerate_p5free(n, k, {8, kDefaultEnumerationBound});
      ASSERT_EQ(one.size(), many.size());
      for (std::size_t i = 0; i < one.size(); ++i) ASSERT_EQ(one[i].key, many[i].key);
    }
}

#include <gtest/gtest.h>

#include <random>

#include "gallai/canonical.hpp"
#include "gallai/constructions.hpp"
#include "oracles.hpp"

using namespace gallai;

TEST(Canonical, MonochromaticK4IsRelabelingInvariant) {
  auto c = ColoredComplete::monochromatic(4, 1, 1);
  std::vector<Vertex> perm{2, 0, 3, 1};
  EXPECT_EQ(canonical_form(c), canonical_form(c.permuted(perm)));
}

TEST(Canonical, ColorSwapKeepsKeyOnlyInColorMode) {
  auto g1 = constructions::g1();
  std::vector<Vertex> id{0, 1, 2, 3};
  std::vector<Color> swap{0, 1, 3, 2, 4, 5};
  auto swapped = g1.permuted(id, swap);
  EXPECT_EQ(canonical_form(g1, CanonMode::vertex_and_color),
            canonical_form(swapped, CanonMode::vertex_and_color));
  EXPECT_NE(canonical_form(g1), canonical_form(constructions::g2()));
}

TEST(Canonical, RejectsLargeOrders) {
  EXPECT_THROW(canonical_form(ColoredComplete::monochromatic(11, 1, 1)), UnsupportedSize);
  EXPECT_NO_THROW(canonical_form(ColoredComplete::monochromatic(10, 1, 1)));
}

TEST(Canonical, StableUnderRandomPermutations) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    int k = 2 + static_cast<int>(rng() % 5);
    auto c = oracle::random_coloring(rng, n, k);
    auto perm = oracle::random_permutation(rng, n);
    auto cperm = oracle::random_color_permutation(rng, k);
    ASSERT_EQ(canonical_form(c, CanonMode::vertex_and_color),
              canonical_form(c.permuted(perm, cperm), CanonMode::vertex_and_color));
    ASSERT_EQ(canonical_form(c, CanonMode::vertex_only),
              canonical_form(c.permuted(perm), CanonMode::vertex_only));
  }
}

TEST(Canonical, KeyIsACompleteInvariantAgainstBruteForce) {
  // equal keys iff equal brute-force minima, checked on pairs that are often
  // isomorphic (few colors, small n)
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 4 + static_cast<int>(rng() % 2);
    int k = 2 + static_cast<int>(rng() % 2);
    auto a = oracle::random_coloring(rng, n, k);
    auto b = oracle::random_coloring(rng, n, k);
    for (bool colors : {false, true}) {
      auto mode = colors ? CanonMode::vertex_and_color : CanonMode::vertex_only;
      bool same_key = canonical_form(a, mode) == canonical_form(b, mode);
      bool same_brute = oracle::brute_canonical(a, colors) == oracle::brute_canonical(b, colors);
      ASSERT_EQ(same_key, same_brute) << "n=" << n << " k=" << k << " colors=" << colors;
    }
  }
}

TEST(Canonical, FromCanonicalIsIsomorphicRepresentative) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    auto c = oracle::random_coloring(rng, n, 3);
    for (auto mode : {CanonMode::vertex_only, CanonMode::vertex_and_color}) {
      auto key = canonical_form(c, mode);
      auto rep = from_canonical(key);
      EXPECT_EQ(canonical_form(rep, mode), key);
      EXPECT_EQ(oracle::brute_canonical(rep, mode == CanonMode::vertex_and_color),
                oracle::brute_canonical(c, mode == CanonMode::vertex_and_color));
    }
  }
}

#include <gtest/gtest.h>

#include <random>

#include "gallai/constructions.hpp"
#include "gallai/structure.hpp"
#include "oracles.hpp"

using namespace gallai;

namespace {

ColoredComplete three_one_factors() {
  return coloring_from_table(4, 3, {{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {1, 3, 2}, {0, 3, 3}, {1, 2, 3}});
}

}  // namespace

TEST(P4Free, Examples) {
  std::mt19937_64 rng(1);
  auto two = oracle::random_coloring(rng, 6, 2);
  EXPECT_EQ(classify_p4free(two).kind, P4Case::at_most_two_colors);
  EXPECT_EQ(classify_p4free(three_one_factors()).kind, P4Case::three_one_factors);
  auto g2 = classify_p4free(constructions::g2());
  EXPECT_EQ(g2.kind, P4Case::rainbow_p4_found);
  ASSERT_TRUE(g2.rainbow);
  EXPECT_TRUE(verify_embedding(constructions::g2(), *g2.rainbow));
  EXPECT_THROW(classify_p4free(ColoredComplete::monochromatic(3, 1, 1)), InvalidArgument);
}

TEST(P4Free, ConformsToTheorem) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    int k = 2 + static_cast<int>(rng() % 3);
    auto c = oracle::biased_coloring(rng, n, k);
    auto r = classify_p4free(c);
    bool rainbow = oracle::has_rainbow_path(c, 3);
    ASSERT_EQ(r.kind == P4Case::rainbow_p4_found, rainbow);
  }
}

TEST(P5Free, Examples) {
  auto f = classify_p5free(constructions::tw_case_f());
  EXPECT_TRUE(f.f);
  auto g4 = constructions::g4(5, 5, 5);
  auto rb = classify_p5free(g4);
  ASSERT_TRUE(rb.b);
  EXPECT_EQ(rb.b->classes.size(), 4u);
  auto g3 = classify_p5free(constructions::g3(6));
  ASSERT_TRUE(g3.c);
  EXPECT_EQ(g3.c->apex, 5);
  EXPECT_THROW(classify_p5free(ColoredComplete::monochromatic(4, 1, 1)), InvalidArgument);
}

TEST(P5Free, TemplatesDAndE) {
  auto d = ColoredComplete::monochromatic(6, 4, 1);
  d.set_color(0, 1, 2);
  d.set_color(0, 2, 3);
  d.set_color(1, 2, 4);
  d.set_color(0, 4, 4);
  auto rd = classify_p5free(d);
  EXPECT_TRUE(rd.d) << rd.cases();
  EXPECT_TRUE(verify_report(d, rd));

  auto e = ColoredComplete::monochromatic(6, 4, 1);
  e.set_color(0, 1, 2);
  e.set_color(2, 3, 2);
  e.set_color(0, 2, 3);
  e.set_color(1, 3, 3);
  e.set_color(0, 3, 4);
  e.set_color(1, 2, 4);
  auto re = classify_p5free(e);
  ASSERT_TRUE(re.e) << re.cases();
  EXPECT_TRUE(re.e->cd_in_e2);
  EXPECT_TRUE(verify_report(e, re));
}

TEST(P5Free, ConformsToTheorem) {
  std::mt19937_64 rng(505);
  int nonempty = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 5 + static_cast<int>(rng() % 5);
    int k = 2 + static_cast<int>(rng() % 7);
    auto c = oracle::biased_coloring(rng, n, k);
    auto r = classify_p5free(c);
    bool rainbow = find_rainbow_path(c, 4).has_value();
    ASSERT_EQ(r.empty(), rainbow);
    ASSERT_TRUE(verify_report(c, r));
    if (!r.empty()) ++nonempty;
  }
  EXPECT_GT(nonempty, 1000);
}

TEST(GallaiPartition, Examples) {
  std::mt19937_64 rng(2);
  auto k5 = oracle::random_coloring(rng, 5, 2);
  GallaiPartition singletons;
  for (Vertex v = 0; v < 5; ++v) singletons.blocks.push_back(bit(v));
  EXPECT_TRUE(verify_gallai_partition(k5, singletons));

  auto g4 = constructions::g4(5, 5, 5);
  GallaiPartition parts;
  for (int i = 0; i < 4; ++i) parts.blocks.push_back(first_vertices(4) << (4 * i));
  EXPECT_TRUE(verify_gallai_partition(g4, parts));

  EXPECT_THROW(verify_gallai_partition(g4, GallaiPartition{{g4.all_vertices()}}), InvalidArgument);
  EXPECT_THROW(verify_gallai_partition(g4, GallaiPartition{{bit(0), bit(1)}}), InvalidArgument);

  auto mono = ColoredComplete::monochromatic(6, 1, 1);
  auto found = find_gallai_partition(mono);
  ASSERT_TRUE(found);
  EXPECT_TRUE(verify_gallai_partition(mono, *found));
}

TEST(GallaiPartition, AlwaysFoundWithoutRainbowTriangle) {
  std::mt19937_64 rng(606);
  int checked = 0;
  while (checked < 2000) {
    int n = 4 + static_cast<int>(rng() % 5);
    int k = 2 + static_cast<int>(rng() % 3);
    // grow a Gallai coloring edge by edge, rejecting rainbow triangles
    auto c = ColoredComplete::monochromatic(n, k, 1);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) {
        Color col = static_cast<Color>(1 + rng() % k);
        c.set_color(i, j, col);
        if (has_rainbow_triangle(c)) c.set_color(i, j, 1);
        if (has_rainbow_triangle(c)) c.set_color(i, j, c.color(0, i == 0 ? 1 : i));
      }
    if (has_rainbow_triangle(c)) continue;
    auto p = find_gallai_partition(c);
    ASSERT_TRUE(p);
    ASSERT_TRUE(verify_gallai_partition(c, *p));
    ++checked;
  }
}

#include <gtest/gtest.h>

#include <cstdio>
#include <random>
#include <sstream>

#include "gallai/constructions.hpp"
#include "gallai/io.hpp"
#include "oracles.hpp"

using namespace gallai;

TEST(ParseTarget, Families) {
  EXPECT_EQ(parse_target("K5"), TargetGraph::complete(5));
  EXPECT_EQ(parse_target("S4^1"), TargetGraph::star_plus(4, 1));
  EXPECT_EQ(parse_target(" S13^3 "), TargetGraph::star_plus(13, 3));
  EXPECT_EQ(parse_target("PA6,5"), TargetGraph::pineapple(6, 5));
  EXPECT_EQ(parse_target("K6-M"), TargetGraph::complete_minus_matching(6));
  auto p4 = parse_target(R"({"order":4,"edges":[[0,1],[1,2],[2,3]]})");
  EXPECT_EQ(p4.order(), 4);
  EXPECT_EQ(p4.edge_count(), 3u);
}

TEST(ParseTarget, RoundTripsThroughDescribe) {
  for (const auto& h : {TargetGraph::complete(7), TargetGraph::star_plus(9, 2),
                        TargetGraph::pineapple(8, 6), TargetGraph::complete_minus_matching(5)})
    EXPECT_EQ(parse_target(describe(h)), h) << describe(h);
}

TEST(ParseTarget, Rejects) {
  for (const char* bad : {"", "K", "Q5", "S4", "S4^", "PA6", "K5-", "{\"order\":3}",
                          "{\"order\":3,\"edges\":[[0]]}", "{bad json", "K99999999999999"})
    EXPECT_THROW(parse_target(bad), ParseError) << bad;
  // well-formed but outside a family's domain
  EXPECT_THROW(parse_target("S4^2"), InvalidArgument);
}

TEST(ColoringJson, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    int k = 1 + static_cast<int>(rng() % 6);
    auto c = oracle::random_coloring(rng, n, k);
    EXPECT_EQ(coloring_from_json(Json::parse(to_json(c).dump())), c);
  }
  auto r35 = r35_witness();
  EXPECT_EQ(coloring_from_json(to_json(r35)), r35);
}

TEST(ColoringJson, Rejections) {
  auto good = Json::parse(R"({"n":3,"k":2,"edges":[[0,1,1],[0,2,2],[1,2,1]]})");
  EXPECT_NO_THROW(coloring_from_json(good));
  const char* bad[] = {
      R"({"n":3,"k":2})",
      R"([1,2,3])",
      R"({"n":3,"k":2,"edges":[[0,1,1],[0,2,2]]})",                  // missing pair
      R"({"n":3,"k":2,"edges":[[0,1,1],[1,0,1],[0,2,2],[1,2,1]]})",  // duplicate
      R"({"n":3,"k":2,"edges":[[0,0,1],[0,1,1],[0,2,2],[1,2,1]]})",  // self-loop
      R"({"n":3,"k":2,"edges":[[0,1,3],[0,2,2],[1,2,1]]})",          // color range
      R"({"n":3,"k":2,"edges":[[0,1,0],[0,2,2],[1,2,1]]})",
      R"({"n":3,"k":2,"edges":[[0,3,1],[0,2,2],[1,2,1]]})",          // vertex range
      R"({"n":0,"k":2,"edges":[]})",
      R"({"n":3,"k":64,"edges":[[0,1,1],[0,2,2],[1,2,1]]})",
      R"({"n":3,"k":2,"edges":[[0,1],[0,2,2],[1,2,1]]})",
      R"({"n":"3","k":2,"edges":[]})",
  };
  for (const char* s : bad) EXPECT_THROW(coloring_from_json(Json::parse(s)), ParseError) << s;
}

TEST(ColoringJson, FileRoundTrip) {
  auto path = ::testing::TempDir() + "gallai_io_roundtrip.json";
  auto c = constructions::f12();
  save_coloring(c, path);
  EXPECT_EQ(load_coloring(path), c);
  std::remove(path.c_str());
  EXPECT_THROW(load_coloring(path), ParseError);
}

TEST(GrResultJson, RoundTrip) {
  for (auto [h, k] : {std::pair{TargetGraph::star_plus(4, 1), 3}, {TargetGraph::star_plus(7, 1), 3},
                      {TargetGraph::complete(4), 2}, {TargetGraph::pineapple(8, 6), 4},
                      {TargetGraph::complete(6), 6}}) {
    auto r = evaluate(h, k, 0.5);
    auto back = gr_result_from_json(Json::parse(to_json(r).dump()));
    EXPECT_EQ(back.kind, r.kind);
    EXPECT_EQ(back.value, r.value);
    EXPECT_EQ(back.lo, r.lo);
    EXPECT_EQ(back.hi, r.hi);
    EXPECT_EQ(back.provenance, r.provenance);
    EXPECT_EQ(to_json(back).dump(), to_json(r).dump());
  }
  EXPECT_THROW(gr_result_from_json(Json::parse(R"({"kind":"Maybe"})")), ParseError);
  EXPECT_THROW(gr_result_from_json(Json::parse(R"({"kind":"Exact"})")), ParseError);
}

TEST(ValueText, Shapes) {
  EXPECT_EQ(value_text(evaluate(TargetGraph::star_plus(4, 1), 3)), "17");
  EXPECT_EQ(value_text(evaluate(TargetGraph::star_plus(7, 1), 3)), "[31,-]");
  EXPECT_EQ(value_text(evaluate(TargetGraph::complete(4), 2)), "?");
}

TEST(RamseyFile, ParsesEntriesAndComments) {
  std::istringstream in(
      "# comment\n"
      "\n"
      "K3+K5 2 14 le3-3   # trailing comment\n"
      "S7^1 3 [31,40] somewhere\n");
  auto t = parse_ramsey_table(in);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].patterns, (std::vector<std::string>{"K3", "K5"}));
  EXPECT_EQ(t[0].colors, 2);
  EXPECT_TRUE(t[0].exact());
  EXPECT_EQ(t[0].lo, 14);
  EXPECT_EQ(t[1].lo, 31);
  EXPECT_EQ(t[1].hi, 40);
  EXPECT_FALSE(t[1].exact());
  EXPECT_EQ(t[1].citation, "somewhere");
}

TEST(RamseyFile, Rejects) {
  for (const char* bad : {"K3+K5 2 14\n", "K3 2 x c\n", "K3 2 [5,4] c\n", "Q3 2 5 c\n",
                          "K3 2 5 c extra\n", "K3 two 5 c\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(parse_ramsey_table(in), ParseError) << bad;
  }
  EXPECT_THROW(load_ramsey_table("/nonexistent/known.txt"), ParseError);
}

TEST(StructureJson, Shape) {
  auto j = to_json(classify_p5free(constructions::f3()));
  EXPECT_TRUE(j["rainbow_p5_free"].get<bool>());
  EXPECT_FALSE(j["cases"].empty());
}

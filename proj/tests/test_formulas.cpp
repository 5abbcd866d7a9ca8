#include <gtest/gtest.h>

#include <cmath>

#include "gallai/formulas.hpp"
#include "gallai/io.hpp"

using namespace gallai;

namespace {

std::vector<TargetGraph> sweep_targets() {
  std::vector<TargetGraph> out;
  for (int t = 3; t <= 12; ++t) {
    out.push_back(TargetGraph::complete(t));
    out.push_back(TargetGraph::complete_minus_matching(t));
    for (int r = 0; r <= (t - 1) / 2; ++r) out.push_back(TargetGraph::star_plus(t, r));
    for (int w = 4; w <= 8; ++w)
      if (t >= w + 1) out.push_back(TargetGraph::pineapple(t, w));
  }
  return out;
}

}  // namespace

TEST(PQ, Examples) {
  EXPECT_EQ(pq_decompose(4, 2), (PQ{2, 0}));
  EXPECT_EQ(pq_decompose(4, 3), (PQ{1, 1}));
  EXPECT_EQ(pq_decompose(0, 5), (PQ{0, 0}));
  EXPECT_THROW(pq_decompose(3, 0), InvalidArgument);
  EXPECT_THROW(pq_decompose(-1, 2), InvalidArgument);
  for (int x = 0; x < 60; ++x)
    for (int m = 1; m < 12; ++m) {
      auto [p, q] = pq_decompose(x, m);
      ASSERT_EQ(p * m + q, x);
      ASSERT_TRUE(q >= 0 && q < m);
    }
}

TEST(NK, MatchesClosedFormAndPairCountProperty) {
  for (int k = 1; k <= 200; ++k) {
    int v = n_k(k);
    EXPECT_EQ(v, static_cast<int>(std::ceil((1 + std::sqrt(1.0 + 8.0 * k)) / 2))) << k;
    if (k >= 7) {
      EXPECT_GE(choose2(v), k);
      EXPECT_LT(choose2(v - 1), k);
    }
  }
}

TEST(Evaluate, Examples) {
  auto s41 = evaluate(TargetGraph::star_plus(4, 1), 3);
  EXPECT_EQ(s41.kind, GrKind::Exact);
  EXPECT_EQ(s41.value, 17);
  EXPECT_EQ(s41.provenance, (std::vector<std::string>{"th3-6", "le3-3"}));
  EXPECT_EQ(evaluate(TargetGraph::complete(5), 5).value, 17);
  EXPECT_EQ(evaluate(TargetGraph::pineapple(6, 5), 4).value, 24);
  EXPECT_EQ(evaluate(TargetGraph::pineapple(7, 5), 4).value, 26);
  EXPECT_EQ(evaluate(TargetGraph::star_plus(6, 1), 4).value, 7);
  EXPECT_EQ(evaluate(TargetGraph::star_plus(13, 3), 4).value, 17);
  for (auto h : {TargetGraph::star_plus(4, 1), TargetGraph::star_plus(4, 0),
                 TargetGraph::pineapple(4, 3), TargetGraph::complete_minus_matching(4)}) {
    auto r = evaluate(h, 12);
    EXPECT_EQ(r.kind, GrKind::Exact) << describe(h);
    EXPECT_EQ(r.value, 6) << describe(h);
  }
}

TEST(Evaluate, JsonShape) {
  EXPECT_EQ(to_json(evaluate(TargetGraph::star_plus(4, 1), 3)).dump(),
            R"({"kind":"Exact","value":17,"provenance":["th3-6","le3-3"]})");
  auto b = evaluate(TargetGraph::star_plus(7, 1), 3);
  EXPECT_EQ(b.kind, GrKind::Bounds);
  EXPECT_EQ(b.lo, 31);
  EXPECT_FALSE(b.hi);
  EXPECT_EQ(to_json(b).dump(), R"({"kind":"Bounds","lo":31,"provenance":["th3-9"]})");
  EXPECT_EQ(to_json(evaluate(TargetGraph::complete(4), 2)).dump(), R"({"kind":"Unknown"})");
}

TEST(Evaluate, PineappleBoundsNeedTheConstant) {
  auto no_c = evaluate(TargetGraph::pineapple(8, 6), 4);
  EXPECT_EQ(no_c.kind, GrKind::Bounds);
  EXPECT_EQ(no_c.lo, 5 * 7 + 1);
  EXPECT_FALSE(no_c.hi);
  auto with_c = evaluate(TargetGraph::pineapple(8, 6), 4, 0.01);
  ASSERT_TRUE(with_c.hi);
  auto r2 = ramsey_known({TargetGraph::pineapple(8, 6)}, 2, 0.01);
  ASSERT_TRUE(r2 && r2->hi);
  EXPECT_EQ(*with_c.hi, 3 * *r2->hi - 2);
  auto cor = evaluate(TargetGraph::pineapple(9, 7), 5, 0.01);
  EXPECT_EQ(cor.kind, GrKind::Bounds);
  EXPECT_NE(std::find(cor.provenance.begin(), cor.provenance.end(), "cor4-4"), cor.provenance.end());
  EXPECT_TRUE(cor.hi);
}

TEST(RamseyKnown, Examples) {
  auto k35 = ramsey_known({TargetGraph::complete(3), TargetGraph::complete(5)}, 2);
  ASSERT_TRUE(k35);
  EXPECT_EQ(k35->lo, 14);
  EXPECT_EQ(ramsey_known({TargetGraph::star_plus(5, 1)}, 3)->lo, 21);
  EXPECT_FALSE(ramsey_known({TargetGraph::star_plus(7, 1)}, 3));
  EXPECT_FALSE(ramsey_known({TargetGraph::pineapple(7, 5)}, 2));
}

TEST(RamseyKnown, DataFileMatchesBuiltInTable) {
  auto file = load_ramsey_table(std::string(GALLAI_DATA_DIR) + "/known_ramsey.txt");
  const auto& table = ramsey_table();
  ASSERT_EQ(file.size(), table.size());
  for (std::size_t i = 0; i < file.size(); ++i) {
    EXPECT_EQ(file[i].patterns, table[i].patterns);
    EXPECT_EQ(file[i].colors, table[i].colors);
    EXPECT_EQ(file[i].lo, table[i].lo);
    EXPECT_EQ(file[i].hi, table[i].hi);
    EXPECT_EQ(file[i].citation, table[i].citation);
  }
}

TEST(Evaluate, CrossRuleConsistencyGrid) {
  // evaluate throws on any disagreement between exact rules or bounds
  int exact = 0, multi = 0;
  for (const auto& h : sweep_targets())
    for (int k = 3; k <= 20; ++k) {
      GrResult r;
      ASSERT_NO_THROW(r = evaluate(h, k)) << describe(h) << " k=" << k;
      ASSERT_NO_THROW(evaluate(h, k, 0.5)) << describe(h) << " k=" << k;
      if (r.kind == GrKind::Exact) {
        ++exact;
        if (r.provenance.size() >= 2) ++multi;
      }
      if (r.kind == GrKind::Bounds && r.lo && r.hi) {
        ASSERT_LE(*r.lo, *r.hi);
      }
      if (r.kind != GrKind::Unknown) {
        ASSERT_FALSE(r.provenance.empty());
      }
    }
  EXPECT_GT(exact, 500);
  EXPECT_GT(multi, 300);
}

TEST(Evaluate, NeverBelowGenericCliqueBound) {
  for (const auto& h : sweep_targets()) {
    auto p = target_properties(h);
    for (int k = 4; k <= p.clique_number; ++k) {
      if (p.clique_number < 3) continue;
      auto r = evaluate(h, k);
      ASSERT_NE(r.kind, GrKind::Unknown);
      ASSERT_TRUE(r.lo);
      EXPECT_GE(*r.lo, static_cast<std::int64_t>(p.clique_number - 1) * (h.order() - 1) + 1)
          << describe(h) << " k=" << k;
    }
  }
}

TEST(Evaluate, CorollaryRowsAgreeWithSources) {
  // S_t^r with r in {1,2}, k = 4: corollary and theorem rows coincide
  for (int t = 6; t <= 12; ++t)
    for (int r = 1; r <= 2; ++r) {
      auto res = evaluate(TargetGraph::star_plus(t, r), 4);
      ASSERT_EQ(res.kind, GrKind::Exact);
      EXPECT_NE(std::find(res.provenance.begin(), res.provenance.end(), "co3-1"), res.provenance.end());
      EXPECT_NE(std::find(res.provenance.begin(), res.provenance.end(), "th3-2"), res.provenance.end());
      EXPECT_NE(std::find(res.provenance.begin(), res.provenance.end(), "th3-9"), res.provenance.end());
      EXPECT_EQ(*res.value, t + (t - 2) / 2 - 1);
    }
}

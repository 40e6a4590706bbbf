#include <gtest/gtest.h>

#include <map>

#include "support.hpp"

using namespace orthohull;
using namespace testing_support;

TEST(MaximalWedges, SquareCorner) {
  auto w = maximal_wedges(square(), 0);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NEAR(w[0].interval.start(), kHalfPi, 1e-15);
  EXPECT_NEAR(w[0].size(), 3 * kHalfPi, 1e-15);
  EXPECT_EQ(w[0].first, 3);
  EXPECT_EQ(w[0].last, 1);
}

TEST(MaximalWedges, TriangleVertex) {
  auto w = maximal_wedges(triangle(), 1);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NEAR(w[0].interval.start(), kPi, 1e-15);
  EXPECT_NEAR(w[0].size(), 7 * kPi / 4, 1e-15);
}

TEST(MaximalWedges, AtMostThreeAndEmpty) {
  auto ps = random_set(50, 21);
  for (const auto& p : ps) {
    auto ws = maximal_wedges(ps, p.id);
    EXPECT_LE(ws.size(), 3u);
    for (const auto& w : ws) {
      EXPECT_GT(w.size(), kHalfPi);
      for (const auto& q : ps) {
        if (q.id == p.id) continue;
        const double a = canonicalize_angle(std::atan2(q.y - p.y, q.x - p.x));
        const double off = ccw_distance(w.interval.start(), a);
        // Interior of the wedge holds no point.
        EXPECT_FALSE(off > 1e-12 && off < w.size() - 1e-12) << "point " << q.id << " inside wedge of " << p.id;
      }
    }
  }
}

TEST(MaximalWedges, BucketedMatchesFullSort) {
  for (const auto& ps : corpus(200, 6, 4)) {
    for (const auto& p : ps) {
      auto a = maximal_wedges(ps, p.id);
      auto b = maximal_wedges_bucketed(ps, p.id);
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].first, b[i].first);
        EXPECT_EQ(a[i].last, b[i].last);
        EXPECT_NEAR(a[i].size(), b[i].size(), 1e-12);
      }
    }
  }
}

TEST(WedgeToIntervals, DirectFormula) {
  MaximalWedge w;
  w.apex = 0;
  w.interval = AngleInterval::from_length(kHalfPi, 3 * kHalfPi, true);
  auto iv = wedge_to_intervals(w);
  ASSERT_EQ(iv.size(), 4u);
  EXPECT_EQ(iv[0].quadrant_class, 0);
  EXPECT_NEAR(iv[0].interval.start(), kHalfPi, 1e-15);
  EXPECT_NEAR(iv[0].interval.end(), 3 * kHalfPi, 1e-15);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(iv[k].interval.start(), canonicalize_angle(kHalfPi - k * kHalfPi), 1e-15);
}

TEST(WedgeToIntervals, RightAngleWedgeDropped) {
  MaximalWedge w;
  w.apex = 0;
  w.interval = AngleInterval::from_length(0.4, kHalfPi, true);
  EXPECT_TRUE(wedge_to_intervals(w).empty());
}

TEST(WedgeToIntervals, MidpointIsStaircaseVertex) {
  auto ps = random_set(60, 5);
  for (const auto& p : ps)
    for (const auto& w : maximal_wedges(ps, p.id))
      for (const auto& vi : wedge_to_intervals(w)) {
        auto s = staircase(ps, vi.interval.midpoint(), vi.quadrant_class);
        EXPECT_NE(std::find(s.vertices.begin(), s.vertices.end(), p.id), s.vertices.end());
      }
}

TEST(VertexTable, Square) {
  auto t = build_vertex_table(square());
  EXPECT_EQ(t.intervals.size(), 16u);
  EXPECT_EQ(t.events.size(), 32u);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(t.intervals_in_class(k), 4u);
  for (double th : {0.1, 0.7, 1.3, 2.9, 4.4})
    for (int k = 0; k < 4; ++k) EXPECT_EQ(t.slice(th, k), sorted(staircase(square(), th, k).vertices));
}

TEST(VertexTable, TriangleAtZero) {
  auto t = build_vertex_table(triangle());
  EXPECT_EQ(t.slice(1e-6, 0), (std::vector<int>{1, 2}));
}

TEST(VertexTable, SliceMatchesBruteForce) {
  auto ps = random_set(200, 8);
  auto t = build_vertex_table(ps);
  SplitMix64 r(3);
  for (int i = 0; i < 50; ++i) {
    const double th = r.uniform() * kTwoPi;
    auto brute = oracle::vertex_set_brute(ps, th);
    for (int k = 0; k < 4; ++k) EXPECT_EQ(t.slice(th, k), brute[static_cast<std::size_t>(k)]);
  }
}

TEST(VertexTable, FastMatchesReference) {
  for (std::size_t n : {10, 100, 600})
    for (const auto& ps : corpus(n, 6, n)) {
      auto a = build_vertex_table(ps), b = build_vertex_table_reference(ps);
      ASSERT_EQ(a.events.size(), b.events.size());
      for (std::size_t i = 0; i < a.events.size(); ++i) {
        EXPECT_EQ(a.events[i].point, b.events[i].point);
        EXPECT_EQ(a.events[i].quadrant_class, b.events[i].quadrant_class);
        EXPECT_EQ(a.events[i].kind, b.events[i].kind);
        EXPECT_NEAR(a.events[i].angle, b.events[i].angle, 1e-12);
      }
    }
}

TEST(VertexTable, CountsSortedAndAlternating) {
  for (const auto& ps : corpus(120, 10, 6)) {
    auto t = build_vertex_table(ps);
    const std::size_t n = ps.size();
    EXPECT_LE(t.events.size(), 12 * n);
    for (int k = 0; k < 4; ++k) EXPECT_LE(t.intervals_in_class(k), 3 * n);
    for (std::size_t i = 0; i + 1 < t.events.size(); ++i) EXPECT_LE(t.events[i].angle, t.events[i + 1].angle + kAngleTieTol);
    std::map<std::pair<int, int>, std::vector<VertexEventKind>> seq;
    for (const auto& e : t.events) seq[{e.point, e.quadrant_class}].push_back(e.kind);
    for (auto& [key, kinds] : seq) {
      // Around the circle, kinds alternate (starting anywhere).
      for (std::size_t i = 0; i < kinds.size(); ++i) EXPECT_NE(kinds[i], kinds[(i + 1) % kinds.size()]);
    }
  }
}

TEST(VertexTable, TiesDeletionFirst) {
  std::vector<VertexEvent> ev = {{1.0, VertexEventKind::Insertion, 3, 0}, {1.0 + 1e-13, VertexEventKind::Deletion, 5, 1},
                                 {1.0, VertexEventKind::Deletion, 2, 0}};
  auto b = sort_and_batch(ev, kAngleTieTol, [](const VertexEvent& e) {
    return std::make_tuple(e.kind == VertexEventKind::Deletion ? 0 : 1, e.point, e.quadrant_class);
  });
  EXPECT_EQ(ev[0].point, 2);
  EXPECT_EQ(ev[1].point, 5);
  EXPECT_EQ(ev[2].point, 3);
  EXPECT_EQ(b[0], b[2]);
}

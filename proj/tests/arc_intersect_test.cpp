#include <gtest/gtest.h>

#include "support.hpp"

using namespace orthohull;
using namespace testing_support;

namespace {

ExtremalArc make_arc(int u, int v, double start, double len) {
  ExtremalArc a;
  a.id = 0;
  a.u = u;
  a.v = v;
  a.phi = AngleInterval::from_length(start, len);
  return a;
}

bool on_some_piece(const std::vector<MonotonePiece>& pieces, Vec2 q) {
  for (const auto& p : pieces)
    if (q.x >= p.x0 - 1e-12 && q.x <= p.x1 + 1e-12 && std::abs(detail::piece_y(p, q.x) - q.y) <= 1e-7) return true;
  return false;
}

}  // namespace

TEST(MonotoneSplit, QuarterArcOnePiece) {
  auto ps = PointSet::validated({{0, 0}, {2, 0}, {1, 5}});
  auto pieces = monotone_split(ps, make_arc(0, 1, 0.1, 0.5));
  EXPECT_EQ(pieces.size(), 1u);
}

TEST(MonotoneSplit, SemicircleAcrossTangentTwoPieces) {
  auto ps = PointSet::validated({{0, 0}, {2, 0}, {1, 5}});
  auto pieces = monotone_split(ps, make_arc(0, 1, 7 * kPi / 4, kHalfPi));
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_NE(pieces[0].upper, pieces[1].upper);
}

TEST(MonotoneSplit, PiecesCoverArc) {
  for (const auto& ps : corpus(50, 5, 20)) {
    auto ch = trace_arcs(ps, build_vertex_table(ps));
    for (const auto& a : ch.arcs) {
      auto pieces = monotone_split(ps, a);
      ASSERT_LE(pieces.size(), 3u);
      for (const auto& p : pieces) EXPECT_LE(p.x0, p.x1);
      for (int s = 0; s < 50; ++s) EXPECT_TRUE(on_some_piece(pieces, arc_point(ps, a, s / 49.0)));
    }
  }
}

TEST(IntersectingLinkPairs, EmptyRecords) { EXPECT_TRUE(intersecting_link_pairs({}).empty()); }

TEST(SweepIntersections, SmallFixturesMatchOracle) {
  for (const auto& ps : {triangle(), square(), pinwheel()}) {
    auto ch = trace_arcs(ps, build_vertex_table(ps));
    EXPECT_EQ(intersecting_link_pairs(find_intersections(ps, ch)), oracle::arc_pairs_brute(ps, ch));
  }
}

TEST(SweepIntersections, MatchesBruteForceAndOracle) {
  for (std::size_t n : {16, 64, 100, 256})
    for (const auto& ps : corpus(n, n > 100 ? 4 : 20, n)) {
      auto ch = trace_arcs(ps, build_vertex_table(ps));
      auto sweep = find_intersections(ps, ch);
      auto pairs = intersecting_link_pairs(sweep);
      EXPECT_EQ(pairs, intersecting_link_pairs(find_intersections(ps, ch, {true})));
      EXPECT_EQ(pairs, oracle::arc_pairs_brute(ps, ch));
      EXPECT_LE(pairs.size(), 70 * ps.size());
      for (const auto& [key, mult] : pairs) {
        EXPECT_LE(mult, 2);
        const auto& l1 = ch.links[static_cast<std::size_t>(key.first)];
        const auto& l2 = ch.links[static_cast<std::size_t>(key.second)];
        if (l1.edge == l2.edge) EXPECT_LE(mult, 1);
      }
      for (const auto& rec : sweep) {
        for (int id : {rec.arc1, rec.arc2}) {
          const auto c = arc_circle(ps, ch.arcs[static_cast<std::size_t>(id)]);
          EXPECT_LE(std::abs(norm(rec.point - c.center) - c.radius), 1e-9 * std::max(1.0, c.radius));
        }
        EXPECT_LT(rec.link1, rec.link2);
      }
    }
}

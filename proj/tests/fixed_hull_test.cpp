#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace orthohull;
using namespace testing_support;

TEST(Staircase, TriangleClassZero) {
  auto s = staircase(triangle(), 0.0, 0);
  EXPECT_EQ(s.vertices, (std::vector<int>{1, 2}));
}

TEST(Staircase, SquareSingleCorner) {
  auto s = staircase(square(), 0.0, 0);
  EXPECT_EQ(s.vertices, (std::vector<int>{2}));
}

TEST(Staircase, MatchesDominanceFilter) {
  auto ps = random_set(10, 77);
  EXPECT_EQ(sorted(staircase(ps, 0.3, 2).vertices), dominance_maxima(ps, 0.3, 2));
  for (const auto& set : corpus(40, 10, 1)) {
    SplitMix64 r(set.size());
    for (int i = 0; i < 20; ++i) {
      const double th = r.uniform() * kTwoPi;
      for (int k = 0; k < 4; ++k) {
        auto s = staircase(set, th, k);
        EXPECT_EQ(sorted(s.vertices), dominance_maxima(set, th, k));
        // x' strictly decreasing and y' strictly increasing in the class frame.
        for (std::size_t j = 0; j + 1 < s.vertices.size(); ++j) {
          const Vec2 a = rotate_frame(set.pos(s.vertices[j]), class_frame(th, k));
          const Vec2 b = rotate_frame(set.pos(s.vertices[j + 1]), class_frame(th, k));
          EXPECT_GT(a.x, b.x);
          EXPECT_LT(a.y, b.y);
        }
      }
    }
  }
}

TEST(HullSnapshot, Examples) {
  EXPECT_NEAR(hull_snapshot(triangle(), 0.0).area, 0.0, 1e-15);
  auto s = hull_snapshot(square(), 0.0);
  EXPECT_NEAR(s.area, 1.0, 1e-15);
  EXPECT_TRUE(s.overlaps.empty());
  EXPECT_NEAR(hull_snapshot(square(), kPi / 4).area, 0.0, 1e-15);
}

TEST(HullSnapshot, PinwheelHasOverlapAtPiOverEight) {
  auto ps = pinwheel();
  auto s = hull_snapshot(ps, kPi / 8);
  ASSERT_FALSE(s.overlaps.empty());
  for (const auto& o : s.overlaps) {
    EXPECT_GT(o.area, 0.0);
    const double phi = class_frame(s.theta, o.quadrant_class);
    const Vec2 d = rotate_frame(o.apex_cd, phi) - rotate_frame(o.apex_ab, phi);
    EXPECT_NEAR(o.area, std::abs(d.x * d.y), 1e-12);
  }
  EXPECT_NEAR(s.area, slab_area(ps, kPi / 8), 1e-12);
}

TEST(AreaAt, Examples) {
  EXPECT_NEAR(area_at(triangle(), 0.0), 0.0, 1e-15);
  EXPECT_NEAR(area_at(square(), 0.0), 1.0, 1e-15);
}

TEST(AreaAt, AgreesWithSlabIntegral) {
  for (std::size_t n : {5, 12, 40, 150}) {
    for (const auto& ps : corpus(n, 8, n)) {
      SplitMix64 r(n);
      for (int i = 0; i < 30; ++i) {
        const double th = r.uniform() * kTwoPi;
        EXPECT_LE(rel_err(area_at(ps, th), slab_area(ps, th)), 1e-10) << "n=" << n << " theta=" << th;
      }
    }
  }
}

TEST(AreaAt, AgreesWithMonteCarlo) {
  auto ps = random_set(20, 4);
  auto est = oracle::mc_area(ps, 1.1, 200000, 9);
  EXPECT_LE(std::abs(est.estimate - area_at(ps, 1.1)), 3 * est.std_error + 1e-12);
}

TEST(AreaAt, PeriodicAndBoundedByConvexHull) {
  for (const auto& ps : corpus(30, 10, 2)) {
    const double hull = polygon_area(ps, convex_hull(ps));
    SplitMix64 r(ps.size() + 1);
    for (int i = 0; i < 64; ++i) {
      const double th = r.uniform() * kTwoPi;
      const double a = area_at(ps, th);
      EXPECT_LE(rel_err(a, area_at(ps, th + kHalfPi)), 1e-9);
      EXPECT_GE(a, 0.0);
      EXPECT_LE(a, hull + 1e-12);
    }
  }
}

TEST(Membership, Examples) {
  EXPECT_TRUE(membership(square(), 0.0, {0.5, 0.5}));
  EXPECT_FALSE(membership(square(), 0.0, {1.5, 0.5}));
  EXPECT_FALSE(membership(square(), kPi / 4, {0.25, 0.5}));
  EXPECT_TRUE(membership(square(), kPi / 4, {0.25, 0.25}));
  // Boundary of the cross at pi/4 is inside.
  EXPECT_TRUE(membership(square(), kPi / 4, {0.5, 0.5}));
}

TEST(Membership, PointsInsideAndContainedInConvexHull) {
  for (const auto& ps : corpus(25, 6, 3)) {
    const auto hull = convex_hull(ps);
    auto in_hull = [&](Vec2 q) {
      for (std::size_t i = 0; i < hull.size(); ++i) {
        const Vec2 a = ps.pos(hull[i]), b = ps.pos(hull[(i + 1) % hull.size()]);
        if (cross(b - a, q - a) < -1e-12) return false;
      }
      return true;
    };
    SplitMix64 r(ps.size() * 3);
    for (int t = 0; t < 5; ++t) {
      const double th = r.uniform() * kTwoPi;
      for (const auto& p : ps) EXPECT_TRUE(membership(ps, th, p.pos()));
      for (int i = 0; i < 1000; ++i) {
        const Vec2 q{r.uniform() * 1.2 - 0.1, r.uniform() * 1.2 - 0.1};
        if (membership(ps, th, q)) EXPECT_TRUE(in_hull(q));
      }
    }
  }
}

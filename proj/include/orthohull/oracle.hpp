#pragma once

// Brute-force references: dense angular minimum, Monte-Carlo area, vertex
// sets by pairwise dominance, link pairs by pairwise arc tests, and the
// overlap table from all arc pairs.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "area_sweep.hpp"
#include "fixed_hull.hpp"
#include "geometry.hpp"

namespace orthohull {

/// Counter-based generator (SplitMix64).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

namespace oracle {

struct GridResult {
  int samples = 0;
  double best_theta = 0.0;
  double best_area = 0.0;
  double refined_theta = 0.0;
  double refined_area = 0.0;
};

/// area_at on a uniform grid over [0, pi/2), then ternary refinement around
/// the three best samples down to 1e-10 radians.
inline GridResult grid_min_area(const PointSet& ps, int samples) {
  if (samples < 4) throw InvalidArgument("grid needs at least 4 samples");
  const double step = kHalfPi / samples;
  std::vector<std::pair<double, int>> vals(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) vals[static_cast<std::size_t>(i)] = {area_at(ps, i * step), i};
  std::partial_sort(vals.begin(), vals.begin() + 3, vals.end());
  GridResult g;
  g.samples = samples;
  g.best_area = vals[0].first;
  g.best_theta = vals[0].second * step;
  g.refined_area = g.best_area;
  g.refined_theta = g.best_theta;
  for (int r = 0; r < 3; ++r) {
    double lo = (vals[static_cast<std::size_t>(r)].second - 1) * step;
    double hi = (vals[static_cast<std::size_t>(r)].second + 1) * step;
    while (hi - lo > 1e-10) {
      const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (area_at(ps, m1) <= area_at(ps, m2))
        hi = m2;
      else
        lo = m1;
    }
    const double t = 0.5 * (lo + hi);
    const double a = area_at(ps, t);
    if (a < g.refined_area) {
      g.refined_area = a;
      g.refined_theta = canonicalize_angle(t);
    }
  }
  return g;
}

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Rejection sampling of RCH_theta membership over the bounding box of P.
inline McEstimate mc_area(const PointSet& ps, double theta, int samples, std::uint64_t seed) {
  if (samples < 1000) throw InvalidArgument("Monte-Carlo needs at least 1000 samples");
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& p : ps) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  SplitMix64 rng(seed);
  int hit = 0;
  for (int i = 0; i < samples; ++i) {
    const Vec2 q{x0 + (x1 - x0) * rng.uniform(), y0 + (y1 - y0) * rng.uniform()};
    if (membership(ps, theta, q)) ++hit;
  }
  const double box = (x1 - x0) * (y1 - y0);
  const double p = static_cast<double>(hit) / samples;
  return {box * p, box * std::sqrt(p * (1.0 - p) / samples)};
}

/// Per class, the points that are apexes of an empty open quadrant.
inline std::array<std::vector<int>, 4> vertex_set_brute(const PointSet& ps, double theta) {
  std::array<std::vector<int>, 4> out;
  for (int k = 0; k < 4; ++k) {
    const double phi = theta + k * kHalfPi;
    std::vector<Vec2> f;
    for (const auto& p : ps) f.push_back(rotate_frame(p.pos(), phi));
    for (std::size_t i = 0; i < f.size(); ++i) {
      bool free = true;
      for (std::size_t j = 0; j < f.size() && free; ++j)
        if (j != i && f[j].x > f[i].x && f[j].y > f[i].y) free = false;
      if (free) out[static_cast<std::size_t>(k)].push_back(static_cast<int>(i));
    }
  }
  return out;
}

/// Link pairs whose arcs meet away from a shared link endpoint, by testing
/// every pair of arcs. A point q lies on arc (u, v) traced over [s, s + L)
/// iff the psi whose corner is q falls in that range.
inline std::map<std::pair<int, int>, int> arc_pairs_brute(const PointSet& ps, const ArcChain& chain) {
  const double tol = 1e-9 * ps.scale();
  auto psi_of = [&](const ExtremalArc& a, Vec2 q) {
    const Vec2 u = ps.pos(a.u), v = ps.pos(a.v);
    const Vec2 m = 0.5 * (u + v);
    return 0.5 * (std::atan2(q.y - m.y, q.x - m.x) + std::atan2(v.y - u.y, v.x - u.x));
  };
  auto on_arc = [&](const ExtremalArc& a, Vec2 q) {
    // The corner angle is known mod pi.
    const double p = psi_of(a, q);
    for (double t : {p, p + kPi}) {
      double d = t - a.start();
      d -= kTwoPi * std::floor(d / kTwoPi);
      if (d > kTwoPi - 5e-11) d -= kTwoPi;
      if (d >= -5e-11 && d <= a.length() + 5e-11) return true;
    }
    return false;
  };
  std::map<std::pair<int, int>, std::vector<Vec2>> pts;
  for (std::size_t i = 0; i < chain.arcs.size(); ++i) {
    const auto& a = chain.arcs[i];
    const Vec2 ca = 0.5 * (ps.pos(a.u) + ps.pos(a.v));
    const double ra = 0.5 * norm(ps.pos(a.v) - ps.pos(a.u));
    for (std::size_t j = i + 1; j < chain.arcs.size(); ++j) {
      const auto& b = chain.arcs[j];
      if (a.link == b.link) continue;
      const Vec2 cb = 0.5 * (ps.pos(b.u) + ps.pos(b.v));
      const double rb = 0.5 * norm(ps.pos(b.v) - ps.pos(b.u));
      for (const Vec2 q : circle_circle(ca, ra, cb, rb)) {
        if (!on_arc(a, q) || !on_arc(b, q)) continue;
        const auto& la = chain.links[static_cast<std::size_t>(a.link)];
        const auto& lb = chain.links[static_cast<std::size_t>(b.link)];
        bool shared = false;
        for (int p : {la.start_point, la.end_point})
          if ((p == lb.start_point || p == lb.end_point) && norm(q - ps.pos(p)) <= tol) shared = true;
        if (shared) continue;
        auto& v = pts[{std::min(a.link, b.link), std::max(a.link, b.link)}];
        bool dup = false;
        for (const auto& x : v) dup = dup || norm(x - q) <= tol;
        if (!dup) v.push_back(q);
      }
    }
  }
  std::map<std::pair<int, int>, int> out;
  for (const auto& [k, v] : pts) out[k] = static_cast<int>(v.size());
  return out;
}

/// Overlap table from every pair of arcs, ignoring links entirely.
inline OverlapTable overlap_table_brute(const PointSet& ps, const ArcChain& chain) {
  std::vector<CanonicalOverlap> canon;
  for (std::size_t i = 0; i < chain.arcs.size(); ++i)
    for (std::size_t j = i; j < chain.arcs.size(); ++j)
      if (auto iv = admits_overlap(ps, chain.arcs[i], chain.arcs[j]))
        canon.push_back({static_cast<int>(i), static_cast<int>(j), *iv});
  return expand_overlaps(chain, std::move(canon));
}

}  // namespace oracle
}  // namespace orthohull

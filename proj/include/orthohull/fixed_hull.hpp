#pragma once

// Rectilinear convex hull at one fixed orientation: staircases, overlapping
// regions and the exact area.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "geometry.hpp"

namespace orthohull {

/// Rotation of the class-k frame at sweep angle theta.
inline double class_frame(double theta, int k) { return theta + k * kHalfPi; }

struct StaircaseVertexList {
  int quadrant_class = 0;
  std::vector<int> vertices;  // rightmost first, topmost last
};

struct OverlapRegion {
  int quadrant_class = 0;  // class of the (a, b) quadrant, 0 or 1; (c, d) is class + 2
  int a = -1, b = -1, c = -1, d = -1;
  Vec2 apex_ab{};  // world coordinates
  Vec2 apex_cd{};
  double area = 0.0;

  std::array<int, 5> key() const { return {quadrant_class, a, b, c, d}; }
};

struct HullSnapshot {
  double theta = 0.0;
  std::array<StaircaseVertexList, 4> staircases;
  std::vector<OverlapRegion> overlaps;
  double polygon_area = 0.0;
  double triangle_area = 0.0;
  double overlap_area = 0.0;
  double area = 0.0;

  /// V^c: the four staircases concatenated in counter-clockwise order.
  std::vector<int> vertex_cycle() const {
    std::vector<int> out;
    for (const auto& s : staircases) out.insert(out.end(), s.vertices.begin(), s.vertices.end());
    return out;
  }
};

namespace detail {

inline std::vector<Vec2> frame_coords(const PointSet& ps, double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  std::vector<Vec2> f(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Vec2 p = ps[i].pos();
    f[i] = {p.x * c + p.y * s, -p.x * s + p.y * c};
  }
  return f;
}

inline std::vector<int> maxima(const std::vector<Vec2>& f) {
  std::vector<int> idx(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return f[a].x != f[b].x ? f[a].x > f[b].x : f[a].y > f[b].y;
  });
  std::vector<int> out;
  double best = -INFINITY;
  for (int i : idx) {
    if (f[i].y > best) {
      out.push_back(i);
      best = f[i].y;
    }
  }
  return out;
}

}  // namespace detail

inline StaircaseVertexList staircase(const PointSet& ps, double theta, int k) {
  return {k, detail::maxima(detail::frame_coords(ps, class_frame(theta, k)))};
}

/// Overlaps between consecutive pairs of the class-k and class-(k+2)
/// staircases. `f` holds coordinates in the class-k frame at angle phi.
inline std::vector<OverlapRegion> opposite_overlaps(const std::vector<int>& s0, const std::vector<int>& s2,
                                                    const std::vector<Vec2>& f, int k, double phi) {
  std::vector<OverlapRegion> out;
  if (s0.size() < 2 || s2.size() < 2) return out;
  const std::size_t m2 = s2.size() - 1;
  // Walk class-k corners from the topmost end; both bounds of the matching
  // range of opposite corners then only move forward.
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = s0.size() - 1; i-- > 0;) {
    const int u = s0[i], v = s0[i + 1];
    const double X = f[v].x, Y = f[u].y;
    while (lo < m2 && !(f[s2[lo + 1]].x > X)) ++lo;
    hi = std::max(hi, lo);
    while (hi < m2 && f[s2[hi]].y > Y) ++hi;
    for (std::size_t j = lo; j < hi; ++j) {
      const int s = s2[j], t = s2[j + 1];
      const double w = f[t].x - X, h = f[s].y - Y;
      if (!(w > 0.0 && h > 0.0)) continue;
      OverlapRegion r;
      r.quadrant_class = k;
      r.a = u;
      r.b = v;
      r.c = s;
      r.d = t;
      r.apex_ab = unrotate_frame({X, Y}, phi);
      r.apex_cd = unrotate_frame({f[t].x, f[s].y}, phi);
      r.area = w * h;
      out.push_back(r);
    }
  }
  return out;
}

inline HullSnapshot hull_snapshot(const PointSet& ps, double theta) {
  HullSnapshot snap;
  snap.theta = theta;
  std::array<std::vector<Vec2>, 4> frames;
  for (int k = 0; k < 4; ++k) {
    frames[k] = detail::frame_coords(ps, class_frame(theta, k));
    snap.staircases[k] = {k, detail::maxima(frames[k])};
  }

  const Vec2 o = ps.center();
  const auto cyc = snap.vertex_cycle();
  double poly = 0.0;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    poly += cross(ps.pos(cyc[i]) - o, ps.pos(cyc[(i + 1) % cyc.size()]) - o);
  snap.polygon_area = 0.5 * poly;

  double tri = 0.0;
  for (int k = 0; k < 4; ++k) {
    const auto& s = snap.staircases[k].vertices;
    const auto& f = frames[k];
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      tri += 0.5 * std::abs((f[s[i + 1]].x - f[s[i]].x) * (f[s[i + 1]].y - f[s[i]].y));
  }
  snap.triangle_area = tri;

  for (int k = 0; k < 2; ++k) {
    auto o2 = opposite_overlaps(snap.staircases[k].vertices, snap.staircases[k + 2].vertices, frames[k], k,
                                class_frame(theta, k));
    snap.overlaps.insert(snap.overlaps.end(), o2.begin(), o2.end());
  }
  double ov = 0.0;
  for (const auto& r : snap.overlaps) ov += r.area;
  snap.overlap_area = ov;
  snap.area = snap.polygon_area - snap.triangle_area + snap.overlap_area;
  return snap;
}

inline double area_at(const PointSet& ps, double theta) { return hull_snapshot(ps, theta).area; }

/// q lies in RCH_theta iff each of the four closed quadrants at q holds a point of P.
inline bool membership(const PointSet& ps, double theta, Vec2 q) {
  const double tol = 1e-12 * ps.scale();
  for (int k = 0; k < 4; ++k) {
    const double phi = class_frame(theta, k);
    const Vec2 fq = rotate_frame(q, phi);
    bool hit = false;
    for (const auto& p : ps) {
      const Vec2 fp = rotate_frame(p.pos(), phi);
      if (fp.x >= fq.x - tol && fp.y >= fq.y - tol) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace orthohull

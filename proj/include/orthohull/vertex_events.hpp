#pragma once

// Maximal P-free wedges and the vertex events table.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <tuple>
#include <vector>

#include "geometry.hpp"

namespace orthohull {

struct MaximalWedge {
  int apex = -1;
  AngleInterval interval;  // ray directions, counter-clockwise from `first`
  int first = -1;          // point on the start ray
  int last = -1;           // point on the end ray

  double size() const { return interval.length(); }
};

struct VertexInterval {
  int point = -1;
  int quadrant_class = 0;
  AngleInterval interval;  // closed
};

enum class VertexEventKind { Insertion, Deletion };

struct VertexEvent {
  double angle = 0.0;
  VertexEventKind kind = VertexEventKind::Insertion;
  int point = -1;
  int quadrant_class = 0;
};

/// Stable order for events: cluster angles within `tol`, then deletions
/// before insertions, then point id, then class. Returns the cluster index of
/// each sorted event.
template <class E, class KeyFn>
std::vector<std::size_t> sort_and_batch(std::vector<E>& ev, double tol, KeyFn key) {
  std::sort(ev.begin(), ev.end(), [](const E& a, const E& b) { return a.angle < b.angle; });
  std::vector<std::size_t> cluster(ev.size());
  std::size_t c = 0;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (i > 0 && ev[i].angle - ev[i - 1].angle > tol) ++c;
    cluster[i] = c;
  }
  // Order within each cluster.
  std::size_t b = 0;
  while (b < ev.size()) {
    std::size_t e = b;
    while (e < ev.size() && cluster[e] == cluster[b]) ++e;
    std::stable_sort(ev.begin() + static_cast<std::ptrdiff_t>(b), ev.begin() + static_cast<std::ptrdiff_t>(e),
                     [&](const E& x, const E& y) { return key(x) < key(y); });
    b = e;
  }
  return cluster;
}

struct VertexEventTable {
  std::vector<VertexInterval> intervals;
  std::vector<VertexEvent> events;  // sorted by angle, ties batched
  std::vector<std::size_t> batch;   // cluster index per event
  std::size_t n = 0;

  /// Ids of points whose class-k interval contains theta, in increasing order.
  std::vector<int> slice(double theta, int k) const {
    std::vector<int> out;
    for (const auto& vi : intervals)
      if (vi.quadrant_class == k && vi.interval.contains(theta)) out.push_back(vi.point);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::size_t intervals_in_class(int k) const {
    return static_cast<std::size_t>(std::count_if(intervals.begin(), intervals.end(),
                                                  [k](const VertexInterval& v) { return v.quadrant_class == k; }));
  }
};

inline constexpr double kWedgeThreshold = kHalfPi + kAngleTieTol;

namespace detail {

inline std::vector<MaximalWedge> gaps_to_wedges(int apex, std::vector<std::pair<double, int>>& dirs) {
  std::vector<MaximalWedge> out;
  std::sort(dirs.begin(), dirs.end());
  const std::size_t m = dirs.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = dirs[i];
    const auto& b = dirs[(i + 1) % m];
    double gap = b.first - a.first;
    if (i + 1 == m) gap += kTwoPi;
    if (gap > kWedgeThreshold) {
      MaximalWedge w;
      w.apex = apex;
      w.interval = AngleInterval::from_length(a.first, gap, true);
      w.first = a.second;
      w.last = b.second;
      out.push_back(w);
    }
  }
  if (out.size() > 3) throw InternalError("point has more than three wedges wider than pi/2");
  return out;
}

/// Monotone stand-in for atan2 in [0, 4).
inline double pseudo_angle(double dx, double dy) {
  const double p = dy / (std::abs(dx) + std::abs(dy));
  return dx < 0.0 ? 2.0 - p : (dy < 0.0 ? 4.0 + p : p);
}

}  // namespace detail

/// Maximal P-free wedges at p wider than pi/2, from a full angular sort.
inline std::vector<MaximalWedge> maximal_wedges(const PointSet& ps, int p) {
  std::vector<std::pair<double, int>> dirs;
  dirs.reserve(ps.size());
  const Vec2 o = ps.pos(p);
  for (const auto& q : ps) {
    if (q.id == p) continue;
    dirs.emplace_back(canonicalize_angle(std::atan2(q.y - o.y, q.x - o.x)), q.id);
  }
  return detail::gaps_to_wedges(p, dirs);
}

/// One closed theta-interval per quadrant class; empty when the wedge is
/// not wider than pi/2.
inline std::vector<VertexInterval> wedge_to_intervals(const MaximalWedge& w) {
  std::vector<VertexInterval> out;
  const double len = w.size() - kHalfPi;
  if (!(len > kAngleTieTol)) return out;
  for (int k = 0; k < 4; ++k)
    out.push_back({w.apex, k, AngleInterval::from_length(w.interval.start() - k * kHalfPi, len, true)});
  return out;
}

/// Points that could own a wedge wider than pi/2. Such a wedge contains one
/// of eight aligned cones of width pi/4, so a point whose eight cones all hold
/// another point (by a margin) is discarded.
inline std::vector<int> wedge_candidates(const PointSet& ps) {
  const std::size_t n = ps.size();
  const double eps = 1e-9 * ps.scale();
  std::vector<char> keep(n, 0);
  std::vector<std::pair<double, double>> s(n);
  std::vector<int> idx(n);
  const double sn = std::sin(kPi / 4);
  for (int j = 0; j < 8; ++j) {
    const Vec2 d1 = unit(j * kPi / 4), d2 = unit((j + 1) * kPi / 4);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 p = ps.pos(static_cast<int>(i));
      s[i] = {cross(p, d2) / sn, cross(d1, p) / sn};
      idx[i] = static_cast<int>(i);
    }
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return s[a].first > s[b].first; });
    double best = -INFINITY;
    std::size_t ptr = 0;
    for (int i : idx) {
      while (ptr < n && s[idx[ptr]].first > s[i].first + eps) best = std::max(best, s[idx[ptr++]].second);
      if (!(best > s[i].second + eps)) keep[i] = 1;
    }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i)
    if (keep[i]) out.push_back(static_cast<int>(i));
  return out;
}

/// Same result as maximal_wedges, but only the extreme directions of 64
/// pseudo-angle buckets go through atan2: a gap wider than any bucket has
/// its two rays at bucket extremes.
inline std::vector<MaximalWedge> maximal_wedges_bucketed(const PointSet& ps, int p) {
  constexpr int kBuckets = 64;
  std::array<double, kBuckets> lo, hi;
  std::array<int, kBuckets> lo_id, hi_id;
  lo.fill(INFINITY);
  hi.fill(-INFINITY);
  const Vec2 o = ps.pos(p);
  for (const auto& q : ps) {
    if (q.id == p) continue;
    const double a = detail::pseudo_angle(q.x - o.x, q.y - o.y);
    int b = static_cast<int>(a * (kBuckets / 4.0));
    b = std::clamp(b, 0, kBuckets - 1);
    if (a < lo[b]) {
      lo[b] = a;
      lo_id[b] = q.id;
    }
    if (a > hi[b]) {
      hi[b] = a;
      hi_id[b] = q.id;
    }
  }
  std::vector<std::pair<double, int>> dirs;
  for (int b = 0; b < kBuckets; ++b) {
    if (lo[b] == INFINITY) continue;
    for (int id : {lo_id[b], hi_id[b]}) {
      const Vec2 q = ps.pos(id);
      dirs.emplace_back(canonicalize_angle(std::atan2(q.y - o.y, q.x - o.x)), id);
    }
    if (lo_id[b] == hi_id[b]) dirs.pop_back();
  }
  return detail::gaps_to_wedges(p, dirs);
}

inline VertexEventTable table_from_intervals(std::vector<VertexInterval> intervals, std::size_t n) {
  VertexEventTable t;
  t.n = n;
  std::sort(intervals.begin(), intervals.end(), [](const VertexInterval& a, const VertexInterval& b) {
    return std::tie(a.point, a.quadrant_class) < std::tie(b.point, b.quadrant_class) ||
           (std::tie(a.point, a.quadrant_class) == std::tie(b.point, b.quadrant_class) &&
            a.interval.start() < b.interval.start());
  });
  t.intervals = std::move(intervals);
  for (const auto& vi : t.intervals) {
    t.events.push_back({vi.interval.start(), VertexEventKind::Insertion, vi.point, vi.quadrant_class});
    t.events.push_back({vi.interval.end(), VertexEventKind::Deletion, vi.point, vi.quadrant_class});
  }
  t.batch = sort_and_batch(t.events, kAngleTieTol, [](const VertexEvent& e) {
    return std::make_tuple(e.kind == VertexEventKind::Deletion ? 0 : 1, e.point, e.quadrant_class);
  });
  return t;
}

/// Vertex events table by per-point angular sorting over every point.
/// Quadratic; kept as the reference construction.
inline VertexEventTable build_vertex_table_reference(const PointSet& ps) {
  std::vector<VertexInterval> iv;
  for (const auto& p : ps)
    for (const auto& w : maximal_wedges(ps, p.id))
      for (const auto& vi : wedge_to_intervals(w)) iv.push_back(vi);
  return table_from_intervals(std::move(iv), ps.size());
}

inline VertexEventTable build_vertex_table(const PointSet& ps) {
  std::vector<VertexInterval> iv;
  for (int p : wedge_candidates(ps))
    for (const auto& w : maximal_wedges_bucketed(ps, p))
      for (const auto& vi : wedge_to_intervals(w)) iv.push_back(vi);
  return table_from_intervals(std::move(iv), ps.size());
}

}  // namespace orthohull

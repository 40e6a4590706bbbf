#pragma once

// Overlapping intervals: per candidate link pair, merge the angle sequences
// to find arc pairs that face each other, keep those whose quadrants really
// overlap, and expand the result to all four quadrant classes.

#include <algorithm>
#include <array>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "arc_intersect.hpp"

namespace orthohull {

/// Overlap of arc1 (traced at psi) with arc2 (traced at psi + pi).
struct CanonicalOverlap {
  int arc1 = -1, arc2 = -1;
  AngleInterval psi;  // closed
};

struct OverlapInterval {
  int id = -1;
  AngleInterval interval;  // theta, closed
  int arc1 = -1, arc2 = -1;
  int quadrant_class = 0;  // class of the (a, b) quadrant: 0 or 1
  int a = -1, b = -1, c = -1, d = -1;

  std::array<int, 5> key() const { return {quadrant_class, a, b, c, d}; }
};

enum class OverlapEventKind { Overlap, Release };

struct OverlapEvent {
  double angle = 0.0;
  OverlapEventKind kind = OverlapEventKind::Overlap;
  int interval = -1;
};

struct OverlapTable {
  std::vector<CanonicalOverlap> canonical;
  std::vector<OverlapInterval> intervals;  // sorted by start angle
  std::vector<OverlapEvent> events;        // sorted by angle

  std::vector<std::array<int, 5>> active_keys(double theta) const {
    std::vector<std::array<int, 5>> out;
    for (const auto& o : intervals)
      if (o.interval.contains(theta)) out.push_back(o.key());
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Arc pairs of l1 x l2 with a nonempty facing interval that pass the
/// overlap test. Linear in the two link sizes (plus output).
inline std::vector<CanonicalOverlap> merge_link_pair(const PointSet& ps, const ArcChain& chain, const Link& l1,
                                                     const Link& l2) {
  std::set<std::pair<int, int>> seen;
  std::vector<CanonicalOverlap> out;
  const auto& g1 = l1.angles;
  const auto& g2 = l2.angles;
  const std::size_t n1 = l1.arcs.size(), n2 = l2.arcs.size();
  for (double lift : {-2.0 * kTwoPi, -kTwoPi, 0.0, kTwoPi}) {
    const double off = kPi + lift;
    // Quick reject when the lifted spans do not meet.
    if (g2.back() + off < g1.front() || g2.front() + off > g1.back()) continue;
    std::size_t i = 0, j = 0;
    while (i < n1 && j < n2) {
      const double lo = std::max(g1[i], g2[j] + off);
      const double hi = std::min(g1[i + 1], g2[j + 1] + off);
      if (hi > lo - kAngleTieTol) {
        const int a1 = l1.arcs[i], a2 = l2.arcs[j];
        if (a1 != a2 && seen.insert({a1, a2}).second) {
          if (auto iv = admits_overlap(ps, chain.arcs[static_cast<std::size_t>(a1)],
                                       chain.arcs[static_cast<std::size_t>(a2)]))
            out.push_back({a1, a2, *iv});
        }
      }
      // Advance whichever sequence leads.
      if (g1[i + 1] < g2[j + 1] + off)
        ++i;
      else
        ++j;
    }
  }
  return out;
}

/// Expands canonical overlaps to theta-space: for arc1 in class k the
/// interval is psi - k*pi/2. Records are normalized so that (a, b) belongs
/// to class 0 or 1.
inline OverlapTable expand_overlaps(const ArcChain& chain, std::vector<CanonicalOverlap> canon) {
  OverlapTable t;
  std::sort(canon.begin(), canon.end(), [](const CanonicalOverlap& x, const CanonicalOverlap& y) {
    return std::tie(x.arc1, x.arc2) < std::tie(y.arc1, y.arc2);
  });
  t.canonical = std::move(canon);
  for (const auto& co : t.canonical) {
    const auto& A1 = chain.arcs[static_cast<std::size_t>(co.arc1)];
    const auto& A2 = chain.arcs[static_cast<std::size_t>(co.arc2)];
    for (int k = 0; k < 4; ++k) {
      OverlapInterval o;
      o.interval = interval_shift(co.psi, -k * kHalfPi);
      const bool swap = k >= 2;
      const auto& F = swap ? A2 : A1;
      const auto& S = swap ? A1 : A2;
      o.arc1 = F.id;
      o.arc2 = S.id;
      o.quadrant_class = swap ? k - 2 : k;
      o.a = F.u;
      o.b = F.v;
      o.c = S.u;
      o.d = S.v;
      t.intervals.push_back(o);
    }
  }
  std::sort(t.intervals.begin(), t.intervals.end(), [](const OverlapInterval& x, const OverlapInterval& y) {
    if (x.interval.start() != y.interval.start()) return x.interval.start() < y.interval.start();
    return x.key() < y.key();
  });
  for (std::size_t i = 0; i < t.intervals.size(); ++i) {
    auto& o = t.intervals[i];
    o.id = static_cast<int>(i);
    t.events.push_back({o.interval.start(), OverlapEventKind::Overlap, o.id});
    t.events.push_back({o.interval.end(), OverlapEventKind::Release, o.id});
  }
  std::stable_sort(t.events.begin(), t.events.end(),
                   [](const OverlapEvent& x, const OverlapEvent& y) { return x.angle < y.angle; });
  return t;
}

inline OverlapTable build_overlap_table(const PointSet& ps, const ArcChain& chain,
                                        const std::vector<std::pair<int, int>>& pairs) {
  std::vector<CanonicalOverlap> canon;
  std::set<std::pair<int, int>> seen;
  for (auto [x, y] : pairs) {
    for (const auto& co : merge_link_pair(ps, chain, chain.links[static_cast<std::size_t>(x)],
                                          chain.links[static_cast<std::size_t>(y)])) {
      // One orientation per unordered arc pair.
      const auto key = std::minmax(co.arc1, co.arc2);
      if (seen.insert(key).second) canon.push_back(co);
    }
  }
  return expand_overlaps(chain, std::move(canon));
}

}  // namespace orthohull

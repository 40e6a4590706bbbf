#pragma once

// Intersections between links: x-monotone splitting of extremal arcs and a
// Bentley-Ottmann sweep over the pieces, plus the pairwise reference.

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "arc_chain.hpp"

namespace orthohull {

struct MonotonePiece {
  int id = -1;
  int arc = -1;
  int link = -1;
  Vec2 center{};
  double radius = 0.0;
  bool upper = true;     // y >= center.y
  double a0 = 0.0;       // circle-angle sub-range [a0, a1], lifted
  double a1 = 0.0;
  double x0 = 0.0, x1 = 0.0;  // x0 <= x1
  Vec2 p0{}, p1{};            // endpoints at x0 and x1
};

struct IntersectionRecord {
  Vec2 point{};
  int arc1 = -1, arc2 = -1;
  int link1 = -1, link2 = -1;  // link1 < link2
};

struct IntersectOptions {
  bool brute_force = false;
};

namespace detail {

/// Circle-angle range [lo, hi] swept by the arc, lo lifted to [0, 2pi).
inline std::pair<double, double> arc_angle_range(const PointSet& ps, const ExtremalArc& a) {
  const ArcCircle c = arc_circle(ps, a);
  const double lo = canonicalize_angle(c.angle_at(a.start()));
  return {lo, lo + 2.0 * a.length()};
}

inline bool angle_in_range(double ang, double lo, double hi, double eps) {
  double d = ang - lo;
  d -= kTwoPi * std::floor(d / kTwoPi);
  if (d > kTwoPi - eps) d -= kTwoPi;
  return d >= -eps && d <= hi - lo + eps;
}

inline constexpr double kArcAngleEps = 1e-10;

}  // namespace detail

/// Splits an arc at its vertical tangents into at most three x-monotone pieces.
inline std::vector<MonotonePiece> monotone_split(const PointSet& ps, const ExtremalArc& arc) {
  std::vector<MonotonePiece> out;
  const ArcCircle c = arc_circle(ps, arc);
  const auto [lo, hi] = detail::arc_angle_range(ps, arc);
  std::vector<double> cuts{lo};
  for (double m = std::floor(lo / kPi) + 1.0; m * kPi < hi; m += 1.0) cuts.push_back(m * kPi);
  cuts.push_back(hi);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    MonotonePiece p;
    p.arc = arc.id;
    p.link = arc.link;
    p.center = c.center;
    p.radius = c.radius;
    p.a0 = cuts[i];
    p.a1 = cuts[i + 1];
    p.upper = std::sin(0.5 * (p.a0 + p.a1)) > 0.0;
    const Vec2 e0 = c.point_at_angle(p.a0), e1 = c.point_at_angle(p.a1);
    if (e0.x <= e1.x) {
      p.p0 = e0;
      p.p1 = e1;
    } else {
      p.p0 = e1;
      p.p1 = e0;
    }
    p.x0 = p.p0.x;
    p.x1 = p.p1.x;
    out.push_back(p);
  }
  if (out.size() > 3) throw InternalError("arc split into more than three monotone pieces");
  return out;
}

namespace detail {

inline double piece_y(const MonotonePiece& p, double x) {
  if (x <= p.x0) return p.p0.y;
  if (x >= p.x1) return p.p1.y;
  const double dx = x - p.center.x;
  const double s = std::sqrt(std::max(0.0, p.radius * p.radius - dx * dx));
  return p.upper ? p.center.y + s : p.center.y - s;
}

/// Direction angle in [-pi/2, pi/2] of the piece's tangent, moving rightwards.
inline double piece_heading(const MonotonePiece& p, double x) {
  const double y = piece_y(p, x);
  const double ang = std::atan2(y - p.center.y, std::clamp(x, p.x0, p.x1) - p.center.x);
  const Vec2 t = p.upper ? Vec2{std::sin(ang), -std::cos(ang)} : Vec2{-std::sin(ang), std::cos(ang)};
  return std::atan2(t.y, t.x);
}

inline bool on_piece(const MonotonePiece& p, Vec2 q) {
  const double a = std::atan2(q.y - p.center.y, q.x - p.center.x);
  return angle_in_range(a, p.a0, p.a1, kArcAngleEps);
}

/// Accumulates records, deduplicated per link pair by position, and drops
/// contacts at a point of P that ends both links.
class RecordSink {
 public:
  RecordSink(const PointSet& ps, const ArcChain& chain) : ps_(ps), chain_(chain), tol_(1e-9 * ps.scale()) {}

  bool excluded(int l1, int l2, Vec2 q) const {
    const auto& a = chain_.links[static_cast<std::size_t>(l1)];
    const auto& b = chain_.links[static_cast<std::size_t>(l2)];
    for (int p : {a.start_point, a.end_point})
      if ((p == b.start_point || p == b.end_point) && norm(q - ps_.pos(p)) <= tol_) return true;
    return false;
  }

  void add(int arc1, int arc2, Vec2 q) {
    int l1 = chain_.arcs[static_cast<std::size_t>(arc1)].link;
    int l2 = chain_.arcs[static_cast<std::size_t>(arc2)].link;
    if (l1 == l2 || excluded(l1, l2, q)) return;
    if (l1 > l2) {
      std::swap(l1, l2);
      std::swap(arc1, arc2);
    }
    auto& v = by_pair_[{l1, l2}];
    for (int idx : v)
      if (norm(out_[static_cast<std::size_t>(idx)].point - q) <= tol_) return;
    v.push_back(static_cast<int>(out_.size()));
    out_.push_back({q, arc1, arc2, l1, l2});
  }

  std::vector<IntersectionRecord> take() {
    std::sort(out_.begin(), out_.end(), [](const IntersectionRecord& a, const IntersectionRecord& b) {
      if (a.link1 != b.link1) return a.link1 < b.link1;
      if (a.link2 != b.link2) return a.link2 < b.link2;
      return a.point.x != b.point.x ? a.point.x < b.point.x : a.point.y < b.point.y;
    });
    return std::move(out_);
  }

 private:
  const PointSet& ps_;
  const ArcChain& chain_;
  double tol_;
  std::map<std::pair<int, int>, std::vector<int>> by_pair_;
  std::vector<IntersectionRecord> out_;
};

}  // namespace detail

/// Pairwise reference: every pair of arcs from different links.
inline std::vector<IntersectionRecord> brute_force_intersections(const PointSet& ps, const ArcChain& chain) {
  detail::RecordSink sink(ps, chain);
  struct Ref {
    ArcCircle c;
    double lo, hi;
  };
  std::vector<Ref> refs;
  for (const auto& a : chain.arcs) {
    auto [lo, hi] = detail::arc_angle_range(ps, a);
    refs.push_back({arc_circle(ps, a), lo, hi});
  }
  for (std::size_t i = 0; i < chain.arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.arcs.size(); ++j) {
      if (chain.arcs[i].link == chain.arcs[j].link) continue;
      const auto& a = refs[i];
      const auto& b = refs[j];
      if (norm(a.c.center - b.c.center) > a.c.radius + b.c.radius + 1e-9 * ps.scale()) continue;
      for (const Vec2 q : circle_circle(a.c.center, a.c.radius, b.c.center, b.c.radius)) {
        const double ta = std::atan2(q.y - a.c.center.y, q.x - a.c.center.x);
        const double tb = std::atan2(q.y - b.c.center.y, q.x - b.c.center.x);
        if (detail::angle_in_range(ta, a.lo, a.hi, detail::kArcAngleEps) &&
            detail::angle_in_range(tb, b.lo, b.hi, detail::kArcAngleEps))
          sink.add(static_cast<int>(i), static_cast<int>(j), q);
      }
    }
  }
  return sink.take();
}

/// Bentley-Ottmann sweep over the x-monotone pieces of all arcs.
inline std::vector<IntersectionRecord> sweep_intersections(const PointSet& ps, const ArcChain& chain,
                                                           const std::vector<MonotonePiece>& pieces) {
  detail::RecordSink sink(ps, chain);
  const double tolx = 1e-12 * ps.scale();
  const double toly = 1e-10 * ps.scale();

  auto X = std::make_shared<double>(0.0);
  auto less = [&pieces, X, toly](int a, int b) {
    if (a == b) return false;
    const auto& pa = pieces[static_cast<std::size_t>(a)];
    const auto& pb = pieces[static_cast<std::size_t>(b)];
    const double ya = detail::piece_y(pa, *X), yb = detail::piece_y(pb, *X);
    if (std::abs(ya - yb) > toly) return ya < yb;
    const double ha = detail::piece_heading(pa, *X), hb = detail::piece_heading(pb, *X);
    if (ha != hb) return ha < hb;
    return a < b;
  };
  std::set<int, decltype(less)> status(less);
  std::vector<std::set<int, decltype(less)>::iterator> where(pieces.size());
  std::vector<char> active(pieces.size(), 0);

  enum Kind { End = 0, Cross = 1, Start = 2 };
  struct Ev {
    double x;
    int kind;
    int a, b;
    bool operator>(const Ev& o) const { return x != o.x ? x > o.x : kind > o.kind; }
  };
  std::priority_queue<Ev, std::vector<Ev>, std::greater<Ev>> q;
  for (const auto& p : pieces) {
    if (p.x1 - p.x0 <= tolx) {
      q.push({p.x0, Start, p.id, -1});
      continue;
    }
    q.push({p.x0, Start, p.id, -1});
    q.push({p.x1, End, p.id, -1});
  }
  std::map<std::pair<int, int>, std::vector<double>> scheduled;

  auto test = [&](int a, int b, double xnow) {
    const auto& pa = pieces[static_cast<std::size_t>(a)];
    const auto& pb = pieces[static_cast<std::size_t>(b)];
    if (pa.link == pb.link) return;
    if (norm(pa.center - pb.center) > pa.radius + pb.radius + 1e-9 * ps.scale()) return;
    for (const Vec2 pt : circle_circle(pa.center, pa.radius, pb.center, pb.radius)) {
      if (!detail::on_piece(pa, pt) || !detail::on_piece(pb, pt)) continue;
      sink.add(pa.arc, pb.arc, pt);
      if (pt.x > xnow + tolx && pt.x < std::min(pa.x1, pb.x1) - tolx) {
        auto& xs = scheduled[{std::min(a, b), std::max(a, b)}];
        bool dup = false;
        for (double x : xs) dup = dup || std::abs(x - pt.x) <= tolx;
        if (!dup) {
          xs.push_back(pt.x);
          q.push({pt.x, Cross, std::min(a, b), std::max(a, b)});
        }
      }
    }
  };

  std::vector<int> touched, starts, crossing, batch_instant, ended;
  while (!q.empty()) {
    const double x = q.top().x;
    ended.clear();
    touched.clear();
    starts.clear();
    crossing.clear();
    batch_instant.clear();
    std::vector<Ev> batch;
    while (!q.empty() && q.top().x <= x + tolx) {
      batch.push_back(q.top());
      q.pop();
    }
    *X = x;
    for (const auto& e : batch) {
      if (e.kind == End && active[static_cast<std::size_t>(e.a)]) {
        auto it = where[static_cast<std::size_t>(e.a)];
        if (it != status.begin()) touched.push_back(*std::prev(it));
        if (std::next(it) != status.end()) touched.push_back(*std::next(it));
        status.erase(it);
        active[static_cast<std::size_t>(e.a)] = 0;
        ended.push_back(e.a);
      }
    }
    for (const auto& e : batch) {
      if (e.kind != Cross) continue;
      for (int id : {e.a, e.b}) {
        if (!active[static_cast<std::size_t>(id)]) continue;
        status.erase(where[static_cast<std::size_t>(id)]);
        active[static_cast<std::size_t>(id)] = 0;
        crossing.push_back(id);
      }
    }
    for (const auto& e : batch) {
      if (e.kind != Start) continue;
      const auto& p = pieces[static_cast<std::size_t>(e.a)];
      if (p.x1 - p.x0 <= tolx)
        batch_instant.push_back(e.a);
      else
        starts.push_back(e.a);
    }
    for (int id : crossing) starts.push_back(id);
    for (int id : starts) {
      auto [it, ok] = status.insert(id);
      if (!ok) throw InternalError("sweep status collision");
      where[static_cast<std::size_t>(id)] = it;
      active[static_cast<std::size_t>(id)] = 1;
      touched.push_back(id);
    }
    for (int id : touched) {
      if (!active[static_cast<std::size_t>(id)]) continue;
      auto it = where[static_cast<std::size_t>(id)];
      if (it != status.begin()) test(*std::prev(it), id, x);
      if (std::next(it) != status.end()) test(id, *std::next(it), x);
    }
    // A piece ending where another starts never shares the status with it.
    for (int id : ended)
      for (int other : starts) test(id, other, x);
    for (int id : batch_instant) {
      for (int other : status) test(id, other, x);
      for (int other : batch_instant)
        if (other != id) test(id, other, x);
    }
  }
  return sink.take();
}

inline std::vector<MonotonePiece> split_chain(const PointSet& ps, const ArcChain& chain) {
  std::vector<MonotonePiece> pieces;
  for (const auto& a : chain.arcs)
    for (auto& p : monotone_split(ps, a)) {
      p.id = static_cast<int>(pieces.size());
      pieces.push_back(p);
    }
  return pieces;
}

inline std::vector<IntersectionRecord> find_intersections(const PointSet& ps, const ArcChain& chain,
                                                          IntersectOptions opt = {}) {
  if (opt.brute_force) return brute_force_intersections(ps, chain);
  return sweep_intersections(ps, chain, split_chain(ps, chain));
}

/// Unordered link pairs with their number of distinct intersection points.
inline std::map<std::pair<int, int>, int> intersecting_link_pairs(const std::vector<IntersectionRecord>& records) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& r : records) ++out[{r.link1, r.link2}];
  return out;
}

/// Link pairs whose arc pairs are examined for overlaps: pairs that cross,
/// plus pairs from different subchains that share an endpoint in P.
inline std::vector<std::pair<int, int>> candidate_link_pairs(const ArcChain& chain,
                                                             const std::vector<IntersectionRecord>& records) {
  std::set<std::pair<int, int>> out;
  for (const auto& r : records) out.insert({r.link1, r.link2});
  std::map<int, std::vector<int>> at_point;
  for (const auto& l : chain.links) {
    at_point[l.start_point].push_back(l.id);
    if (l.end_point != l.start_point) at_point[l.end_point].push_back(l.id);
  }
  for (const auto& [p, ls] : at_point)
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        const auto& a = chain.links[static_cast<std::size_t>(ls[i])];
        const auto& b = chain.links[static_cast<std::size_t>(ls[j])];
        if (a.edge != b.edge) out.insert({std::min(a.id, b.id), std::max(a.id, b.id)});
      }
  return {out.begin(), out.end()};
}

}  // namespace orthohull

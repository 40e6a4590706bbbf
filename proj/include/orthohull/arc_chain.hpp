#pragma once

// Extremal arcs, links and subchains. Arcs are traced once for the class-0
// quadrant over a full turn of psi; the class-k quadrant at theta is the
// class-0 quadrant at psi = theta + k*pi/2, so every arc serves all four
// classes.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fixed_hull.hpp"
#include "staircase_set.hpp"
#include "vertex_events.hpp"

namespace orthohull {

enum class ArcColor { Red, Blue };

inline const char* to_string(ArcColor c) { return c == ArcColor::Red ? "red" : "blue"; }

struct ExtremalArc {
  int id = -1;
  int u = -1;  // earlier vertex on the staircase
  int v = -1;  // later vertex
  AngleInterval phi;  // tracing interval in psi, half-open
  int quadrant_class = 0;  // quarter of the turn where tracing starts
  int edge = -1;  // convex hull edge index
  ArcColor color = ArcColor::Blue;
  int link = -1;
  int position = -1;  // index within its link
  int start_point = -1;  // point of P at the start apex, or -1
  int end_point = -1;
  int successor = -1;
  int predecessor = -1;

  double start() const { return phi.start(); }
  double length() const { return phi.length(); }
};

struct Link {
  int id = -1;
  int edge = -1;
  ArcColor color = ArcColor::Blue;
  int start_point = -1;
  int end_point = -1;
  std::vector<int> arcs;
  std::vector<double> angles;  // increasing, arcs.size() + 1 entries, first in [0, 2pi)
  double radius = 0.0;
};

struct ArcChain {
  std::vector<ExtremalArc> arcs;
  std::vector<Link> links;
  std::vector<int> hull;                    // ccw hull vertex ids
  std::vector<std::vector<int>> subchains;  // link ids per hull edge, from hull[e+1] back to hull[e]

  std::vector<char> edge_upper;  // per hull edge: part of the upper chain
};

/// Corner between consecutive class-k staircase vertices u (earlier) and v.
inline Vec2 apex_at(Vec2 u, Vec2 v, int k, double theta) {
  const double phi = class_frame(theta, k);
  const Vec2 fu = rotate_frame(u, phi), fv = rotate_frame(v, phi);
  return unrotate_frame({fv.x, fu.y}, phi);
}
inline Vec2 apex_at(const PointSet& ps, int u, int v, int k, double theta) {
  return apex_at(ps.pos(u), ps.pos(v), k, theta);
}

/// Circle carrying an arc: diameter uv. The apex at psi sits at circle angle
/// 2 psi - dir(v - u).
struct ArcCircle {
  Vec2 center;
  double radius;
  double gamma;

  double angle_at(double psi) const { return 2.0 * psi - gamma; }
  Vec2 point_at_angle(double a) const { return center + radius * unit(a); }
};
inline ArcCircle arc_circle(const PointSet& ps, int u, int v) {
  const Vec2 a = ps.pos(u), b = ps.pos(v);
  return {0.5 * (a + b), 0.5 * norm(b - a), std::atan2(b.y - a.y, b.x - a.x)};
}
inline ArcCircle arc_circle(const PointSet& ps, const ExtremalArc& a) { return arc_circle(ps, a.u, a.v); }

/// Apex of the arc at psi = start + t * length, t in [0, 1].
inline Vec2 arc_point(const PointSet& ps, const ExtremalArc& a, double t) {
  return apex_at(ps, a.u, a.v, 0, a.start() + t * a.length());
}

namespace detail {

inline std::uint64_t pair_key(int u, int v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

struct EventCluster {
  double angle;
  std::size_t begin, end;
};

inline std::vector<EventCluster> clusters_of(const std::vector<VertexEvent>& ev) {
  std::vector<EventCluster> out;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (out.empty() || ev[i].angle - ev[i - 1].angle > kAngleTieTol)
      out.push_back({ev[i].angle, i, i + 1});
    else
      out.back().end = i + 1;
  }
  return out;
}

}  // namespace detail

/// Traces all extremal arcs, groups them into links and subchains and
/// colors them by the hull chain of their edge.
inline ArcChain trace_arcs(const PointSet& ps, const VertexEventTable& table) {
  ArcChain chain;
  chain.hull = convex_hull(ps);
  const std::size_t h = chain.hull.size();
  std::vector<int> hull_index(ps.size(), -1);
  for (std::size_t i = 0; i < h; ++i) hull_index[static_cast<std::size_t>(chain.hull[i])] = static_cast<int>(i);
  chain.edge_upper.resize(h);
  for (std::size_t i = 0; i < h; ++i) {
    const Point& a = ps[static_cast<std::size_t>(chain.hull[i])];
    const Point& b = ps[static_cast<std::size_t>(chain.hull[(i + 1) % h])];
    chain.edge_upper[i] = (b.x < a.x || (b.x == a.x && b.y < a.y)) ? 1 : 0;
  }

  std::vector<VertexEvent> ev;
  for (const auto& e : table.events)
    if (e.quadrant_class == 0) ev.push_back(e);
  if (ev.empty()) throw InternalError("vertex events table has no class-0 events");
  const auto cl = detail::clusters_of(ev);
  const std::size_t nc = cl.size();
  auto mid_after = [&](std::size_t c) {
    const double a = cl[c].angle;
    const double b = c + 1 < nc ? cl[c + 1].angle : cl[0].angle + kTwoPi;
    return canonicalize_angle(0.5 * (a + b));
  };

  KineticStaircase stair(ps, 0), hulls(ps, 0);
  const double psi0 = mid_after(nc - 1);
  stair.set_reference(psi0);
  hulls.set_reference(psi0);
  for (const auto& vi : table.intervals) {
    if (vi.quadrant_class != 0 || !vi.interval.contains(psi0)) continue;
    stair.insert(vi.point);
    if (hull_index[static_cast<std::size_t>(vi.point)] >= 0) hulls.insert(vi.point);
  }

  struct Work {
    ExtremalArc arc;
    double start = std::numeric_limits<double>::quiet_NaN();  // lifted
    double end = std::numeric_limits<double>::quiet_NaN();
    bool initial = false;
    bool dead = false;
  };
  std::vector<Work> w;
  std::unordered_map<std::uint64_t, int> open;

  // Hull vertices can sit on the staircase through an inward empty wedge;
  // only the ccw run from the first to the last staircase vertex counts.
  auto edge_of = [&](int u) {
    const auto f = hulls.first(), l = hulls.last();
    if (!f || !l) throw InternalError("staircase without hull vertices");
    const auto rel = [&](int v) {
      return (hull_index[static_cast<std::size_t>(v)] - hull_index[static_cast<std::size_t>(*f)] + static_cast<int>(h)) %
             static_cast<int>(h);
    };
    auto hv = hulls.at_or_before(u);
    while (hv && rel(*hv) > rel(*l)) hv = hulls.prev(*hv);
    if (!hv) throw InternalError("no hull vertex precedes a staircase vertex");
    return hull_index[static_cast<std::size_t>(*hv)];
  };
  auto open_arc = [&](int u, int v, double start, bool initial) {
    Work x;
    x.arc.id = static_cast<int>(w.size());
    x.arc.u = u;
    x.arc.v = v;
    x.arc.edge = edge_of(u);
    x.start = start;
    x.initial = initial;
    w.push_back(x);
    open[detail::pair_key(u, v)] = x.arc.id;
    return x.arc.id;
  };

  {
    const auto order = stair.ordered();
    for (std::size_t i = 0; i + 1 < order.size(); ++i) open_arc(order[i], order[i + 1], NAN, true);
  }

  const double tol = 1e-9 * ps.scale();
  auto near_point = [&](Vec2 q, int a, int b) {
    if (norm(q - ps.pos(a)) <= tol) return a;
    if (norm(q - ps.pos(b)) <= tol) return b;
    return -1;
  };

  std::vector<std::pair<int, int>> broken, created;
  for (std::size_t c = 0; c < nc; ++c) {
    const double psi = cl[c].angle;
    broken.clear();
    created.clear();
    for (std::size_t i = cl[c].begin; i < cl[c].end; ++i) {
      const auto& e = ev[i];
      if (e.kind != VertexEventKind::Deletion) continue;
      auto p = stair.prev(e.point), n = stair.next(e.point);
      if (p) broken.emplace_back(*p, e.point);
      if (n) broken.emplace_back(e.point, *n);
      if (p && n) created.emplace_back(*p, *n);
      stair.erase(e.point);
      if (hulls.contains(e.point)) hulls.erase(e.point);
    }
    const double ref = mid_after(c);
    stair.set_reference(ref);
    hulls.set_reference(ref);
    for (std::size_t i = cl[c].begin; i < cl[c].end; ++i) {
      const auto& e = ev[i];
      if (e.kind != VertexEventKind::Insertion) continue;
      stair.insert(e.point);
      if (hull_index[static_cast<std::size_t>(e.point)] >= 0) hulls.insert(e.point);
      auto p = stair.prev(e.point), n = stair.next(e.point);
      if (p && n) broken.emplace_back(*p, *n);
      if (p) created.emplace_back(*p, e.point);
      if (n) created.emplace_back(e.point, *n);
    }

    std::vector<int> ended, started;
    for (auto [u, v] : broken) {
      auto it = open.find(detail::pair_key(u, v));
      if (it == open.end() || stair.consecutive(u, v)) continue;
      const int id = it->second;
      open.erase(it);
      w[static_cast<std::size_t>(id)].end = psi;
      ended.push_back(id);
    }
    for (auto [u, v] : created) {
      if (!stair.consecutive(u, v) || open.count(detail::pair_key(u, v))) continue;
      started.push_back(open_arc(u, v, psi, false));
    }

    std::vector<Vec2> end_apex, start_apex;
    for (int id : ended) {
      auto& x = w[static_cast<std::size_t>(id)];
      end_apex.push_back(apex_at(ps, x.arc.u, x.arc.v, 0, psi));
      x.arc.end_point = near_point(end_apex.back(), x.arc.u, x.arc.v);
    }
    std::vector<char> taken(ended.size(), 0);
    for (int id : started) {
      auto& x = w[static_cast<std::size_t>(id)];
      start_apex.push_back(apex_at(ps, x.arc.u, x.arc.v, 0, psi));
      x.arc.start_point = near_point(start_apex.back(), x.arc.u, x.arc.v);
      if (x.arc.start_point >= 0) continue;
      int best = -1;
      double bd = INFINITY;
      for (std::size_t j = 0; j < ended.size(); ++j) {
        if (taken[j] || w[static_cast<std::size_t>(ended[j])].arc.end_point >= 0) continue;
        const double d = norm(end_apex[j] - start_apex.back());
        if (d < bd) {
          bd = d;
          best = static_cast<int>(j);
        }
      }
      if (best < 0 || bd > 1e3 * tol)
        throw InternalError("arc started at angle " + std::to_string(psi) + " continues no ended arc");
      taken[static_cast<std::size_t>(best)] = 1;
      auto& e = w[static_cast<std::size_t>(ended[static_cast<std::size_t>(best)])];
      e.arc.successor = id;
      x.arc.predecessor = e.arc.id;
    }
    for (std::size_t j = 0; j < ended.size(); ++j) {
      const auto& e = w[static_cast<std::size_t>(ended[j])];
      if (e.arc.end_point < 0 && !taken[j])
        throw InternalError("arc ended at angle " + std::to_string(psi) + " has no continuation");
    }
  }

  // Arcs still open wrap around to the initial arcs of the same pair.
  std::unordered_map<std::uint64_t, int> initial_of;
  for (const auto& x : w)
    if (x.initial) initial_of[detail::pair_key(x.arc.u, x.arc.v)] = x.arc.id;
  for (auto [key, id] : open) {
    auto& f = w[static_cast<std::size_t>(id)];
    if (f.initial) throw InternalError("arc spans a full turn");
    auto found = initial_of.find(key);
    if (found == initial_of.end()) throw InternalError("open arc without an initial counterpart");
    const int init = found->second;
    auto& g = w[static_cast<std::size_t>(init)];
    if (std::isnan(g.end)) throw InternalError("initial arc never ended");
    f.end = g.end + kTwoPi;
    f.arc.end_point = g.arc.end_point;
    f.arc.successor = g.arc.successor;
    if (g.arc.successor >= 0) w[static_cast<std::size_t>(g.arc.successor)].arc.predecessor = f.arc.id;
    g.dead = true;
    g.initial = false;
  }
  for (const auto& x : w)
    if (x.initial && !x.dead) throw InternalError("initial arc not closed by the sweep");

  // Compact ids.
  std::vector<int> remap(w.size(), -1);
  for (const auto& x : w) {
    if (x.dead) continue;
    const double len = x.end - x.start;
    if (!(len > 0.0)) {
      if (len < -kAngleTieTol || x.arc.predecessor >= 0 || x.arc.successor >= 0)
        throw InternalError("arc with non-positive tracing length");
    }
    if (len > kHalfPi + 1e-9) throw InternalError("tracing interval longer than pi/2");
    remap[static_cast<std::size_t>(x.arc.id)] = static_cast<int>(chain.arcs.size());
    ExtremalArc a = x.arc;
    a.phi = AngleInterval::from_length(x.start, std::max(0.0, len));
    a.quadrant_class = static_cast<int>(std::floor(a.phi.start() / kHalfPi)) & 3;
    a.color = chain.edge_upper[static_cast<std::size_t>(a.edge)] ? ArcColor::Red : ArcColor::Blue;
    chain.arcs.push_back(a);
  }
  for (auto& a : chain.arcs) {
    a.id = remap[static_cast<std::size_t>(a.id)];
    if (a.successor >= 0) a.successor = remap[static_cast<std::size_t>(a.successor)];
    if (a.predecessor >= 0) a.predecessor = remap[static_cast<std::size_t>(a.predecessor)];
  }

  // Links run from an arc starting at a point of P to one ending at a point of P.
  for (auto& a : chain.arcs) {
    if (a.start_point < 0) continue;
    Link l;
    l.id = static_cast<int>(chain.links.size());
    l.edge = a.edge;
    l.color = a.color;
    l.start_point = a.start_point;
    double t = a.start();
    l.angles.push_back(t);
    int cur = a.id;
    while (true) {
      auto& b = chain.arcs[static_cast<std::size_t>(cur)];
      if (b.link >= 0) throw InternalError("arc assigned to two links");
      b.link = l.id;
      b.position = static_cast<int>(l.arcs.size());
      l.arcs.push_back(cur);
      t += b.length();
      l.angles.push_back(t);
      if (b.end_point >= 0) {
        l.end_point = b.end_point;
        break;
      }
      if (b.successor < 0) throw InternalError("link interrupted");
      cur = b.successor;
    }
    l.radius = 0.5 * norm(ps.pos(l.end_point) - ps.pos(l.start_point));
    chain.links.push_back(std::move(l));
  }
  for (const auto& a : chain.arcs)
    if (a.link < 0) throw InternalError("arc outside every link");

  chain.subchains.assign(h, {});
  for (const auto& l : chain.links) chain.subchains[static_cast<std::size_t>(l.edge)].push_back(l.id);
  for (std::size_t i = 0; i < h; ++i) {
    const Vec2 a = ps.pos(chain.hull[i]);
    const Vec2 d = ps.pos(chain.hull[(i + 1) % h]) - a;
    auto& sc = chain.subchains[i];
    std::sort(sc.begin(), sc.end(), [&](int x, int y) {
      return dot(ps.pos(chain.links[static_cast<std::size_t>(x)].start_point) - a, d) >
             dot(ps.pos(chain.links[static_cast<std::size_t>(y)].start_point) - a, d);
    });
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Pairwise overlap conditions. Arc a1 is taken as the class-k quadrant at
// psi and a2 as the opposite one, i.e. a2 traced at psi + pi.

struct FullOverlapInterval {
  AngleInterval interval;  // where both rectangle sides are positive
  double theta1 = 0.0;     // X parallel to ac, reduced mod pi
  double theta2 = 0.0;     // Y parallel to bd, reduced mod pi
  bool proper = true;
};

namespace detail {

/// Open set of psi where the rectangle spanned by the apexes of (u, v) at psi
/// and (s, t) at psi + pi has positive width and height.
inline std::vector<AngleInterval> positivity_set(Vec2 u, Vec2 v, Vec2 s, Vec2 t) {
  const Vec2 A = t - v, B = s - u;
  // A shared support makes one side identically zero.
  if ((A.x == 0.0 && A.y == 0.0) || (B.x == 0.0 && B.y == 0.0)) return {};
  const double da = std::atan2(A.y, A.x), db = std::atan2(B.y, B.x);
  return interval_intersect(AngleInterval::from_length(da - kHalfPi, kPi),
                            AngleInterval::from_length(db - kPi, kPi));
}

inline double mod_pi(double a) {
  double r = std::fmod(a, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r -= kPi;
  return r;
}

}  // namespace detail

inline FullOverlapInterval full_overlap_interval(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  FullOverlapInterval f;
  f.theta1 = detail::mod_pi(std::atan2(c.y - a.y, c.x - a.x));
  f.theta2 = detail::mod_pi(std::atan2(d.y - b.y, d.x - b.x) + kHalfPi);
  auto pos = detail::positivity_set(a, b, c, d);
  const double span = detail::mod_pi(f.theta2 - f.theta1);
  if (pos.empty()) {
    f.interval = AngleInterval::from_length(f.theta1, 0.0, true);
    f.proper = span <= 1e-12 || span >= kPi - 1e-12;
    return f;
  }
  f.interval = AngleInterval::from_length(pos.front().start(), pos.front().length(), true);
  const double off = detail::mod_pi(f.interval.start() - f.theta1);
  f.proper = std::min(off, kPi - off) <= 1e-9;
  return f;
}

inline FullOverlapInterval full_overlap_interval(const PointSet& ps, const ExtremalArc& a1, const ExtremalArc& a2) {
  return full_overlap_interval(ps.pos(a1.u), ps.pos(a1.v), ps.pos(a2.u), ps.pos(a2.v));
}

inline std::vector<AngleInterval> facing_interval(const AngleInterval& phi1, const AngleInterval& phi2) {
  return interval_intersect(phi1, interval_shift(phi2, kPi));
}
inline std::vector<AngleInterval> facing_interval(const ExtremalArc& a1, const ExtremalArc& a2) {
  return facing_interval(a1.phi, a2.phi);
}

/// The psi-interval (for a1) during which the two quadrants overlap with
/// positive area, if any.
inline std::optional<AngleInterval> admits_overlap(const PointSet& ps, const ExtremalArc& a1, const ExtremalArc& a2) {
  const auto pos = detail::positivity_set(ps.pos(a1.u), ps.pos(a1.v), ps.pos(a2.u), ps.pos(a2.v));
  if (pos.empty()) return std::nullopt;
  std::optional<AngleInterval> best;
  for (const auto& f : facing_interval(a1, a2)) {
    for (const auto& x : interval_intersect(pos.front(), f)) {
      if (x.length() <= kAngleTieTol) continue;
      if (best) throw InternalError("overlap set of an arc pair is not connected");
      best = AngleInterval::from_length(x.start(), x.length(), true);
    }
  }
  return best;
}

}  // namespace orthohull

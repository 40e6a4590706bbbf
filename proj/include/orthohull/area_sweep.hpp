#pragma once

// Angular sweep over the merged vertex and overlap events. The area on each
// interval between events is C + A cos 2theta + B sin 2theta; the state keeps
// those sums up to date with a constant number of term updates per event and
// each interval is minimized in closed form.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "overlap_table.hpp"

namespace orthohull {

/// c + a cos 2theta + b sin 2theta, with theta absolute.
struct Harmonic {
  double c = 0.0, a = 0.0, b = 0.0;

  double operator()(double theta) const { return c + a * std::cos(2.0 * theta) + b * std::sin(2.0 * theta); }
  Harmonic& operator+=(const Harmonic& o) {
    c += o.c;
    a += o.a;
    b += o.b;
    return *this;
  }
  Harmonic& operator-=(const Harmonic& o) {
    c -= o.c;
    a -= o.a;
    b -= o.b;
    return *this;
  }
};

/// (C, D, E) with f(theta) = C + D cos 2(theta - anchor) + E sin 2(theta - anchor).
struct Anchored {
  double anchor = 0.0;
  double C = 0.0, D = 0.0, E = 0.0;

  double operator()(double theta) const {
    const double t = 2.0 * (theta - anchor);
    return C + D * std::cos(t) + E * std::sin(t);
  }
};

inline Anchored anchor_at(const Harmonic& h, double theta) {
  const double c2 = std::cos(2.0 * theta), s2 = std::sin(2.0 * theta);
  return {theta, h.c, h.a * c2 + h.b * s2, -h.a * s2 + h.b * c2};
}

/// Area of the triangle cut by consecutive class-k vertices u, v (u first).
inline Harmonic triangle_harmonic(Vec2 u, Vec2 v, int k) {
  const double dx = v.x - u.x, dy = v.y - u.y;
  const double sg = (k % 2 == 0) ? 1.0 : -1.0;
  return {0.0, -0.5 * sg * dx * dy, -0.25 * sg * (dy * dy - dx * dx)};
}

/// Rectangle spanned by the class-k corner of (u, v) and the opposite corner of (s, t).
inline Harmonic overlap_harmonic(Vec2 u, Vec2 v, Vec2 s, Vec2 t, int k) {
  const Vec2 A = t - v, B = s - u;
  const double sg = (k % 2 == 0) ? 1.0 : -1.0;
  return {0.5 * (A.x * B.y - A.y * B.x), 0.5 * sg * (A.x * B.y + A.y * B.x), 0.5 * sg * (A.y * B.y - A.x * B.x)};
}

inline std::pair<double, double> triangle_coeffs(Vec2 u, Vec2 v, int k, double anchor) {
  const Anchored r = anchor_at(triangle_harmonic(u, v, k), anchor);
  return {r.D, r.E};
}

inline std::array<double, 3> overlap_coeffs(Vec2 a, Vec2 b, Vec2 c, Vec2 d, int k, double anchor) {
  const Anchored r = anchor_at(overlap_harmonic(a, b, c, d, k), anchor);
  return {r.C, r.D, r.E};
}

struct IntervalMin {
  double theta = 0.0;
  double area = 0.0;
};

/// Minima of C + D cos 2(theta - anchor) + E sin 2(theta - anchor) over the
/// closed interval [lo, hi], hi - lo <= pi/2. All candidates within 1e-12 of
/// the minimum are returned, ordered by angle (not canonicalized).
inline std::vector<IntervalMin> minimize_interval(const Anchored& f, double lo, double hi, double tie = 1e-12) {
  if (hi < lo) throw InvalidArgument("interval end before start");
  std::vector<IntervalMin> cand{{lo, f(lo)}};
  if (hi > lo) cand.push_back({hi, f(hi)});
  if (f.D != 0.0 || f.E != 0.0) {
    const double base = f.anchor + 0.5 * (std::atan2(f.E, f.D) + kPi);
    const double m0 = std::ceil((lo - base) / kPi);
    for (double m = m0; base + m * kPi < hi; m += 1.0) {
      const double t = base + m * kPi;
      if (t > lo) cand.push_back({t, f(t)});
    }
  }
  double best = INFINITY;
  for (const auto& c : cand) best = std::min(best, c.area);
  std::vector<IntervalMin> out;
  for (const auto& c : cand)
    if (c.area <= best + tie) out.push_back(c);
  std::sort(out.begin(), out.end(), [](const IntervalMin& x, const IntervalMin& y) { return x.theta < y.theta; });
  return out;
}

// ---------------------------------------------------------------------------

enum class SweepEventKind { Deletion = 0, Release = 1, Insertion = 2, Overlap = 3 };

inline const char* to_string(SweepEventKind k) {
  switch (k) {
    case SweepEventKind::Deletion:
      return "deletion";
    case SweepEventKind::Release:
      return "release";
    case SweepEventKind::Insertion:
      return "insertion";
    case SweepEventKind::Overlap:
      return "overlap";
  }
  return "?";
}

struct SweepEvent {
  double angle = 0.0;
  SweepEventKind kind = SweepEventKind::Insertion;
  int point = -1;  // vertex events
  int quadrant_class = 0;
  int overlap = -1;  // overlap events
};

/// Everything the sweep consumes; built once per point set.
struct SweepTables {
  VertexEventTable vertex;
  ArcChain chain;
  std::vector<IntersectionRecord> intersections;
  std::vector<std::pair<int, int>> candidate_pairs;
  OverlapTable overlap;
  std::vector<SweepEvent> events;   // merged, sorted, ties ordered
  std::vector<std::size_t> batch;   // cluster index per event
  std::array<double, 4> seconds{};  // vertex table, arcs, intersections, overlaps
};

inline std::vector<SweepEvent> merge_events(const VertexEventTable& vt, const OverlapTable& ot,
                                            std::vector<std::size_t>* batch) {
  std::vector<SweepEvent> ev;
  ev.reserve(vt.events.size() + ot.events.size());
  for (const auto& e : vt.events)
    ev.push_back({e.angle, e.kind == VertexEventKind::Insertion ? SweepEventKind::Insertion : SweepEventKind::Deletion,
                  e.point, e.quadrant_class, -1});
  for (const auto& e : ot.events)
    ev.push_back({e.angle, e.kind == OverlapEventKind::Overlap ? SweepEventKind::Overlap : SweepEventKind::Release, -1,
                  0, e.interval});
  auto b = sort_and_batch(ev, kAngleTieTol, [](const SweepEvent& e) {
    return std::make_tuple(static_cast<int>(e.kind), e.point, e.quadrant_class, e.overlap);
  });
  if (batch) *batch = std::move(b);
  return ev;
}

inline SweepTables build_tables(const PointSet& ps, IntersectOptions opt = {}) {
  using clk = std::chrono::steady_clock;
  SweepTables t;
  auto t0 = clk::now();
  t.vertex = build_vertex_table(ps);
  auto t1 = clk::now();
  t.chain = trace_arcs(ps, t.vertex);
  auto t2 = clk::now();
  t.intersections = find_intersections(ps, t.chain, opt);
  t.candidate_pairs = candidate_link_pairs(t.chain, t.intersections);
  auto t3 = clk::now();
  t.overlap = build_overlap_table(ps, t.chain, t.candidate_pairs);
  t.events = merge_events(t.vertex, t.overlap, &t.batch);
  auto t4 = clk::now();
  auto sec = [](auto a, auto b) { return std::chrono::duration<double>(b - a).count(); };
  t.seconds = {sec(t0, t1), sec(t1, t2), sec(t2, t3), sec(t3, t4)};
  return t;
}

/// Maintained V^c, O^c and the area sums.
class AreaState {
 public:
  AreaState(const PointSet& ps, const OverlapTable& ot)
      : ps_(&ps), ot_(&ot), stairs_{KineticStaircase(ps, 0), KineticStaircase(ps, 1), KineticStaircase(ps, 2),
                                    KineticStaircase(ps, 3)},
        active_(ot.intervals.size(), 0) {}

  void set_reference(double theta) {
    for (auto& s : stairs_) s.set_reference(theta);
  }

  void insert_vertex(int k, int w) {
    auto& s = stairs_[static_cast<std::size_t>(k)];
    s.insert(w);
    auto p = s.prev(w), n = s.next(w);
    if (p && n) body_ -= pair_term(k, *p, *n);
    if (p) body_ += pair_term(k, *p, w);
    if (n) body_ += pair_term(k, w, *n);
  }
  void erase_vertex(int k, int w) {
    auto& s = stairs_[static_cast<std::size_t>(k)];
    if (!s.contains(w)) throw InternalError("deletion of a point that is not a vertex");
    auto p = s.prev(w), n = s.next(w);
    if (p) body_ -= pair_term(k, *p, w);
    if (n) body_ -= pair_term(k, w, *n);
    if (p && n) body_ += pair_term(k, *p, *n);
    s.erase(w);
  }
  void add_overlap(int id) {
    if (active_[static_cast<std::size_t>(id)]) throw InternalError("overlap added twice");
    active_[static_cast<std::size_t>(id)] = 1;
    ++n_active_;
    overlaps_ += overlap_term(id);
  }
  void release_overlap(int id) {
    if (!active_[static_cast<std::size_t>(id)]) throw InternalError("release of an inactive overlap");
    active_[static_cast<std::size_t>(id)] = 0;
    --n_active_;
    overlaps_ -= overlap_term(id);
  }

  /// Recomputes the four cross terms joining consecutive staircases.
  void refresh_junctions() {
    junction_ = 0.0;
    const Vec2 o = ps_->center();
    for (int k = 0; k < 4; ++k) {
      auto a = stairs_[static_cast<std::size_t>(k)].last();
      auto b = stairs_[static_cast<std::size_t>((k + 1) % 4)].first();
      if (a && b) junction_ += 0.5 * cross(ps_->pos(*a) - o, ps_->pos(*b) - o);
    }
  }

  Harmonic harmonic() const {
    Harmonic h = body_;
    h += overlaps_;
    h.c += junction_;
    return h;
  }
  /// (C, D, E) anchored at theta.
  Anchored reduce(double anchor) const { return anchor_at(harmonic(), anchor); }

  const KineticStaircase& staircase(int k) const { return stairs_[static_cast<std::size_t>(k)]; }
  std::vector<int> active_overlaps() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < active_.size(); ++i)
      if (active_[i]) out.push_back(static_cast<int>(i));
    return out;
  }
  std::size_t overlap_count() const { return n_active_; }

 private:
  Harmonic pair_term(int k, int u, int v) const {
    const Vec2 o = ps_->center();
    const Vec2 a = ps_->pos(u), b = ps_->pos(v);
    Harmonic h = triangle_harmonic(a, b, k);
    return {0.5 * cross(a - o, b - o) - h.c, -h.a, -h.b};
  }
  Harmonic overlap_term(int id) const {
    const auto& r = ot_->intervals[static_cast<std::size_t>(id)];
    return overlap_harmonic(ps_->pos(r.a), ps_->pos(r.b), ps_->pos(r.c), ps_->pos(r.d), r.quadrant_class);
  }

  const PointSet* ps_;
  const OverlapTable* ot_;
  std::array<KineticStaircase, 4> stairs_;
  std::vector<char> active_;
  std::size_t n_active_ = 0;
  Harmonic body_;      // polygon pair terms minus triangles
  Harmonic overlaps_;  // rectangles
  double junction_ = 0.0;
};

/// Passed to the observer once per interval between event batches.
struct SweepProbe {
  std::size_t index = 0;  // interval number, wrap interval first
  double lo = 0.0, hi = 0.0;  // lifted bounds, hi - lo <= pi/2
  double mid = 0.0;           // canonical midpoint
  const AreaState* state = nullptr;
};

struct SweepOptions {
  bool expand_periods = false;
  std::function<void(const SweepProbe&)> observer;
};

struct SweepResult {
  std::vector<double> theta_opt;
  double min_area = 0.0;
  std::size_t events = 0;
  std::size_t batches = 0;
  std::array<std::size_t, 4> events_by_kind{};  // indexed by SweepEventKind
  bool period_expanded = false;
};

namespace detail {

inline std::vector<double> dedupe_minimizers(std::vector<double> th, bool expand) {
  for (auto& t : th) {
    t = std::fmod(canonicalize_angle(t), kHalfPi);
    if (t > kHalfPi - 1e-9) t = 0.0;
  }
  std::sort(th.begin(), th.end());
  std::vector<double> out;
  for (double t : th)
    if (out.empty() || t - out.back() > 1e-9) out.push_back(t);
  if (out.size() > 1 && out.back() > kHalfPi - 1e-9 + out.front()) out.pop_back();
  if (!expand) return out;
  std::vector<double> all;
  for (int k = 0; k < 4; ++k)
    for (double t : out) all.push_back(t + k * kHalfPi);
  return all;
}

}  // namespace detail

inline SweepResult sweep_with_tables(const PointSet& ps, const SweepTables& t, const SweepOptions& opt = {}) {
  SweepResult res;
  res.events = t.events.size();
  res.period_expanded = opt.expand_periods;
  for (const auto& e : t.events) ++res.events_by_kind[static_cast<std::size_t>(e.kind)];
  if (t.events.empty()) throw InternalError("no events");

  struct Cl {
    double angle;
    std::size_t begin, end;
  };
  std::vector<Cl> cl;
  for (std::size_t i = 0; i < t.events.size(); ++i) {
    if (cl.empty() || t.batch[i] != t.batch[i - 1])
      cl.push_back({t.events[i].angle, i, i + 1});
    else
      cl.back().end = i + 1;
  }
  const std::size_t nc = cl.size();
  res.batches = nc;
  auto bounds = [&](std::size_t c) {
    const double lo = cl[c].angle;
    const double hi = c + 1 < nc ? cl[c + 1].angle : cl[0].angle + kTwoPi;
    return std::pair{lo, hi};
  };

  AreaState st(ps, t.overlap);
  const auto [wlo, whi] = bounds(nc - 1);
  const double wmid = canonicalize_angle(0.5 * (wlo + whi));
  st.set_reference(wmid);
  for (const auto& vi : t.vertex.intervals)
    if (vi.interval.contains(wmid)) st.insert_vertex(vi.quadrant_class, vi.point);
  for (const auto& o : t.overlap.intervals)
    if (o.interval.contains(wmid)) st.add_overlap(o.id);
  st.refresh_junctions();

  const double tie = 1e-12 * std::max(1.0, ps.scale() * ps.scale());
  double best = INFINITY;
  std::vector<IntervalMin> arg;
  std::size_t index = 0;
  auto visit = [&](double lo, double hi) {
    if (hi - lo > kHalfPi + 1e-9) throw InternalError("interval between events wider than pi/2");
    const Anchored f = st.reduce(lo);
    for (const auto& m : minimize_interval(f, lo, hi, tie)) {
      if (m.area < best - tie) arg.clear();
      best = std::min(best, m.area);
      if (m.area <= best + tie) arg.push_back(m);
    }
    if (opt.observer) opt.observer({index, lo, hi, canonicalize_angle(0.5 * (lo + hi)), &st});
    ++index;
  };

  visit(wlo, whi);
  for (std::size_t c = 0; c + 1 < nc; ++c) {
    for (std::size_t i = cl[c].begin; i < cl[c].end; ++i) {
      const auto& e = t.events[i];
      if (e.kind == SweepEventKind::Deletion)
        st.erase_vertex(e.quadrant_class, e.point);
      else if (e.kind == SweepEventKind::Release)
        st.release_overlap(e.overlap);
    }
    const auto [lo, hi] = bounds(c);
    st.set_reference(0.5 * (lo + hi));
    for (std::size_t i = cl[c].begin; i < cl[c].end; ++i) {
      const auto& e = t.events[i];
      if (e.kind == SweepEventKind::Insertion)
        st.insert_vertex(e.quadrant_class, e.point);
      else if (e.kind == SweepEventKind::Overlap)
        st.add_overlap(e.overlap);
    }
    st.refresh_junctions();
    visit(lo, hi);
  }

  std::vector<double> keep;
  for (const auto& m : arg)
    if (m.area <= best + tie) keep.push_back(m.theta);
  res.min_area = std::max(0.0, best);
  res.theta_opt = detail::dedupe_minimizers(std::move(keep), opt.expand_periods);
  return res;
}

inline SweepResult sweep_min_area(const PointSet& ps, const SweepOptions& opt = {}) {
  return sweep_with_tables(ps, build_tables(ps), opt);
}

}  // namespace orthohull

#pragma once

// Planar primitives shared by every stage: points, rotated frames,
// circular angle arithmetic and general-position validation.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orthohull {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

/// Angular tolerance used to batch coincident events (radians).
inline constexpr double kAngleTieTol = 1e-12;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Orientation determinant of (a, b, c): positive for a left turn.
constexpr double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

struct Point {
  int id = 0;
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 pos() const { return {x, y}; }
};

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails (a bug, not bad input).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Angles

/// Reduce any finite angle to [0, 2pi).
inline double canonicalize_angle(double a) {
  if (!std::isfinite(a)) throw InvalidArgument("angle must be finite");
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;  // fmod of a tiny negative can round up to 2pi
  return r;
}

/// Strong type for an orientation on the circle, always in [0, 2pi).
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : value_(canonicalize_angle(radians)) {}

  constexpr double value() const { return value_; }
  friend constexpr bool operator==(Angle, Angle) = default;

 private:
  double value_ = 0.0;
};

/// Counter-clockwise distance from `from` to `to`, in [0, 2pi).
inline double ccw_distance(double from, double to) { return canonicalize_angle(to - from); }

/// Coordinates of `p` in the frame whose axes are rotated counter-clockwise by theta.
inline Vec2 rotate_frame(Vec2 p, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {p.x * c + p.y * s, -p.x * s + p.y * c};
}
inline Vec2 rotate_frame(const Point& p, Angle theta) { return rotate_frame(p.pos(), theta.value()); }

/// Inverse of rotate_frame: world coordinates of a frame point.
inline Vec2 unrotate_frame(Vec2 q, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {q.x * c - q.y * s, q.x * s + q.y * c};
}

/// A counter-clockwise span [start, start + length) on the circle, optionally
/// closed at its end. Zero length with an open end is the empty interval; zero
/// length with a closed end is a single angle.
class AngleInterval {
 public:
  AngleInterval() = default;

  static AngleInterval from_length(double start, double length, bool closed_end = false) {
    if (!std::isfinite(length) || length < 0.0) throw InvalidArgument("interval length must be >= 0");
    AngleInterval r;
    r.start_ = canonicalize_angle(start);
    r.length_ = std::min(length, kTwoPi);
    r.closed_end_ = closed_end && r.length_ < kTwoPi;
    return r;
  }
  /// Span from `start` counter-clockwise to `end`; equal endpoints give an empty
  /// (or, when closed, singleton) interval.
  static AngleInterval from_endpoints(double start, double end, bool closed_end = false) {
    return from_length(start, ccw_distance(start, end), closed_end);
  }
  static AngleInterval full() { return from_length(0.0, kTwoPi); }
  static AngleInterval empty_interval() { return {}; }

  double start() const { return start_; }
  double end() const { return canonicalize_angle(start_ + length_); }
  double length() const { return length_; }
  bool closed_end() const { return closed_end_; }
  bool empty() const { return length_ <= 0.0 && !closed_end_; }
  bool is_full() const { return length_ >= kTwoPi; }
  double midpoint() const { return canonicalize_angle(start_ + 0.5 * length_); }

  bool contains(double theta) const {
    if (empty()) return false;
    if (is_full()) return true;
    const double d = ccw_distance(start_, theta);
    return d < length_ || (closed_end_ && d == length_);
  }

 private:
  double start_ = 0.0;
  double length_ = 0.0;
  bool closed_end_ = false;
};

/// Pointwise shift by delta (mod 2pi); length and closedness preserved.
inline AngleInterval interval_shift(const AngleInterval& a, double delta) {
  if (a.empty()) return a;
  return AngleInterval::from_length(a.start() + delta, a.length(), a.closed_end());
}

/// Circular set intersection. Up to two disjoint pieces, sorted by start
/// relative to a.start().
inline std::vector<AngleInterval> interval_intersect(const AngleInterval& a, const AngleInterval& b) {
  std::vector<AngleInterval> out;
  if (a.empty() || b.empty()) return out;
  if (b.is_full()) return {a};
  if (a.is_full()) return {b};

  // Work on the real line with a = [0, la].
  const double la = a.length();
  const double lb = b.length();
  const double d = ccw_distance(a.start(), b.start());
  struct Piece {
    double lo, hi;
    bool closed;
  };
  std::vector<Piece> pieces;
  for (double off : {d - kTwoPi, d}) {
    const double lo = std::max(0.0, off);
    double hi;
    bool closed;
    if (off + lb < la) {
      hi = off + lb;
      closed = b.closed_end();
    } else if (off + lb > la) {
      hi = la;
      closed = a.closed_end();
    } else {
      hi = la;
      closed = a.closed_end() && b.closed_end();
    }
    if (hi > lo || (hi == lo && closed && lo <= la && off <= lo)) pieces.push_back({lo, hi, closed});
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& p, const Piece& q) { return p.lo < q.lo; });
  for (const auto& p : pieces) out.push_back(AngleInterval::from_length(a.start() + p.lo, p.hi - p.lo, p.closed));
  return out;
}

// ---------------------------------------------------------------------------
// Point sets

/// Result of a general-position check; `ok()` when no violation was found.
struct GeneralPositionReport {
  enum class Kind { Ok, Duplicate, Collinear, TooFew };
  Kind kind = Kind::Ok;
  std::vector<int> indices;  // offending pair or triple, ascending

  bool ok() const { return kind == Kind::Ok; }
  std::string message() const {
    std::ostringstream os;
    switch (kind) {
      case Kind::Ok:
        return "ok";
      case Kind::TooFew:
        return "at least 3 points are required";
      case Kind::Duplicate:
        os << "duplicate points";
        break;
      case Kind::Collinear:
        os << "collinear points";
        break;
    }
    for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? ", " : " ") << indices[i];
    return os.str();
  }
};

class GeneralPositionError : public InvalidArgument {
 public:
  explicit GeneralPositionError(GeneralPositionReport report)
      : InvalidArgument(report.message()), report_(std::move(report)) {}
  const GeneralPositionReport& report() const { return report_; }

 private:
  GeneralPositionReport report_;
};

/// Diagonal of the axis-aligned bounding box.
inline double bbox_diagonal(const std::vector<Point>& pts) {
  if (pts.empty()) return 0.0;
  double x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
  for (const auto& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  return std::hypot(x1 - x0, y1 - y0);
}

/// Checks for coincident pairs and collinear triples. Collinearity uses
/// |orient| <= 1e-12 * scale^2 with scale the bounding-box diagonal.
/// O(n^2 log n): every point sorts the line directions to the others.
inline GeneralPositionReport validate_general_position(const std::vector<Point>& pts) {
  GeneralPositionReport rep;
  const std::size_t n = pts.size();
  if (n < 3) {
    rep.kind = GeneralPositionReport::Kind::TooFew;
    return rep;
  }
  const double scale = bbox_diagonal(pts);
  const double dup_tol = 1e-12 * scale;
  const double col_tol = 1e-12 * scale * scale;

  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
  });
  std::optional<std::pair<int, int>> dup;
  for (std::size_t k = 0; k < n; ++k) {
    // Neighbours in x within tolerance are the only duplicate candidates.
    for (std::size_t m = k + 1; m < n && pts[order[m]].x - pts[order[k]].x <= dup_tol; ++m) {
      if (norm(pts[order[m]].pos() - pts[order[k]].pos()) <= dup_tol) {
        std::pair<int, int> c{std::min(order[k], order[m]), std::max(order[k], order[m])};
        if (!dup || c < *dup) dup = c;
      }
    }
  }
  if (dup) {
    rep.kind = GeneralPositionReport::Kind::Duplicate;
    rep.indices = {dup->first, dup->second};
    return rep;
  }

  std::optional<std::array<int, 3>> worst;
  std::vector<std::pair<double, int>> dirs;
  dirs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    dirs.clear();
    const Vec2 p = pts[i].pos();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Vec2 d = pts[j].pos() - p;
      double a = std::atan2(d.y, d.x);
      if (a < 0.0) a += kPi;
      if (a >= kPi) a -= kPi;
      dirs.emplace_back(a, static_cast<int>(j));
    }
    std::sort(dirs.begin(), dirs.end());
    const std::size_t m = dirs.size();
    for (std::size_t k = 0; k < m; ++k) {
      // Compare against followers whose line direction is nearly equal,
      // including the wrap from pi back to 0.
      for (std::size_t step = 1; step < m; ++step) {
        const auto& a = dirs[k];
        const auto& b = dirs[(k + step) % m];
        double gap = b.first - a.first;
        if (k + step >= m) gap += kPi;
        if (gap > 1e-6) break;
        if (std::abs(orient(p, pts[a.second].pos(), pts[b.second].pos())) <= col_tol) {
          std::array<int, 3> t{static_cast<int>(i), a.second, b.second};
          std::sort(t.begin(), t.end());
          if (!worst || t < *worst) worst = t;
        }
      }
    }
  }
  if (worst) {
    rep.kind = GeneralPositionReport::Kind::Collinear;
    rep.indices = {(*worst)[0], (*worst)[1], (*worst)[2]};
  }
  return rep;
}

/// Indexed planar point set. Construction through `validated` enforces general
/// position; `unchecked` skips the quadratic check for trusted generators.
class PointSet {
 public:
  PointSet() = default;

  static PointSet validated(std::vector<Vec2> coords) {
    PointSet ps = unchecked(std::move(coords));
    auto rep = validate_general_position(ps.points_);
    if (!rep.ok()) throw GeneralPositionError(rep);
    return ps;
  }

  static PointSet unchecked(std::vector<Vec2> coords) {
    PointSet ps;
    ps.points_.reserve(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!std::isfinite(coords[i].x) || !std::isfinite(coords[i].y))
        throw InvalidArgument("point " + std::to_string(i) + " has a non-finite coordinate");
      ps.points_.push_back({static_cast<int>(i), coords[i].x, coords[i].y});
    }
    if (ps.points_.size() < 3) throw InvalidArgument("at least 3 points are required");
    ps.scale_ = bbox_diagonal(ps.points_);
    double cx = 0.0, cy = 0.0;
    double x0 = ps.points_[0].x, x1 = x0, y0 = ps.points_[0].y, y1 = y0;
    for (const auto& p : ps.points_) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
    cx = 0.5 * (x0 + x1);
    cy = 0.5 * (y0 + y1);
    ps.center_ = {cx, cy};
    return ps;
  }

  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  Vec2 pos(int i) const { return points_[static_cast<std::size_t>(i)].pos(); }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Bounding-box diagonal; the length unit for all tolerances.
  double scale() const { return scale_; }
  /// Bounding-box centre; used as origin for translation-invariant sums.
  Vec2 center() const { return center_; }

 private:
  std::vector<Point> points_;
  double scale_ = 0.0;
  Vec2 center_{};
};

/// Counter-clockwise convex hull (Andrew's monotone chain), as point ids.
/// Starts at the lexicographically smallest point.
inline std::vector<int> convex_hull(const PointSet& ps) {
  std::vector<int> idx(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return ps[a].x != ps[b].x ? ps[a].x < ps[b].x : ps[a].y < ps[b].y;
  });
  std::vector<int> h(2 * idx.size());
  std::size_t k = 0;
  for (int i : idx) {
    while (k >= 2 && orient(ps.pos(h[k - 2]), ps.pos(h[k - 1]), ps.pos(i)) <= 0.0) --k;
    h[k++] = i;
  }
  for (std::size_t t = idx.size() - 1, lo = k + 1; t-- > 0;) {
    const int i = idx[t];
    while (k >= lo && orient(ps.pos(h[k - 2]), ps.pos(h[k - 1]), ps.pos(i)) <= 0.0) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

inline double polygon_area(const PointSet& ps, const std::vector<int>& ring) {
  double s = 0.0;
  const Vec2 o = ps.center();
  for (std::size_t i = 0; i < ring.size(); ++i)
    s += cross(ps.pos(ring[i]) - o, ps.pos(ring[(i + 1) % ring.size()]) - o);
  return 0.5 * s;
}

// ---------------------------------------------------------------------------
// Circles

/// Intersection points of two circles; tangential contacts (|h^2| within a
/// relative 1e-12) yield a single point.
inline std::vector<Vec2> circle_circle(Vec2 c1, double r1, Vec2 c2, double r2) {
  std::vector<Vec2> out;
  const Vec2 d = c2 - c1;
  const double dist = norm(d);
  if (dist == 0.0) return out;
  const double a = (r1 * r1 - r2 * r2 + dist * dist) / (2.0 * dist);
  const double h2 = r1 * r1 - a * a;
  const double tol = 1e-12 * std::max(r1 * r1, r2 * r2);
  if (h2 < -tol) return out;
  const Vec2 base = c1 + (a / dist) * d;
  if (h2 <= tol) {
    out.push_back(base);
    return out;
  }
  const double h = std::sqrt(h2);
  const Vec2 perp{-d.y / dist, d.x / dist};
  out.push_back(base + h * perp);
  out.push_back(base - h * perp);
  return out;
}

}  // namespace orthohull

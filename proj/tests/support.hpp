#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "orthohull/orthohull.hpp"

namespace testing_support {

using namespace orthohull;

inline PointSet triangle() { return PointSet::validated({{0, 0}, {1, 0}, {0, 1}}); }
inline PointSet square() { return PointSet::validated({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

/// Six points whose hull splits into pieces around theta = pi/8.
inline PointSet pinwheel() {
  const std::vector<Vec2> base = {{2, 0}, {0, 2}, {-1, 1}, {1, -1}, {3.1, -2.3}, {-2.2, 3.3}};
  const double a = kPi / 8;
  std::vector<Vec2> out;
  for (auto p : base) out.push_back({p.x * std::cos(a) - p.y * std::sin(a), p.x * std::sin(a) + p.y * std::cos(a)});
  return PointSet::validated(out);
}

inline PointSet random_set(std::size_t n, std::uint64_t seed, Distribution d = Distribution::Uniform) {
  return generate(n, seed, d);
}

/// Mixed corpus: the three distributions, some instances squashed in y so
/// that staircases get long and overlaps common.
inline std::vector<PointSet> corpus(std::size_t n, int count, std::uint64_t salt = 0) {
  std::vector<PointSet> out;
  for (int i = 0; out.size() < static_cast<std::size_t>(count); ++i) {
    const auto base = generate(n, salt * 1000003u + static_cast<std::uint64_t>(i), static_cast<Distribution>(i % 3));
    if (i % 2 == 0) {
      out.push_back(base);
      continue;
    }
    SplitMix64 r(static_cast<std::uint64_t>(i) + salt);
    const double sy = 0.02 + 0.3 * r.uniform();
    std::vector<Vec2> c;
    for (const auto& p : base) c.push_back({p.x, p.y * sy});
    try {
      out.push_back(PointSet::validated(c));
    } catch (const GeneralPositionError&) {
    }
  }
  return out;
}

/// Exact area of the hull by horizontal slabs in the theta frame. On a
/// horizontal line at height y the hull is the single interval
/// [max(L+, L-), min(R+, R-)], where R+ / L+ are the largest / smallest x of
/// points at or above y and R- / L- the same for points at or below.
inline double slab_area(const PointSet& ps, double theta) {
  std::vector<Vec2> f;
  for (const auto& p : ps) f.push_back(rotate_frame(p.pos(), theta));
  std::vector<double> ys;
  for (const auto& q : f) ys.push_back(q.y);
  std::sort(ys.begin(), ys.end());
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    const double y = 0.5 * (ys[i] + ys[i + 1]);
    double lu = INFINITY, ru = -INFINITY, ld = INFINITY, rd = -INFINITY;
    for (const auto& q : f) {
      if (q.y > y) {
        lu = std::min(lu, q.x);
        ru = std::max(ru, q.x);
      } else {
        ld = std::min(ld, q.x);
        rd = std::max(rd, q.x);
      }
    }
    const double w = std::min(ru, rd) - std::max(lu, ld);
    if (w > 0) area += w * (ys[i + 1] - ys[i]);
  }
  return area;
}

/// Maximal points of the (theta + k pi/2)-frame by pairwise dominance.
inline std::vector<int> dominance_maxima(const PointSet& ps, double theta, int k) {
  std::vector<int> out;
  const double phi = theta + k * kHalfPi;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Vec2 a = rotate_frame(ps.pos(static_cast<int>(i)), phi);
    bool maximal = true;
    for (std::size_t j = 0; j < ps.size() && maximal; ++j) {
      const Vec2 b = rotate_frame(ps.pos(static_cast<int>(j)), phi);
      if (j != i && b.x > a.x && b.y > a.y) maximal = false;
    }
    if (maximal) out.push_back(static_cast<int>(i));
  }
  return out;
}

inline std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace testing_support

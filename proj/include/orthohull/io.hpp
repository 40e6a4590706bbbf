#pragma once

// Point files, instance generation, digests and SVG pictures.

#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "arc_chain.hpp"
#include "fixed_hull.hpp"
#include "geometry.hpp"
#include "oracle.hpp"

namespace orthohull {

class ParseError : public InvalidArgument {
 public:
  ParseError(int line, const std::string& what)
      : InvalidArgument("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// One point per line: two reals separated by a comma and/or whitespace.
/// '#' starts a comment; blank lines are ignored.
inline std::vector<Vec2> parse_coordinates(const std::string& text) {
  std::vector<Vec2> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    for (char& c : line)
      if (c == ',' || c == '\t' || c == '\r') c = ' ';
    std::istringstream ls(line);
    std::vector<std::string> fields;
    for (std::string f; ls >> f;) fields.push_back(f);
    if (fields.empty()) continue;
    if (fields.size() != 2) throw ParseError(lineno, "expected 2 fields, got " + std::to_string(fields.size()));
    double v[2];
    for (int i = 0; i < 2; ++i) {
      const char* s = fields[static_cast<std::size_t>(i)].c_str();
      char* end = nullptr;
      errno = 0;
      v[i] = std::strtod(s, &end);
      if (end == s || *end != '\0' || errno == ERANGE || !std::isfinite(v[i]))
        throw ParseError(lineno, "not a finite number: '" + fields[static_cast<std::size_t>(i)] + "'");
    }
    out.push_back({v[0], v[1]});
  }
  return out;
}

inline PointSet parse_points(const std::string& text) {
  auto coords = parse_coordinates(text);
  if (coords.size() < 3) throw InvalidArgument("at least 3 points are required, got " + std::to_string(coords.size()));
  return PointSet::validated(std::move(coords));
}

inline std::string format_points(const PointSet& ps) {
  std::string out;
  char buf[96];
  for (const auto& p : ps) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", p.x, p.y);
    out += buf;
  }
  return out;
}

/// FNV-1a over the 17-digit text form.
inline std::string digest(const PointSet& ps) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : format_points(ps)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

enum class Distribution { Uniform, Annulus, Convex };

inline Distribution parse_distribution(const std::string& s) {
  if (s == "uniform") return Distribution::Uniform;
  if (s == "annulus") return Distribution::Annulus;
  if (s == "convex") return Distribution::Convex;
  throw InvalidArgument("unknown distribution '" + s + "'");
}
inline const char* to_string(Distribution d) {
  switch (d) {
    case Distribution::Uniform:
      return "uniform";
    case Distribution::Annulus:
      return "annulus";
    case Distribution::Convex:
      return "convex";
  }
  return "?";
}

/// Instances up to this size are checked for general position (the check is
/// quadratic); larger ones rely on the measure-zero argument.
inline constexpr std::size_t kValidateUpTo = 2048;

inline PointSet generate(std::size_t n, std::uint64_t seed, Distribution dist) {
  if (n < 3) throw InvalidArgument("n must be at least 3");
  SplitMix64 rng(seed * 0x2545F4914F6CDD1Dull + static_cast<std::uint64_t>(dist) + 1);
  auto draw = [&]() -> Vec2 {
    switch (dist) {
      case Distribution::Uniform:
        return {rng.uniform(), rng.uniform()};
      case Distribution::Annulus: {
        const double r = std::sqrt(0.25 + 0.75 * rng.uniform());
        const double a = kTwoPi * rng.uniform();
        return {r * std::cos(a), r * std::sin(a)};
      }
      case Distribution::Convex: {
        const double a = kTwoPi * rng.uniform();
        return {std::cos(a), std::sin(a)};
      }
    }
    return {};
  };
  std::vector<Vec2> pts(n);
  for (auto& p : pts) p = draw();
  if (n <= kValidateUpTo) {
    for (int guard = 0;; ++guard) {
      std::vector<Point> tmp;
      for (std::size_t i = 0; i < n; ++i) tmp.push_back({static_cast<int>(i), pts[i].x, pts[i].y});
      auto rep = validate_general_position(tmp);
      if (rep.ok()) break;
      if (guard > 1000) throw InternalError("could not reach general position");
      pts[static_cast<std::size_t>(rep.indices.back())] = draw();
    }
  }
  return PointSet::unchecked(std::move(pts));
}

// ---------------------------------------------------------------------------
// SVG

/// Points, staircase chains with their corners, shaded overlap rectangles and
/// the dotted convex hull.
inline std::string svg_string(const PointSet& ps, const HullSnapshot& snap, double size = 600.0) {
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& p : ps) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-300});
  const double pad = 0.08 * span;
  const double s = size / (span + 2 * pad);
  auto X = [&](double x) { return (x - x0 + pad) * s; };
  auto Y = [&](double y) { return (y1 - y + pad) * s; };
  std::ostringstream o;
  o.precision(10);
  const double w = (x1 - x0 + 2 * pad) * s, h = (y1 - y0 + 2 * pad) * s;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
    << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  o << "<title>theta = " << snap.theta << ", area = " << snap.area << "</title>\n";

  for (const auto& r : snap.overlaps) {
    const double phi = class_frame(snap.theta, r.quadrant_class);
    const Vec2 fa = rotate_frame(r.apex_ab, phi), fc = rotate_frame(r.apex_cd, phi);
    const Vec2 c[4] = {unrotate_frame({fa.x, fa.y}, phi), unrotate_frame({fc.x, fa.y}, phi),
                       unrotate_frame({fc.x, fc.y}, phi), unrotate_frame({fa.x, fc.y}, phi)};
    o << "<polygon class=\"overlap\" fill=\"#d33\" fill-opacity=\"0.35\" stroke=\"none\" points=\"";
    for (const auto& q : c) o << X(q.x) << ',' << Y(q.y) << ' ';
    o << "\"/>\n";
  }

  const auto hull = convex_hull(ps);
  o << "<polygon class=\"convex-hull\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"3,3\" points=\"";
  for (int i : hull) o << X(ps[static_cast<std::size_t>(i)].x) << ',' << Y(ps[static_cast<std::size_t>(i)].y) << ' ';
  o << "\"/>\n";

  static const char* colors[4] = {"#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"};
  for (int k = 0; k < 4; ++k) {
    const auto& v = snap.staircases[static_cast<std::size_t>(k)].vertices;
    o << "<polyline class=\"staircase\" data-class=\"" << k << "\" fill=\"none\" stroke=\"" << colors[k]
      << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Vec2 p = ps.pos(v[i]);
      o << X(p.x) << ',' << Y(p.y) << ' ';
      if (i + 1 < v.size()) {
        const Vec2 a = apex_at(ps, v[i], v[i + 1], k, snap.theta);
        o << X(a.x) << ',' << Y(a.y) << ' ';
      }
    }
    o << "\"/>\n";
  }
  for (const auto& p : ps)
    o << "<circle class=\"point\" cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"3\" fill=\"#000\"/>\n";
  o << "</svg>\n";
  return o.str();
}

inline void emit_svg(const PointSet& ps, const HullSnapshot& snap, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << svg_string(ps, snap);
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace orthohull

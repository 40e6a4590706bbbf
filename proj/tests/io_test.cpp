#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <stack>

#include "support.hpp"

using namespace orthohull;
using namespace testing_support;

namespace {

// Tag balance and attribute quoting; enough to catch broken markup.
bool well_formed(const std::string& xml) {
  std::stack<std::string> open;
  std::size_t i = 0;
  while ((i = xml.find('<', i)) != std::string::npos) {
    const std::size_t j = xml.find('>', i);
    if (j == std::string::npos) return false;
    std::string tag = xml.substr(i + 1, j - i - 1);
    i = j + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    if (std::count(tag.begin(), tag.end(), '"') % 2) return false;
    if (tag[0] == '/') {
      if (open.empty() || open.top() != tag.substr(1)) return false;
      open.pop();
    } else if (tag.back() != '/') {
      open.push(tag.substr(0, tag.find(' ')));
    }
  }
  return open.empty();
}

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t c = 0;
  for (std::size_t i = 0; (i = s.find(what, i)) != std::string::npos; i += what.size()) ++c;
  return c;
}

}  // namespace

TEST(ParsePoints, Whitespace) { EXPECT_EQ(parse_points("0 0\n1 0\n0 1\n").size(), 3u); }

TEST(ParsePoints, CommaAndComments) {
  auto ps = parse_points("# comment\n0,0\n1,0\n\n0,1  # trailing\n");
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps.pos(2).y, 1.0);
}

TEST(ParsePoints, Duplicate) {
  try {
    parse_points("0 0\n0 0\n1 0\n");
    FAIL();
  } catch (const GeneralPositionError& e) {
    EXPECT_EQ(e.report().kind, GeneralPositionReport::Kind::Duplicate);
    EXPECT_EQ(e.report().indices, (std::vector<int>{0, 1}));
  }
}

TEST(ParsePoints, MalformedLineNumber) {
  try {
    parse_points("0 0\n1 0\n\n1 2 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  EXPECT_THROW(parse_points("0 0\n1 nan\n0 1\n"), ParseError);
  EXPECT_THROW(parse_points("0 0\n1 1e999\n0 1\n"), ParseError);
  EXPECT_THROW(parse_points("0 0\n1 0\n"), InvalidArgument);
}

TEST(FormatPoints, RoundTripsExactly) {
  for (auto d : {Distribution::Uniform, Distribution::Annulus, Distribution::Convex}) {
    auto ps = generate(100, 5, d);
    auto back = parse_points(format_points(ps));
    ASSERT_EQ(back.size(), ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
      EXPECT_EQ(back.pos(static_cast<int>(i)).x, ps.pos(static_cast<int>(i)).x);
      EXPECT_EQ(back.pos(static_cast<int>(i)).y, ps.pos(static_cast<int>(i)).y);
    }
    EXPECT_EQ(digest(back), digest(ps));
  }
}

TEST(Generate, Deterministic) {
  auto a = generate(8, 42, Distribution::Uniform), b = generate(8, 42, Distribution::Uniform);
  EXPECT_EQ(format_points(a), format_points(b));
  EXPECT_NE(format_points(a), format_points(generate(8, 43, Distribution::Uniform)));
}

TEST(Generate, ConvexPosition) {
  auto ps = generate(100, 7, Distribution::Convex);
  EXPECT_EQ(convex_hull(ps).size(), 100u);
}

TEST(Generate, AnnulusInGeneralPosition) {
  auto ps = generate(64, 1, Distribution::Annulus);
  std::vector<Point> pts(ps.begin(), ps.end());
  EXPECT_TRUE(validate_general_position(pts).ok());
  for (const auto& p : ps) {
    EXPECT_GE(norm(p.pos()), 0.5 - 1e-12);
    EXPECT_LE(norm(p.pos()), 1.0 + 1e-12);
  }
}

TEST(Generate, Rejects) {
  EXPECT_THROW(generate(2, 1, Distribution::Uniform), InvalidArgument);
  EXPECT_THROW(parse_distribution("gaussian"), InvalidArgument);
  EXPECT_EQ(parse_distribution("annulus"), Distribution::Annulus);
}

TEST(Svg, SquareAxisAligned) {
  auto s = svg_string(square(), hull_snapshot(square(), 0.0));
  EXPECT_TRUE(well_formed(s));
  EXPECT_EQ(count(s, "class=\"point\""), 4u);
  EXPECT_EQ(count(s, "class=\"staircase\""), 4u);
  EXPECT_EQ(count(s, "class=\"overlap\""), 0u);
  EXPECT_EQ(count(s, "class=\"convex-hull\""), 1u);
}

TEST(Svg, PinwheelShadesOverlap) {
  auto ps = pinwheel();
  auto snap = hull_snapshot(ps, kPi / 8);
  auto s = svg_string(ps, snap);
  EXPECT_TRUE(well_formed(s));
  EXPECT_GE(count(s, "class=\"overlap\""), 1u);
  EXPECT_EQ(count(s, "class=\"overlap\""), snap.overlaps.size());
}

TEST(Svg, RandomWellFormedAndWritten) {
  auto ps = random_set(30, 2);
  const std::string path = ::testing::TempDir() + "orthohull_io_test.svg";
  emit_svg(ps, hull_snapshot(ps, 0.4), path);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_TRUE(well_formed(ss.str()));
  std::remove(path.c_str());
  EXPECT_THROW(emit_svg(ps, hull_snapshot(ps, 0.4), "/nonexistent-dir/x.svg"), std::runtime_error);
}

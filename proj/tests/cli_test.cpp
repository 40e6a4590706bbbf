#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& stdin_text = "") {
  const std::string in = ::testing::TempDir() + "orthohull_cli_in.txt";
  {
    std::ofstream f(in);
    f << stdin_text;
  }
  const std::string cmd = std::string(ORTHOHULL_CLI) + " " + args + " < " + in + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const char* kTriangle = "0 0\n1 0\n0 1\n";
const char* kSquare = "0 0\n1 0\n1 1\n0 1\n";

}  // namespace

TEST(Cli, MinAreaTriangleJson) {
  auto r = run("min-area --report json", kTriangle);
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "orthohull/1");
  EXPECT_EQ(j["n"], 3);
  EXPECT_NEAR(j["min_area"].get<double>(), 0.0, 1e-12);
  EXPECT_NEAR(j["theta_opt"][0].get<double>(), 0.0, 1e-9);
  EXPECT_FALSE(j["period_expanded"].get<bool>());
  EXPECT_GT(j["events"].get<int>(), 0);
  EXPECT_TRUE(j.contains("timings"));
  EXPECT_TRUE(j.contains("digest"));
}

TEST(Cli, MinAreaAllPeriods) {
  auto r = run("min-area --all-periods --report json", kSquare);
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  ASSERT_EQ(j["theta_opt"].size(), 4u);
  EXPECT_NEAR(j["theta_opt"][0].get<double>(), 0.7853981633974483, 1e-9);
  EXPECT_TRUE(j["period_expanded"].get<bool>());
}

TEST(Cli, TextReportAndJsonInput) {
  auto r = run("min-area --json", "[[0,0],[1,0],{\"x\":0,\"y\":1}]");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("min_area"), std::string::npos);
}

TEST(Cli, InputContractViolationsExitTwo) {
  EXPECT_EQ(run("min-area", "0 0\n0 0\n1 0\n").code, 2);
  EXPECT_EQ(run("min-area", "0 0\n1 1\n2 2\n").code, 2);
  EXPECT_EQ(run("min-area", "0 0\nfoo 1\n1 0\n").code, 2);
  EXPECT_EQ(run("min-area", "0 0\n1 0\n").code, 2);
  EXPECT_EQ(run("min-area --json", "{not json").code, 2);
  EXPECT_EQ(run("min-area /nonexistent/file.txt").code, 2);
  EXPECT_EQ(run("min-area --no-such-flag", kTriangle).code, 2);
  EXPECT_EQ(run("", kTriangle).code, 2);
  EXPECT_EQ(run("gen --n 2 --seed 1").code, 2);
  EXPECT_EQ(run("gen --n 10 --seed 1 --dist gaussian").code, 2);
}

TEST(Cli, SvgWriteFailureIsInternal) {
  EXPECT_EQ(run("hull --theta 0 --svg /nonexistent-dir/x.svg", kSquare).code, 1);
}

TEST(Cli, HullAndSvg) {
  const std::string svg = ::testing::TempDir() + "orthohull_cli.svg";
  auto r = run("hull --theta 0 --report json --svg " + svg, kSquare);
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_NEAR(j["area"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j["staircases"].size(), 4u);
  std::ifstream f(svg);
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("<svg"), std::string::npos);
  std::remove(svg.c_str());
}

TEST(Cli, GenDeterministicAndReadable) {
  auto a = run("gen --n 50 --seed 9 --dist annulus");
  auto b = run("gen --n 50 --seed 9 --dist annulus");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 50);
  EXPECT_EQ(run("min-area", a.out).code, 0);
}

TEST(Cli, EventsJsonLines) {
  auto r = run("events", kSquare);
  ASSERT_EQ(r.code, 0);
  std::size_t lines = 0;
  std::size_t pos = 0, next;
  while ((next = r.out.find('\n', pos)) != std::string::npos) {
    auto j = json::parse(r.out.substr(pos, next - pos));
    EXPECT_TRUE(j["kind"] == "ins" || j["kind"] == "del");
    EXPECT_TRUE(j.contains("angle") && j.contains("point") && j.contains("class"));
    pos = next + 1;
    ++lines;
  }
  EXPECT_EQ(lines, 32u);
}

TEST(Cli, ArcsAndOverlapsJson) {
  auto pts = run("gen --n 30 --seed 4").out;
  auto a = run("arcs", pts);
  ASSERT_EQ(a.code, 0);
  auto ja = json::parse(a.out);
  ASSERT_FALSE(ja["arcs"].empty());
  for (const char* key : {"id", "u", "v", "class", "phi", "color", "link"}) EXPECT_TRUE(ja["arcs"][0].contains(key));
  auto o = run("overlaps", pts);
  ASSERT_EQ(o.code, 0);
  EXPECT_TRUE(json::parse(o.out).contains("intervals"));
}

TEST(Cli, OracleAgrees) {
  auto pts = run("gen --n 24 --seed 5").out;
  auto r = run("oracle --samples 20000 --mc 20000 --report json", pts);
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["agree"].get<bool>());
  EXPECT_TRUE(j.contains("grid_min") && j.contains("sweep_min") && j.contains("mc"));
}

TEST(Cli, Bench) {
  auto r = run("bench --sizes 100,200 --repeat 2 --report json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["rows"].size(), 2u);
}

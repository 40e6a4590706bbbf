#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orthohull/orthohull.hpp"

using json = nlohmann::ordered_json;
using namespace orthohull;

namespace {

constexpr const char* kSchema = "orthohull/1";

struct InputOptions {
  std::string path = "-";
  bool json_input = false;
};

struct ReportOptions {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// [[x, y], ...] or [{"x": .., "y": ..}, ...]
std::vector<Vec2> json_coordinates(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("points")) doc = doc["points"];
  if (!doc.is_array()) throw InvalidArgument("JSON input must be an array of points");
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& e = doc[i];
    const json* x = nullptr;
    const json* y = nullptr;
    if (e.is_array() && e.size() == 2) {
      x = &e[0];
      y = &e[1];
    } else if (e.is_object() && e.contains("x") && e.contains("y")) {
      x = &e["x"];
      y = &e["y"];
    }
    if (!x || !x->is_number() || !y->is_number())
      throw InvalidArgument("JSON point " + std::to_string(i) + " is not a pair of numbers");
    out.push_back({x->get<double>(), y->get<double>()});
  }
  return out;
}

PointSet load(const InputOptions& in) {
  const std::string text = read_all(in.path);
  if (!in.json_input) return parse_points(text);
  auto coords = json_coordinates(text);
  if (coords.size() < 3) throw InvalidArgument("at least 3 points are required, got " + std::to_string(coords.size()));
  return PointSet::validated(std::move(coords));
}

void add_input(CLI::App* cmd, InputOptions& in, ReportOptions& rep) {
  cmd->add_option("input", in.path, "point file, '-' for stdin")->capture_default_str();
  cmd->add_flag("--json", in.json_input, "input is a JSON array of [x, y] pairs");
  cmd->add_option("--report", rep.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json counts_by_kind(const SweepResult& r) {
  json j;
  for (int k = 0; k < 4; ++k)
    j[to_string(static_cast<SweepEventKind>(k))] = r.events_by_kind[static_cast<std::size_t>(k)];
  return j;
}

// ---------------------------------------------------------------------------

int cmd_min_area(const InputOptions& in, const ReportOptions& rep, bool all_periods) {
  const PointSet ps = load(in);
  auto t0 = std::chrono::steady_clock::now();
  const SweepTables t = build_tables(ps);
  auto t1 = std::chrono::steady_clock::now();
  SweepOptions opt;
  opt.expand_periods = all_periods;
  const SweepResult r = sweep_with_tables(ps, t, opt);
  const double sweep_s = seconds_since(t1);
  const double total_s = seconds_since(t0);
  if (rep.json()) {
    json j;
    j["schema"] = kSchema;
    j["digest"] = digest(ps);
    j["n"] = ps.size();
    j["theta_opt"] = r.theta_opt;
    j["min_area"] = r.min_area;
    j["events"] = r.events;
    j["events_by_kind"] = counts_by_kind(r);
    j["batches"] = r.batches;
    j["period_expanded"] = r.period_expanded;
    j["timings"] = {{"vertex_table", t.seconds[0]}, {"arcs", t.seconds[1]},    {"intersections", t.seconds[2]},
                    {"overlaps", t.seconds[3]},     {"sweep", sweep_s},         {"total", total_s}};
    print_json(j);
    return 0;
  }
  std::cout << "n          " << ps.size() << "\n";
  std::cout << "min_area   " << fmt(r.min_area) << "\n";
  std::cout << "theta_opt ";
  for (double th : r.theta_opt) std::cout << ' ' << fmt(th);
  std::cout << (all_periods ? "   (all periods)" : "   (mod pi/2)") << "\n";
  std::cout << "events     " << r.events << " in " << r.batches << " batches (";
  for (int k = 0; k < 4; ++k)
    std::cout << (k ? ", " : "") << to_string(static_cast<SweepEventKind>(k)) << ' '
              << r.events_by_kind[static_cast<std::size_t>(k)];
  std::cout << ")\n";
  std::printf("time       %.4f s (tables %.4f, sweep %.4f)\n", total_s, total_s - sweep_s, sweep_s);
  return 0;
}

int cmd_hull(const InputOptions& in, const ReportOptions& rep, double theta, const std::string& svg) {
  const PointSet ps = load(in);
  const HullSnapshot s = hull_snapshot(ps, theta);
  if (!svg.empty()) emit_svg(ps, s, svg);
  if (rep.json()) {
    json j;
    j["schema"] = kSchema;
    j["digest"] = digest(ps);
    j["theta"] = s.theta;
    j["area"] = s.area;
    j["polygon_area"] = s.polygon_area;
    j["triangle_area"] = s.triangle_area;
    j["overlap_area"] = s.overlap_area;
    j["staircases"] = json::array();
    for (const auto& st : s.staircases) j["staircases"].push_back(st.vertices);
    j["overlaps"] = json::array();
    for (const auto& o : s.overlaps)
      j["overlaps"].push_back({{"class", o.quadrant_class},
                               {"support", {o.a, o.b, o.c, o.d}},
                               {"apexes", {{o.apex_ab.x, o.apex_ab.y}, {o.apex_cd.x, o.apex_cd.y}}},
                               {"area", o.area}});
    print_json(j);
    return 0;
  }
  std::cout << "theta  " << fmt(s.theta) << "\narea   " << fmt(s.area) << "  (polygon " << fmt(s.polygon_area)
            << ", triangles " << fmt(s.triangle_area) << ", overlaps " << fmt(s.overlap_area) << ")\n";
  for (int k = 0; k < 4; ++k) {
    std::cout << "class " << k << ":";
    for (int v : s.staircases[static_cast<std::size_t>(k)].vertices) std::cout << ' ' << v;
    std::cout << '\n';
  }
  for (const auto& o : s.overlaps)
    std::cout << "overlap class " << o.quadrant_class << " (" << o.a << ',' << o.b << ")x(" << o.c << ',' << o.d
              << ") area " << fmt(o.area) << '\n';
  return 0;
}

int cmd_events(const InputOptions& in) {
  const PointSet ps = load(in);
  const auto t = build_vertex_table(ps);
  for (const auto& e : t.events) {
    json j = {{"angle", e.angle},
              {"kind", e.kind == VertexEventKind::Insertion ? "ins" : "del"},
              {"point", e.point},
              {"class", e.quadrant_class}};
    std::cout << j.dump() << '\n';
  }
  return 0;
}

int cmd_arcs(const InputOptions& in) {
  const PointSet ps = load(in);
  const auto chain = trace_arcs(ps, build_vertex_table(ps));
  json j;
  j["schema"] = kSchema;
  j["arcs"] = json::array();
  for (const auto& a : chain.arcs)
    j["arcs"].push_back({{"id", a.id},
                         {"u", a.u},
                         {"v", a.v},
                         {"class", a.quadrant_class},
                         {"phi", {a.phi.start(), a.phi.end()}},
                         {"color", to_string(a.color)},
                         {"link", a.link}});
  j["links"] = json::array();
  for (const auto& l : chain.links)
    j["links"].push_back({{"id", l.id},
                          {"edge", l.edge},
                          {"color", to_string(l.color)},
                          {"endpoints", {l.start_point, l.end_point}},
                          {"arcs", l.arcs}});
  print_json(j);
  return 0;
}

int cmd_overlaps(const InputOptions& in) {
  const PointSet ps = load(in);
  const SweepTables t = build_tables(ps);
  json j;
  j["schema"] = kSchema;
  j["link_pairs"] = t.candidate_pairs;
  j["intervals"] = json::array();
  for (const auto& o : t.overlap.intervals)
    j["intervals"].push_back({{"id", o.id},
                              {"interval", {o.interval.start(), o.interval.end()}},
                              {"arcs", {o.arc1, o.arc2}},
                              {"class", o.quadrant_class},
                              {"support", {o.a, o.b, o.c, o.d}}});
  print_json(j);
  return 0;
}

int cmd_oracle(const InputOptions& in, const ReportOptions& rep, int samples, int mc) {
  const PointSet ps = load(in);
  const SweepResult r = sweep_min_area(ps);
  const auto g = oracle::grid_min_area(ps, samples);
  const double tol = std::max(1e-9, 1e-6 * std::abs(g.refined_area));
  const bool agree = std::abs(r.min_area - g.refined_area) <= tol;
  const double theta = r.theta_opt.empty() ? 0.0 : r.theta_opt.front();
  oracle::McEstimate est;
  if (mc > 0) est = oracle::mc_area(ps, theta, mc, 1);
  if (rep.json()) {
    json j;
    j["schema"] = kSchema;
    j["digest"] = digest(ps);
    j["grid_min"] = g.refined_area;
    j["grid_theta"] = g.refined_theta;
    j["grid_samples"] = g.samples;
    j["sweep_min"] = r.min_area;
    j["sweep_theta"] = r.theta_opt;
    j["agree"] = agree;
    if (mc > 0) j["mc"] = {{"theta", theta}, {"estimate", est.estimate}, {"std_error", est.std_error}, {"samples", mc}};
    print_json(j);
  } else {
    std::cout << "grid_min   " << fmt(g.refined_area) << " at " << fmt(g.refined_theta) << " (" << g.samples
              << " samples)\n";
    std::cout << "sweep_min  " << fmt(r.min_area) << " at " << fmt(theta) << "\n";
    if (mc > 0) std::cout << "mc         " << fmt(est.estimate) << " +- " << fmt(est.std_error) << "\n";
    std::cout << "agree      " << (agree ? "yes" : "no") << "\n";
  }
  return agree ? 0 : 1;
}

int cmd_gen(std::size_t n, std::uint64_t seed, const std::string& dist, const std::string& out) {
  const PointSet ps = generate(n, seed, parse_distribution(dist));
  if (out.empty() || out == "-") {
    std::cout << format_points(ps);
    return 0;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open '" + out + "' for writing");
  f << format_points(ps);
  return 0;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

int cmd_bench(const std::vector<std::size_t>& sizes, int repeat, const std::string& dist, const ReportOptions& rep) {
  const Distribution d = parse_distribution(dist);
  json rows = json::array();
  if (!rep.json()) std::printf("%9s %10s %10s %10s %10s %10s %8s\n", "n", "vertex", "arcs", "intersect", "overlaps",
                               "sweep", "events");
  for (std::size_t n : sizes) {
    const PointSet ps = generate(n, 1, d);
    std::array<std::vector<double>, 5> t;
    std::size_t events = 0;
    for (int r = 0; r < repeat; ++r) {
      const SweepTables tab = build_tables(ps);
      auto t0 = std::chrono::steady_clock::now();
      const SweepResult res = sweep_with_tables(ps, tab);
      t[4].push_back(seconds_since(t0));
      for (int s = 0; s < 4; ++s) t[static_cast<std::size_t>(s)].push_back(tab.seconds[static_cast<std::size_t>(s)]);
      events = res.events;
    }
    std::array<double, 5> m{};
    for (std::size_t s = 0; s < 5; ++s) m[s] = median(t[s]);
    if (rep.json())
      rows.push_back({{"n", n},
                      {"vertex_table", m[0]},
                      {"arcs", m[1]},
                      {"intersections", m[2]},
                      {"overlaps", m[3]},
                      {"sweep", m[4]},
                      {"events", events}});
    else
      std::printf("%9zu %10.5f %10.5f %10.5f %10.5f %10.5f %8zu\n", n, m[0], m[1], m[2], m[3], m[4], events);
  }
  if (rep.json()) print_json({{"schema", kSchema}, {"distribution", dist}, {"repeat", repeat}, {"rows", rows}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-area orientations of the rectilinear convex hull"};
  app.require_subcommand(1);

  InputOptions in;
  ReportOptions rep;
  bool all_periods = false;
  double theta = 0.0;
  std::string svg;
  int samples = 100000, mc = 0;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string dist = "uniform", out;
  std::vector<std::size_t> sizes;
  int repeat = 3;

  auto* min_area = app.add_subcommand("min-area", "all orientations of minimum area");
  add_input(min_area, in, rep);
  min_area->add_flag("--all-periods", all_periods, "report the four representatives in [0, 2pi)");

  auto* hull = app.add_subcommand("hull", "hull at one orientation");
  add_input(hull, in, rep);
  hull->add_option("--theta", theta, "orientation in radians")->required();
  hull->add_option("--svg", svg, "write an SVG picture");

  auto* events = app.add_subcommand("events", "vertex events table as JSON lines");
  events->add_option("input", in.path, "point file, '-' for stdin");
  events->add_flag("--json", in.json_input, "input is a JSON array");

  auto* arcs = app.add_subcommand("arcs", "extremal arcs and links as JSON");
  arcs->add_option("input", in.path, "point file, '-' for stdin");
  arcs->add_flag("--json", in.json_input, "input is a JSON array");

  auto* overlaps = app.add_subcommand("overlaps", "overlapping intervals as JSON");
  overlaps->add_option("input", in.path, "point file, '-' for stdin");
  overlaps->add_flag("--json", in.json_input, "input is a JSON array");

  auto* orc = app.add_subcommand("oracle", "compare the sweep with a dense angular scan");
  add_input(orc, in, rep);
  orc->add_option("--samples", samples, "grid samples over [0, pi/2)")->check(CLI::Range(4, 100000000));
  orc->add_option("--mc", mc, "Monte-Carlo samples at the sweep minimizer")->check(CLI::Range(1000, 1000000000));

  auto* gen = app.add_subcommand("gen", "generate a point set");
  gen->add_option("--n", gen_n, "number of points")->required()->check(CLI::Range(std::size_t{3}, std::size_t{1} << 26));
  gen->add_option("--seed", gen_seed, "seed")->required();
  gen->add_option("--dist", dist, "distribution")->check(CLI::IsMember({"uniform", "annulus", "convex"}))
      ->capture_default_str();
  gen->add_option("--out", out, "output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "stage timings on generated sets");
  bench->add_option("--sizes", sizes, "comma-separated sizes")->required()->delimiter(',')
      ->check(CLI::Range(std::size_t{3}, std::size_t{1} << 26));
  bench->add_option("--repeat", repeat, "runs per size (median reported)")->check(CLI::Range(1, 1000))
      ->capture_default_str();
  bench->add_option("--dist", dist, "distribution")->check(CLI::IsMember({"uniform", "annulus", "convex"}))
      ->capture_default_str();
  bench->add_option("--report", rep.format, "output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*min_area) return cmd_min_area(in, rep, all_periods);
    if (*hull) return cmd_hull(in, rep, theta, svg);
    if (*events) return cmd_events(in);
    if (*arcs) return cmd_arcs(in);
    if (*overlaps) return cmd_overlaps(in);
    if (*orc) return cmd_oracle(in, rep, samples, mc);
    if (*gen) return cmd_gen(gen_n, gen_seed, dist, out);
    if (*bench) return cmd_bench(sizes, repeat, dist, rep);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const GeneralPositionError& e) {
    std::cerr << "error: input not in general position: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "brocard/brocard_triangles.hpp"
#include "brocard/families.hpp"
#include "brocard/io.hpp"
#include "brocard/svg.hpp"
#include "brocard/verify.hpp"

namespace brocard::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family = "center-top";
  std::optional<double> a, b, x1;
  std::vector<double> v1, v2;
  std::size_t n = 0;
  std::string track = "omega1";
  std::string out = "-";
  double phase = 0.5;
  double t = 0.7;
  std::string only;
};

void add_family_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "triangle family")
      ->check(CLI::IsMember({"center-top", "left-top", "antipodal", "ellipse-mounted",
                             "custom-mounted", "homothetic", "porism"}));
  cmd->add_option("--a", o.a, "outer semi-axis / circle radius");
  cmd->add_option("--b", o.b, "minor semi-axis");
  cmd->add_option("--x1", o.x1, "custom-mounted: V1 = (x1, 0)");
  cmd->add_option("--v1", o.v1, "custom-mounted: V1 as x,y")->expected(2)->delimiter(',');
  cmd->add_option("--v2", o.v2, "custom-mounted: V2 as x,y")->expected(2)->delimiter(',');
}

Family make_family(const Options& o) {
  FamilyParams p{o.a, o.b, o.x1, std::nullopt, std::nullopt};
  if (!o.v1.empty()) p.v1 = Point{o.v1[0], o.v1[1]};
  if (!o.v2.empty()) p.v2 = Point{o.v2[0], o.v2[1]};
  const FamilyKind kind = parse_family(o.family);
  if ((p.x1 || p.v1 || p.v2) && kind != FamilyKind::CustomMounted) {
    throw UsageError("--x1/--v1/--v2 apply to custom-mounted only");
  }
  return Family(kind, p);
}

// Writes `text` to the named file, or to `out` for "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

int cmd_locus(const Options& o, std::ostream& out) {
  if (o.n < 3) throw UsageError("--n must be at least 3");
  const Family fam = make_family(o);
  const LocusSamples s = sample_track(fam, parse_track(o.track), o.n, o.phase);
  std::ostringstream csv;
  write_locus_csv(csv, s);
  emit(o.out, csv.str(), out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  VerifyOptions vo{o.only, o.a, o.b};
  const auto& groups = verification_groups();
  if (!vo.only.empty() && std::find(groups.begin(), groups.end(), vo.only) == groups.end()) {
    throw UsageError("unknown group '" + vo.only + "'");
  }
  const VerificationReport rep = run_verification(vo);
  emit(o.out, rep.to_json().dump(2) + "\n", out);
  for (const auto& e : rep.entries()) {
    if (e.criterion != 0 && !e.pass) {
      err << "FAIL " << e.id << ": expected " << format_double(e.expected) << ", measured "
          << format_double(e.measured) << ", tol " << format_double(e.tol) << "\n";
    }
  }
  return rep.all_pass() ? kOk : kFailed;
}

std::vector<Point> circle_points(const Point& c, double r, int n = 256) {
  std::vector<Point> pts;
  for (int k = 0; k < n; ++k) {
    const double u = 2.0 * kPi * k / n;
    pts.push_back(c + Point{r * std::cos(u), r * std::sin(u)});
  }
  return pts;
}

void draw_triangle(SvgPanel& p, const Triangle& t, const Style& s) {
  p.polyline(std::span<const Point>(t.v.data(), 3), true, s);
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.family != "custom-mounted") throw UsageError("sweep requires --family custom-mounted");
  const double a = o.a.value_or(1.0);
  if (!(a > 0.0)) throw UsageError("--a must be positive");
  const std::size_t n = o.n == 0 ? 1024 : o.n;
  if (n < 16 || n % 2 != 0) throw UsageError("--n must be even and at least 16");

  constexpr int kCols = 4, kPanel = 240;
  SvgDocument doc(kCols * kPanel, kCols * kPanel);
  std::ostringstream table;
  table << "x1,A1_quadrature,A1_analytic,A2_quadrature,A2_analytic  (areas / pi a^2)\n";
  const Point lo{-1.15 * a, -1.25 * a}, hi{1.15 * a, 1.05 * a};
  for (int k = 0; k < kCols * kCols; ++k) {
    const double x1 = a * k / (kCols * kCols - 1.0);
    const auto cfg = MountedFamilyConfig::custom_mounted(a, x1);
    const LocusSamples l1 = sample_mounted_locus(cfg, Which::First, n, 0.5);
    const LocusSamples l2 = sample_mounted_locus(cfg, Which::Second, n, 0.5);
    const MountedAreas exact = analytic_areas(a, x1);
    const double disk = kPi * a * a;
    const double q1 = green_area(l2) / disk, q2 = green_area(l1) / disk;

    SvgPanel p((k % kCols) * kPanel, (k / kCols) * kPanel, kPanel, kPanel, lo, hi);
    p.circle({0.0, 0.0}, a, {"#999999", "none", 1.0, false});
    const auto p1 = l1.points(), p2 = l2.points();
    p.polyline(p1, true, {"#d62728", "none", 1.2, false});
    p.polyline(p2, true, {"#1f77b4", "none", 1.2, false});
    p.marker(cfg.v1, 2.5, "black");
    p.marker(cfg.v2, 2.5, "black");
    p.caption(6, 14, "x1 = " + fixed(x1, 3));
    p.caption(6, kPanel - 20, "A1/pi a^2 = " + fixed(q1) + " (" + fixed(exact.a1 / disk) + ")", 9);
    p.caption(6, kPanel - 8, "A2/pi a^2 = " + fixed(q2) + " (" + fixed(exact.a2 / disk) + ")", 9);
    doc.add(p);
    table << format_double(x1) << ',' << fixed(q1, 6) << ',' << fixed(exact.a1 / disk, 6) << ','
          << fixed(q2, 6) << ',' << fixed(exact.a2 / disk, 6) << "\n";
  }
  emit(o.out, doc.str(), out);
  if (o.out != "-") out << table.str();
  return kOk;
}

void render_mounted(const Family& fam, const Options& o, std::size_t n, std::vector<Point>& all,
                    std::vector<std::function<void(SvgPanel&)>>& draw) {
  const MountedFamilyConfig& cfg = fam.mounted();
  const LocusSamples l1 = sample_track(fam, parse_track("omega1"), n, 0.5);
  const LocusSamples l2 = sample_track(fam, parse_track("omega2"), n, 0.5);
  const auto p1 = l1.points(), p2 = l2.points();
  all.insert(all.end(), p1.begin(), p1.end());
  all.insert(all.end(), p2.begin(), p2.end());
  all.push_back({-cfg.a, -cfg.b});
  all.push_back({cfg.a, cfg.b});
  draw.push_back([=](SvgPanel& p) {
    p.ellipse({0.0, 0.0}, cfg.a, cfg.b, 0.0, {"#999999", "none", 1.0, false});
    p.polyline(p1, true, {"#d62728", "none", 1.5, false});
    p.polyline(p2, true, {"#1f77b4", "none", 1.5, false});
    p.marker(cfg.v1, 3, "black");
    p.marker(cfg.v2, 3, "black");
  });
  try {
    const Triangle tri = fam.triangle(o.t);
    const BrocardPair bp = brocard_points(tri);
    draw.push_back([=](SvgPanel& p) {
      draw_triangle(p, tri, {"black", "none", 1.0, false});
      p.marker(bp.omega1, 3, "#d62728");
      p.marker(bp.omega2, 3, "#1f77b4");
    });
  } catch (const DegenerateInput&) {
  }
  if (fam.kind() == FamilyKind::CenterTop) {
    // The equilateral member's Brocard points and the top vertex.
    const double a = cfg.a;
    const Triangle eq{Point{-a * std::sqrt(3.0) / 6.0, a / 2.0}, Point{a * std::sqrt(3.0) / 6.0, a / 2.0},
                      Point{0.0, a}};
    draw.push_back([=](SvgPanel& p) { draw_triangle(p, eq, {"#2ca02c", "none", 1.2, true}); });
  }
}

void render_homothetic(const Family& fam, const Options& o, std::size_t n, std::vector<Point>& all,
                       std::vector<std::function<void(SvgPanel&)>>& draw) {
  const HomotheticPair pair = fam.homothetic();
  const auto e1 = sample_homothetic_locus(pair, Which::First, n).points();
  const auto e2 = sample_homothetic_locus(pair, Which::Second, n).points();
  const auto [ap, bp] = t1_locus_axes(pair);
  const Triangle tri = periodic_vertices(pair, o.t);
  const Triangle t1 = first_brocard_triangle(tri).tri;
  const BrocardPair br = brocard_points(tri);
  all.push_back({-pair.a, -pair.b});
  all.push_back({pair.a, pair.b});
  draw.push_back([=](SvgPanel& p) {
    p.ellipse({0.0, 0.0}, pair.a, pair.b, 0.0, {"black", "none", 1.2, false});
    p.ellipse({0.0, 0.0}, pair.inner_a(), pair.inner_b(), 0.0, {"#999999", "none", 1.0, false});
    p.ellipse({0.0, 0.0}, ap, bp, 0.0, {"#2ca02c", "none", 1.0, true});
    p.polyline(e1, true, {"#d62728", "none", 1.5, false});
    p.polyline(e2, true, {"#1f77b4", "none", 1.5, false});
    draw_triangle(p, tri, {"black", "none", 1.0, false});
    draw_triangle(p, t1, {"#2ca02c", "none", 1.0, false});
    p.marker(br.omega1, 3, "#d62728");
    p.marker(br.omega2, 3, "#1f77b4");
  });
}

void render_porism(const Family& fam, const Options& o, std::vector<Point>& all,
                   std::vector<std::function<void(SvgPanel&)>>& draw) {
  const PorismConfig cfg = fam.porism();
  const PorismFrame frame = porism_frame(cfg);
  const Triangle tri = porism_triangle(cfg, o.t);
  const CircleGeom bc = brocard_circle(tri);
  const double c = cfg.c();
  std::vector<Point> derived;
  for (auto kind : {BrocardTriangleKind::First, BrocardTriangleKind::Second, BrocardTriangleKind::Seventh}) {
    const Triangle d = brocard_triangle(tri, kind).tri;
    derived.insert(derived.end(), d.v.begin(), d.v.end());
  }
  const auto outer = circle_points(frame.center, frame.R);
  all.insert(all.end(), outer.begin(), outer.end());
  draw.push_back([=](SvgPanel& p) {
    p.circle(frame.center, frame.R, {"black", "none", 1.2, false});
    p.ellipse({0.0, 0.0}, cfg.a, cfg.b, 0.0, {"#999999", "none", 1.0, false});
    p.circle(bc.center, bc.radius, {"#2ca02c", "none", 1.0, true});
    draw_triangle(p, tri, {"black", "none", 1.0, false});
    const char* colors[] = {"#2ca02c", "#9467bd", "#ff7f0e"};
    for (std::size_t i = 0; i < derived.size(); ++i) p.marker(derived[i], 2.5, colors[i / 3]);
    p.marker({-c, 0.0}, 3, "#d62728");
    p.marker({c, 0.0}, 3, "#1f77b4");
  });
}

int cmd_render(const Options& o, std::ostream& out) {
  const Family fam = make_family(o);
  const std::size_t n = o.n == 0 ? 512 : o.n;
  if (n < 16) throw UsageError("--n must be at least 16");
  std::vector<Point> all;
  std::vector<std::function<void(SvgPanel&)>> draw;
  switch (fam.kind()) {
    case FamilyKind::Homothetic:
      render_homothetic(fam, o, n, all, draw);
      break;
    case FamilyKind::Porism:
      render_porism(fam, o, all, draw);
      break;
    default:
      render_mounted(fam, o, n, all, draw);
  }
  const auto [lo, hi] = square_bounds(all);
  constexpr double kSize = 640;
  SvgDocument doc(kSize, kSize);
  SvgPanel panel(0, 0, kSize, kSize, lo, hi);
  for (const auto& f : draw) f(panel);
  panel.caption(10, 18, to_string(fam.kind()) + "  a = " + format_double(fam.a()) +
                            "  b = " + format_double(fam.b()), 12);
  doc.add(panel);
  emit(o.out, doc.str(), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brocard loci of triangle families"};
  app.name("brocard");
  app.require_subcommand(1);
  Options o;

  auto* locus = app.add_subcommand("locus", "sample a tracked point over one revolution (CSV)");
  add_family_options(locus, o);
  locus->add_option("--n", o.n, "sample count")->default_val(1024);
  locus->add_option("--track", o.track, "tracked point")->check(CLI::IsMember(track_names()));
  locus->add_option("--phase", o.phase, "grid offset in steps (default 0.5 avoids t = k pi/2)");
  locus->add_option("--out", o.out, "output path, - for stdout");

  auto* verify = app.add_subcommand("verify", "run the verification suite (JSON)");
  verify->add_option("--only", o.only, "run one claim group");
  verify->add_option("--a", o.a, "porism inellipse semi-major axis");
  verify->add_option("--b", o.b, "porism inellipse semi-minor axis");
  verify->add_option("--out", o.out, "output path, - for stdout");

  auto* sweep = app.add_subcommand("sweep", "4x4 panels of the custom-mounted loci as x1 runs over [0, a]");
  add_family_options(sweep, o);
  sweep->add_option("--n", o.n, "samples per locus (default 1024)");
  sweep->add_option("--out", o.out, "output SVG path, - for stdout");

  auto* render = app.add_subcommand("render", "draw one family (SVG)");
  add_family_options(render, o);
  render->add_option("--n", o.n, "samples per locus (default 512)");
  render->add_option("--t", o.t, "parameter of the drawn member");
  render->add_option("--out", o.out, "output SVG path, - for stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "brocard: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*locus) return cmd_locus(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*sweep) {
      if (o.family == "center-top" && !sweep->count("--family")) o.family = "custom-mounted";
      return cmd_sweep(o, out);
    }
    return cmd_render(o, out);
  } catch (const UsageError& e) {
    err << "brocard: " << e.what() << "\n";
    return kUsage;
  } catch (const OutOfRange& e) {
    err << "brocard: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateFamily& e) {
    err << "brocard: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "brocard: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace brocard::cli

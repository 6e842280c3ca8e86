#include "brocard/verify.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "brocard/brocard_triangles.hpp"
#include "brocard/circle_mounted.hpp"
#include "brocard/homothetic.hpp"
#include "brocard/locus.hpp"
#include "brocard/porism.hpp"
#include "brocard/sampling.hpp"

namespace brocard {

namespace {

constexpr std::size_t kAreaSamples = 4096;
constexpr std::size_t kResidualSamples = 256;

const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);

Point reflect_x(const Point& p) { return {-p.x, p.y}; }
Point swap_xy(const Point& p) { return {p.y, p.x}; }

// Value of f over ts that lies farthest from `expected`.
double worst(const std::vector<double>& ts, const std::function<double(double)>& f,
             double expected) {
  double w = expected, gap = -1.0;
  for (double t : ts) {
    const double v = f(t);
    if (!(std::abs(v - expected) <= gap)) {
      gap = std::abs(v - expected);
      w = v;
    }
  }
  return w;
}

double max_over(const std::vector<double>& ts, const std::function<double(double)>& f) {
  double m = 0.0;
  for (double t : ts) {
    const double v = f(t);
    if (!(v <= m)) m = v;
  }
  return m;
}

double relative_spread(const std::vector<double>& ts, const std::function<double(double)>& f) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
  for (double t : ts) {
    const double v = f(t);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
  }
  return (hi - lo) / std::abs(sum / static_cast<double>(ts.size()));
}

// Largest closed-form vs constructive discrepancy over the grid; degenerate
// members are skipped. `oracle_t2` maps t to the parameter at which the
// constructive Omega2 is compared.
double closed_form_gap(const MountedFamilyConfig& cfg, const std::vector<double>& ts,
                       const std::function<Point(double, Which)>& closed,
                       const std::function<double(double)>& oracle_t2) {
  double gap = 0.0;
  for (double t : ts) {
    try {
      const BrocardPair p1 = brocard_points(mounted_triangle(cfg, t));
      const BrocardPair p2 = brocard_points(mounted_triangle(cfg, oracle_t2(t)));
      gap = std::max(gap, distance(closed(t, Which::First), p1.omega1));
      gap = std::max(gap, distance(closed(t, Which::Second), p2.omega2));
    } catch (const DegenerateInput&) {
    }
  }
  return gap;
}

double identity_t(double t) { return t; }

void verify_prop1(VerificationReport& rep) {
  const std::string g = "prop1";
  const double a = 1.0;
  const auto cfg = MountedFamilyConfig::center_top(a);
  const LocusSamples l1 = sample_mounted_locus(cfg, Which::First, kAreaSamples, 0.5);
  const LocusSamples l2 = sample_mounted_locus(cfg, Which::Second, kAreaSamples, 0.5);

  rep.check_relative("prop1.area_omega1", g, 1, "center-top family: Omega1 locus area pi a^2/9",
                     kPi * a * a / 9.0, green_area(l1), 1e-6);
  rep.check_relative("prop1.area_omega2", g, 1, "center-top family: Omega2 locus area 2 pi a^2/9",
                     2.0 * kPi * a * a / 9.0, green_area(l2), 1e-6);
  const CircleFit fit = circle_fit(l1);
  rep.check_close("prop1.circle_radius_omega1", g, 1, "center-top family: Omega1 locus is a circle of radius a/3",
                  a / 3.0, fit.radius, 1e-9);
  rep.check_below("prop1.circle_center_omega1", g, 1,
                  "center-top family: Omega1 circle centered at (0, 2a/3)",
                  distance(fit.center, {0.0, 2.0 * a / 3.0}), 1e-9);
  rep.check_below("prop1.closed_form_vs_oracle", g, 1,
                  "center-top family: closed-form loci against cevian construction",
                  closed_form_gap(cfg, uniform_grid(1024),
                                  [a](double t, Which w) { return omega_center_top(a, t, w); },
                                  identity_t),
                  1e-9);
}

void verify_prop2(VerificationReport& rep) {
  const std::string g = "prop2";
  const double a = 1.0;
  const auto ts = uniform_grid(1024);
  auto diagonal_gap = [&](const std::function<double(double)>& pair_t) {
    return max_over(ts, [&](double t) {
      return distance(omega_left_top(a, t, Which::Second),
                      swap_xy(omega_left_top(a, pair_t(t), Which::First)));
    });
  };
  const double reflected = diagonal_gap([](double t) { return kPi / 2.0 - t; });
  auto& shifted = rep.check_below("prop2.diagonal_symmetry", g, 2,
                                  "left-top family: Omega2(t) = D(Omega1(t - pi/2))",
                                  diagonal_gap([](double t) { return t - kPi / 2.0; }), 1e-12);
  if (!shifted.pass) {
    std::ostringstream note;
    note.precision(3);
    note << "the closed forms are symmetric under sin <-> cos, so they pair at pi/2 - t "
         << "(max gap " << reflected << "); the loci are still D-images as sets";
    shifted.note = note.str();
  }
  rep.record("prop2.diagonal_symmetry_reflected", g,
             "left-top family: Omega2(t) = D(Omega1(pi/2 - t))", 0.0, reflected, 1e-12);
  rep.check_below("prop2.closed_form_vs_oracle", g, 2,
                  "left-top family: closed-form loci against cevian construction (traversal V1, P, V2)",
                  closed_form_gap(MountedFamilyConfig::left_top(a), ts,
                                  [a](double t, Which w) { return omega_left_top(a, t, w); },
                                  identity_t),
                  1e-9);
}

void verify_prop3(VerificationReport& rep) {
  const std::string g = "prop3";
  const double a = 1.0;
  const auto cfg = MountedFamilyConfig::antipodal(a);
  const LocusSamples l1 = sample_mounted_locus(cfg, Which::First, kAreaSamples, 0.5);
  const LocusSamples l2 = sample_mounted_locus(cfg, Which::Second, kAreaSamples, 0.5);

  rep.check_relative("prop3.area_omega1", g, 3, "antipodal family: Omega1 locus area pi a^2/sqrt5",
                     kPi * a * a / kSqrt5, green_area(l1), 1e-6);
  rep.check_relative("prop3.area_omega2", g, 3, "antipodal family: Omega2 locus area pi a^2/sqrt5",
                     kPi * a * a / kSqrt5, green_area(l2), 1e-6);

  double q1 = 0.0, q2 = 0.0, printed1 = 0.0, printed2 = 0.0, identity = 0.0;
  for (const auto& s : l1.samples) {
    q1 = std::max(q1, std::abs(antipodal_quartic(a, s.p, Which::First)));
    printed1 = std::max(printed1, std::abs(antipodal_quartic_printed(s.p)));
    identity = std::max(identity, std::abs(antipodal_quartic_printed(s.p) +
                                           antipodal_quartic(1.0, s.p, Which::Second)));
  }
  for (const auto& s : l2.samples) {
    q2 = std::max(q2, std::abs(antipodal_quartic(a, s.p, Which::Second)));
    printed2 = std::max(printed2, std::abs(antipodal_quartic_printed(s.p)));
  }
  rep.check_below("prop3.quartic_b1_on_omega1", g, 3, "antipodal family: B1 = 0 on the Omega1 locus",
                  q1, 1e-9);
  rep.check_below("prop3.quartic_b2_on_omega2", g, 3, "antipodal family: B2 = 0 on the Omega2 locus",
                  q2, 1e-9);

  const auto ts = uniform_grid(1024);
  rep.check_close("prop3.mirror_symmetry", g, 3, "antipodal family: Omega2(t) = R(Omega1(t)) exactly",
                  0.0,
                  max_over(ts,
                           [a](double t) {
                             return distance(omega_antipodal(a, t, Which::Second),
                                             reflect_x(omega_antipodal(a, t, Which::First)));
                           }),
                  0.0);
  rep.check_below("prop3.closed_form_vs_oracle", g, 3,
                  "antipodal family: closed-form loci against cevian construction (Omega2 at pi - t)",
                  closed_form_gap(cfg, ts,
                                  [a](double t, Which w) { return omega_antipodal(a, t, w); },
                                  [](double t) { return kPi - t; }),
                  1e-9);

  auto& printed = rep.check_below("prop3.printed_quartic_on_omega1", g, 3,
                                  "antipodal family: printed unit quartic vanishes on Omega1 samples",
                                  printed1, 1e-9);
  std::ostringstream note;
  note.precision(3);
  note << "printed quartic equals -B2 (max |printed + B2| = " << identity
       << "); on Omega2 samples its max residual is " << printed2
       << ", on Omega1 samples it is not a zero set";
  printed.note = note.str();
  rep.record("prop3.printed_quartic_on_omega2", g,
             "antipodal family: printed unit quartic evaluated on Omega2 samples", 0.0, printed2,
             1e-9);
}

void verify_prop4(VerificationReport& rep) {
  const std::string g = "prop4";
  const double a = 1.0;
  for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double x1 = f * a;
    const auto cfg = MountedFamilyConfig::custom_mounted(a, x1);
    const MountedAreas areas = analytic_areas(a, x1);
    const double g2 = green_area(sample_mounted_locus(cfg, Which::Second, kAreaSamples, 0.5));
    const double g1 = green_area(sample_mounted_locus(cfg, Which::First, kAreaSamples, 0.5));
    std::ostringstream tag;
    tag << "x1=" << x1;
    rep.check_relative("prop4.a1." + tag.str(), g, 4,
                       "mounted family V1=(x1,0), V2=(-a,0): analytic A1 vs quadrature (Omega2 locus)",
                       areas.a1, g2, 1e-5);
    rep.check_relative("prop4.a2." + tag.str(), g, 4,
                       "mounted family V1=(x1,0), V2=(-a,0): analytic A2 vs quadrature (Omega1 locus)",
                       areas.a2, g1, 1e-5);
  }
  const MountedAreas at_a = analytic_areas(a, a);
  rep.check_close("prop4.a1_over_pi_at_x1_eq_a", g, 4, "A1 / (pi a^2) = 1/sqrt5 at x1 = a",
                  1.0 / kSqrt5, at_a.a1 / (kPi * a * a), 1e-9);
  rep.check_close("prop4.a2_over_pi_at_x1_eq_a", g, 4, "A2 / (pi a^2) = 1/sqrt5 at x1 = a",
                  1.0 / kSqrt5, at_a.a2 / (kPi * a * a), 1e-9);
}

// Angle in [0, pi/2] between two axis directions.
double axis_angle(double t1, double t2) {
  double d = std::fmod(std::abs(t1 - t2), kPi);
  if (d > kPi / 2.0) d = kPi - d;
  return d;
}

void verify_prop5(VerificationReport& rep) {
  const std::string g = "prop5";
  const HomotheticPair pair{2.0, 1.0};
  const LocusSamples l1 = sample_homothetic_locus(pair, Which::First, kResidualSamples);
  const LocusSamples l2 = sample_homothetic_locus(pair, Which::Second, kResidualSamples);
  const ConicCoeffs e1 = brocard_locus_conic(pair, Which::First);
  const ConicCoeffs e2 = brocard_locus_conic(pair, Which::Second);

  double r1 = 0.0, r2 = 0.0;
  for (const auto& s : l1.samples) r1 = std::max(r1, std::abs(e1(s.p)));
  for (const auto& s : l2.samples) r2 = std::max(r2, std::abs(e2(s.p)));
  rep.check_below("prop5.e1_residual", g, 5, "homothetic pair: Omega1 samples satisfy E1", r1, 1e-9);
  rep.check_below("prop5.e2_residual", g, 5, "homothetic pair: Omega2 samples satisfy E2", r2, 1e-9);

  const FitReport f1 = fit_conic(l1);
  const FitReport f2 = fit_conic(l2);
  rep.check_close("prop5.axis_ratio", g, 5, "homothetic pair: E1 aspect ratio equals a/b",
                  pair.a / pair.b, f1.semi_axes.first / f1.semi_axes.second, 1e-9);
  rep.check_close("prop5.tilt", g, 5, "homothetic pair: angle between E1 and E2 axes",
                  std::atan(40.0 * kSqrt3 / 59.0), axis_angle(f1.tilt, f2.tilt), 1e-7);
  rep.check_below("prop5.fitted_vs_closed_form", g, 5,
                  "homothetic pair: fitted Omega1 conic against E1 coefficients",
                  conic_distance(f1.coeffs, e1), 1e-7);
}

void verify_remarks(VerificationReport& rep) {
  const std::string g = "remarks";
  const SpecialRatios r = special_ratio_roots();
  rep.check_close("remarks.tangency_ratio", g, 6,
                  "homothetic pair: Brocard loci internally tangent to the caustic at a/b = sqrt5",
                  kSqrt5, r.tangency, 1e-6);
  rep.check_close("remarks.intercept_ratio_approx", g, 6,
                  "homothetic pair: Brocard loci meet the y axis at b/2 near a/b = 3.8", 3.8,
                  r.intercept, 0.05);
  rep.check_close("remarks.intercept_ratio_exact", g, 6,
                  "homothetic pair: intercept ratio sqrt(7 + 2 sqrt13)",
                  intercept_ratio_closed_form(), r.intercept, 1e-9);
}

void verify_prop6(VerificationReport& rep) {
  const std::string g = "prop6";
  const HomotheticPair pair{2.0, 1.0};
  const auto ts = uniform_grid(64);
  const auto [ap, bp] = t1_locus_axes(pair);

  std::vector<Point> verts;
  double on_ellipse = 0.0, map_gap = 0.0;
  for (double t : ts) {
    const Triangle t1 = first_brocard_triangle(periodic_vertices(pair, t)).tri;
    for (std::size_t i = 0; i < 3; ++i) {
      verts.push_back(t1[i]);
      on_ellipse = std::max(on_ellipse, std::abs(t1[i].x * t1[i].x / (ap * ap) +
                                                 t1[i].y * t1[i].y / (bp * bp) - 1.0));
      double best = std::numeric_limits<double>::infinity();
      for (int j = 1; j <= 3; ++j) best = std::min(best, distance(t1[i], t1_vertex(pair, t, j)));
      map_gap = std::max(map_gap, best);
    }
  }
  const FitReport fit = fit_conic(std::span<const Point>(verts));
  rep.check_close("prop6.t1_locus_semi_major", g, 7,
                  "homothetic pair: T1 vertex locus semi-axis a'", 0.6, fit.semi_axes.first, 1e-10);
  rep.check_close("prop6.t1_locus_semi_minor", g, 7,
                  "homothetic pair: T1 vertex locus semi-axis b'", 0.3, fit.semi_axes.second, 1e-10);
  rep.check_below("prop6.t1_vertices_on_ellipse", g, 7,
                  "homothetic pair: constructive T1 vertices on x^2/a'^2 + y^2/b'^2 = 1", on_ellipse,
                  1e-10);
  rep.check_below("prop6.t1_vertex_map", g, 7,
                  "homothetic pair: T1 vertices equal k1 Rx P (up to relabeling)", map_gap, 1e-9);

  auto t1_area_at = [&](double t) {
    return area(first_brocard_triangle(periodic_vertices(pair, t)).tri);
  };
  const double area_expected = 27.0 * kSqrt3 / 200.0;
  rep.check_relative("prop6.t1_area", g, 7, "homothetic pair: invariant T1 area", area_expected,
                     worst(ts, t1_area_at, area_expected), 1e-10);
  rep.check_below("prop6.t1_area_spread", g, 7, "homothetic pair: T1 area relative spread",
                  relative_spread(ts, t1_area_at), 1e-10);
  rep.check_close("prop6.perimeter_ratio", g, 7,
                  "homothetic pair: 3-periodic to T1 similarity ratio", 10.0 / 3.0,
                  worst(ts,
                        [&](double t) {
                          const Triangle p = periodic_vertices(pair, t);
                          return perimeter(p) / perimeter(first_brocard_triangle(p).tri);
                        },
                        10.0 / 3.0),
                  1e-10);
  rep.check_below("prop6.a_prime_inside_caustic", g, 7, "homothetic pair: a' < a/2 (slack a' - a/2)",
                  ap - pair.a / 2.0, 0.0);
  rep.check_below("prop6.b_prime_inside_caustic", g, 7, "homothetic pair: b' < b/2 (slack b' - b/2)",
                  bp - pair.b / 2.0, 0.0);
}

void verify_conservation(VerificationReport& rep) {
  const std::string g = "conservation";
  const HomotheticPair pair{2.0, 1.0};
  const auto ts = uniform_grid(kResidualSamples);
  rep.check_below("conservation.brocard_angle", g, 8, "homothetic 3-periodics conserve the Brocard angle",
                  relative_spread(ts, [&](double t) { return brocard_angle(periodic_vertices(pair, t)); }),
                  1e-10);
  rep.check_below("conservation.area", g, 8, "homothetic 3-periodics conserve area",
                  relative_spread(ts, [&](double t) { return area(periodic_vertices(pair, t)); }),
                  1e-10);
  rep.check_below("conservation.sum_squared_sides", g, 8,
                  "homothetic 3-periodics conserve the sum of squared sidelengths",
                  relative_spread(ts, [&](double t) { return sum_squared_sides(periodic_vertices(pair, t)); }),
                  1e-10);
  double tangency = 0.0;
  for (const HomotheticPair p : {HomotheticPair{2.0, 1.0}, HomotheticPair{3.0, 1.0}, HomotheticPair{1.2, 1.0}}) {
    tangency = std::max(tangency, max_over(ts, [&](double t) {
      const Triangle tri = periodic_vertices(p, t);
      double r = 0.0;
      for (std::size_t i = 0; i < 3; ++i) {
        r = std::max(r, std::abs(ellipse_tangency_residual(tri[i], tri[(i + 1) % 3], p.inner_a(), p.inner_b())));
      }
      return r;
    }));
  }
  rep.check_below("conservation.poncelet_tangency", g, 8,
                  "homothetic pair: every side tangent to the (a/2, b/2) caustic", tangency, 1e-10);
}

void verify_appendix(VerificationReport& rep) {
  const std::string g = "appendix";
  const HomotheticPair pair{2.0, 1.0};
  const auto ts = uniform_grid(64);
  rep.check_below("appendix.circumradius_sq", g, 9, "homothetic pair: R^2 closed form in cos 6t",
                  max_over(ts,
                           [&](double t) {
                             const double r = circumcircle(periodic_vertices(pair, t)).radius;
                             return std::abs(r * r - circumradius_sq(pair, t));
                           }),
                  1e-10);
  rep.check_close("appendix.circle_area_ratio", g, 9,
                  "homothetic pair: circumcircle to Brocard circle area ratio", 100.0 / 9.0,
                  worst(ts,
                        [&](double t) {
                          const Triangle tri = periodic_vertices(pair, t);
                          const double q = circumcircle(tri).radius / brocard_circle(tri).radius;
                          return q * q;
                        },
                        100.0 / 9.0),
                  1e-9);
  const ConicCoeffs e = homothetic_brocard_circle_conic(pair);
  const auto [ap, bp] = t1_locus_axes(pair);
  rep.check_below("appendix.conic_semi_axes", g, 9,
                  "homothetic pair: Brocard-circle conic semi-axes equal the T1 locus axes",
                  std::max(std::abs(1.0 / std::sqrt(e.A) - ap), std::abs(1.0 / std::sqrt(e.C) - bp)),
                  1e-12);
  rep.record("appendix.x182_locus_residual", g,
             "homothetic pair: X182 samples evaluated on the Brocard-circle conic", 0.0,
             max_over(ts,
                      [&](double t) {
                        return std::abs(e(triangle_center(periodic_vertices(pair, t), Center::X182)));
                      }),
             1e-9);
}

void verify_porism(VerificationReport& rep, const PorismConfig& cfg) {
  const std::string g = "porism";
  const auto ts = uniform_grid(64);
  const PorismFrame frame = porism_frame(cfg);
  const double c = cfg.c();
  rep.check_below("porism.closure", g, 10, "Brocard porism: 3-periodic closes",
                  max_over(ts, [&](double th) { return porism_closure_error(cfg, th); }), 1e-9);
  rep.check_below("porism.foci_stationary", g, 10,
                  "Brocard porism: Brocard points stationary at the inellipse foci",
                  max_over(ts,
                           [&](double th) {
                             const BrocardPair bp = brocard_points(porism_triangle(cfg, th));
                             return std::max(distance(bp.omega1, {-c, 0.0}), distance(bp.omega2, {c, 0.0}));
                           }),
                  1e-8);
  rep.check_below("porism.brocard_angle", g, 10, "Brocard porism: cot(omega) = delta1 / b",
                  max_over(ts,
                           [&](double th) {
                             return std::abs(brocard_angle(porism_triangle(cfg, th)) - frame.omega);
                           }),
                  1e-10);
  rep.check_below("porism.circumcircle", g, 10, "Brocard porism: circumcircle (X3, R) fixed",
                  max_over(ts,
                           [&](double th) {
                             const CircleGeom cc = circumcircle(porism_triangle(cfg, th));
                             return std::max(distance(cc.center, frame.center), std::abs(cc.radius - frame.R));
                           }),
                  1e-9);
  rep.check_below("porism.brocard_circle_through_foci", g, 10,
                  "Brocard porism: Brocard circle passes through (+-c, 0)",
                  max_over(ts,
                           [&](double th) {
                             const CircleGeom bc = brocard_circle(porism_triangle(cfg, th));
                             return std::max(std::abs(distance(bc.center, {c, 0.0}) - bc.radius),
                                             std::abs(distance(bc.center, {-c, 0.0}) - bc.radius));
                           }),
                  1e-9);

  const PorismFrame unit = porism_frame({1.0, 1.0});
  rep.check_close("porism.unit_center_x", g, 10, "circular inellipse: circumcenter x", 0.0,
                  unit.center.x, 0.0);
  rep.check_close("porism.unit_center_y", g, 10, "circular inellipse: circumcenter y", 0.0,
                  unit.center.y, 0.0);
  rep.check_close("porism.unit_radius", g, 10, "circular inellipse: R = 2", 2.0, unit.R, 0.0);
  // atan2(1, sqrt3) rounds one ulp away from pi/6.
  rep.check_close("porism.unit_omega", g, 10, "circular inellipse: omega = pi/6", kPi / 6.0,
                  unit.omega, 1e-15);
}

void verify_equilateral(VerificationReport& rep) {
  const std::string g = "equilateral";
  const double a = 1.0;
  // P(t) = a(+-sqrt3/2, 1/2): the center-top member is equilateral and the
  // two loci meet there.
  const Point left = omega_center_top(a, 5.0 * kPi / 6.0, Which::First);
  const Point right = omega_center_top(a, kPi / 6.0, Which::First);
  const Point top{0.0, a};
  const double d1 = distance(left, right), d2 = distance(right, top), d3 = distance(top, left);
  rep.check_below("equilateral.remark_triangle", g, 12,
                  "center-top family: loci intersections and (0,a) form an equilateral",
                  std::max({d1, d2, d3}) - std::min({d1, d2, d3}), 1e-12);
  rep.check_below("equilateral.intersection_points", g, 12,
                  "center-top family: loci intersect at a(+-sqrt3/6, 1/2)",
                  std::max({distance(left, {-a * kSqrt3 / 6.0, a / 2.0}),
                            distance(right, {a * kSqrt3 / 6.0, a / 2.0}),
                            distance(left, omega_center_top(a, 5.0 * kPi / 6.0, Which::Second)),
                            distance(right, omega_center_top(a, kPi / 6.0, Which::Second))}),
                  1e-12);

  double coincide = 0.0;
  for (const Triangle& t : {Triangle{{0.0, 0.0}, {1.0, 0.0}, {0.5, kSqrt3 / 2.0}},
                            Triangle{{0.0, 0.0}, {0.5, kSqrt3 / 2.0}, {1.0, 0.0}},
                            Triangle{{0.0, 1.0}, {-kSqrt3 / 2.0, -0.5}, {kSqrt3 / 2.0, -0.5}},
                            Triangle{{0.0, 0.0}, {0.0, 1.0}, {kSqrt3 / 2.0, 0.5}}}) {
    const BrocardPair bp = brocard_points(t);
    const Point x2 = triangle_center(t, Center::X2);
    coincide = std::max({coincide, distance(bp.omega1, x2), distance(bp.omega2, x2)});
  }
  rep.check_below("equilateral.brocard_points_at_x2", g, 12,
                  "equilateral inputs: both Brocard points at the barycenter", coincide, 1e-12);
}

}  // namespace

const std::vector<std::string>& verification_groups() {
  static const std::vector<std::string> groups{
      "prop1", "prop2",        "prop3",    "prop4",  "prop5",        "remarks",
      "prop6", "conservation", "appendix", "porism", "observations", "equilateral"};
  return groups;
}

VerificationReport run_verification(const VerifyOptions& opts) {
  const auto& groups = verification_groups();
  if (!opts.only.empty() && std::find(groups.begin(), groups.end(), opts.only) == groups.end()) {
    throw OutOfRange("unknown verification group '" + opts.only + "'");
  }
  const PorismConfig porism{opts.a.value_or(1.0), opts.b.value_or(0.8)};
  auto want = [&](const char* name) { return opts.only.empty() || opts.only == name; };

  VerificationReport rep;
  if (want("prop1")) verify_prop1(rep);
  if (want("prop2")) verify_prop2(rep);
  if (want("prop3")) verify_prop3(rep);
  if (want("prop4")) verify_prop4(rep);
  if (want("prop5")) verify_prop5(rep);
  if (want("remarks")) verify_remarks(rep);
  if (want("prop6")) verify_prop6(rep);
  if (want("conservation")) verify_conservation(rep);
  if (want("appendix")) verify_appendix(rep);
  if (want("porism")) verify_porism(rep, porism);
  if (want("observations")) rep.append(porism_observations(porism, 128));
  if (want("equilateral")) verify_equilateral(rep);
  return rep;
}

}  // namespace brocard

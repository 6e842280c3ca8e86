#include "brocard/porism.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "brocard/brocard_triangles.hpp"
#include "brocard/locus.hpp"
#include "brocard/sampling.hpp"

namespace brocard {

double PorismConfig::c() const { return std::sqrt(a * a - b * b); }
double PorismConfig::delta1() const { return std::sqrt(4.0 * a * a - b * b); }

void PorismConfig::validate() const {
  if (!(b > 0.0) || !(a >= b)) throw OutOfRange("porism requires a >= b > 0");
}

PorismFrame porism_frame(const PorismConfig& cfg) {
  cfg.validate();
  const double d1 = cfg.delta1();
  return {{0.0, -cfg.c() * d1 / cfg.b}, 2.0 * cfg.a * cfg.a / cfg.b, std::atan2(cfg.b, d1)};
}

namespace {

// Next vertex along the tangent from q (on the circumcircle) to the inellipse.
Point tangent_chord_step(const PorismConfig& cfg, const PorismFrame& frame, const Point& q) {
  // Tangent at (a cos u, b sin u): x cos u / a + y sin u / b = 1 passes q.
  const double A = q.x / cfg.a, B = q.y / cfg.b;
  const double r = std::hypot(A, B);
  if (!(r > 1.0)) throw DegenerateInput("porism: start point is not outside the inellipse");
  const double u = std::atan2(B, A) + std::acos(1.0 / r);
  const Point touch{cfg.a * std::cos(u), cfg.b * std::sin(u)};
  const Point d = touch - q;
  const Point w = q - frame.center;
  const double s = -2.0 * dot(w, d) / dot(d, d);
  return q + d * s;
}

std::array<Point, 4> orbit(const PorismConfig& cfg, double theta) {
  const PorismFrame frame = porism_frame(cfg);
  std::array<Point, 4> pts;
  pts[0] = frame.center + Point{std::cos(theta), std::sin(theta)} * frame.R;
  for (std::size_t k = 1; k < 4; ++k) pts[k] = tangent_chord_step(cfg, frame, pts[k - 1]);
  return pts;
}

}  // namespace

double porism_closure_error(const PorismConfig& cfg, double theta) {
  const auto pts = orbit(cfg, theta);
  return distance(pts[3], pts[0]);
}

Triangle porism_triangle(const PorismConfig& cfg, double theta) {
  const auto pts = orbit(cfg, theta);
  const double err = distance(pts[3], pts[0]);
  const double R = porism_frame(cfg).R;
  if (!(err < 1e-9 * R)) {
    std::ostringstream os;
    os << "porism orbit failed to close: error " << err << " at theta " << theta;
    throw PorismClosureError(os.str());
  }
  return {pts[0], pts[1], pts[2]};
}

namespace {

struct Member {
  CircleGeom circle;
  std::array<Point, 9> derived;  // T1, T2, T7 vertices
  BrocardPair t2_points;
  Point t2_symmedian;
  BrocardPair t1_points;
  BrocardPair points;
};

Member analyze(const Triangle& t) {
  Member m;
  m.circle = brocard_circle(t);
  m.points = brocard_points(t);
  const Triangle t1 = first_brocard_triangle(t).tri;
  const Triangle t2 = brocard_triangle(t, BrocardTriangleKind::Second).tri;
  const Triangle t7 = brocard_triangle(t, BrocardTriangleKind::Seventh).tri;
  for (std::size_t i = 0; i < 3; ++i) {
    m.derived[i] = t1[i];
    m.derived[3 + i] = t2[i];
    m.derived[6 + i] = t7[i];
  }
  m.t1_points = brocard_points(t1);
  m.t2_points = brocard_points(t2);
  m.t2_symmedian = triangle_center(t2, Center::X6);
  return m;
}

double triple_area(const Point& a, const Point& b, const Point& c) {
  return 0.5 * std::abs(cross(b - a, c - a));
}

}  // namespace

VerificationReport porism_observations(const PorismConfig& cfg, std::size_t n) {
  cfg.validate();
  if (cfg.a == cfg.b) throw DegenerateFamily("porism_observations: a == b is the equilateral family");
  if (n < 3) throw OutOfRange("porism_observations: need at least 3 members");

  const auto thetas = uniform_grid(n);
  const auto members =
      map_parallel<Member>(thetas, [&cfg](double th) { return analyze(porism_triangle(cfg, th)); });

  const CircleGeom ref = members.front().circle;
  double circle_drift = 0.0, on_circle = 0.0, t2_drift1 = 0.0, t2_drift2 = 0.0;
  double collinear1 = 0.0, collinear2 = 0.0;
  std::vector<Point> t1_brocard;
  t1_brocard.reserve(2 * n);
  for (const auto& m : members) {
    circle_drift = std::max({circle_drift, distance(m.circle.center, ref.center),
                             std::abs(m.circle.radius - ref.radius)});
    for (const auto& v : m.derived) {
      on_circle = std::max(on_circle, std::abs(distance(v, ref.center) - ref.radius));
    }
    t2_drift1 = std::max(t2_drift1, distance(m.t2_points.omega1, members.front().t2_points.omega1));
    t2_drift2 = std::max(t2_drift2, distance(m.t2_points.omega2, members.front().t2_points.omega2));
    collinear1 = std::max(collinear1, triple_area(m.points.omega1, m.t2_symmedian, m.t2_points.omega1));
    collinear2 = std::max(collinear2, triple_area(m.points.omega2, m.t2_symmedian, m.t2_points.omega2));
    t1_brocard.push_back(m.t1_points.omega1);
    t1_brocard.push_back(m.t1_points.omega2);
  }
  const CircleFit c1 = circle_fit(std::span<const Point>(t1_brocard));

  const std::string group = "observations";
  VerificationReport rep;
  rep.check_below("porism.brocard_circle_drift", group, 11,
                  "Brocard porism: Brocard circle fixed over the family", circle_drift, 1e-8);
  rep.check_below("porism.t1_t2_t7_on_circle", group, 11,
                  "Brocard porism: T1, T2, T7 vertices trace the Brocard circle", on_circle, 1e-8);
  rep.check_below("porism.t2_omega1_stationary", group, 11,
                  "Brocard porism: first Brocard point of T2 stationary", t2_drift1, 1e-8);
  rep.check_below("porism.t2_omega2_stationary", group, 11,
                  "Brocard porism: second Brocard point of T2 stationary", t2_drift2, 1e-8);
  rep.check_below("porism.collinear_omega1_x6_t2", group, 11,
                  "Brocard porism: (Omega1, X6 of T2, Omega1 of T2) collinear", collinear1, 1e-10);
  rep.check_below("porism.collinear_omega2_x6_t2", group, 11,
                  "Brocard porism: (Omega2, X6 of T2, Omega2 of T2) collinear", collinear2, 1e-10);
  auto& fit = rep.check_below("porism.t1_brocard_points_common_circle", group, 11,
                              "Brocard porism: Brocard points of T1 share one circle", c1.rms, 1e-7);
  std::ostringstream os;
  os.precision(12);
  os << "circle center (" << c1.center.x << ", " << c1.center.y << "), radius " << c1.radius;
  fit.note = os.str();
  return rep;
}

}  // namespace brocard

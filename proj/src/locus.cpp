#include "brocard/locus.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace brocard {

std::vector<Point> LocusSamples::points() const {
  std::vector<Point> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.p);
  return out;
}

ConicCoeffs ConicCoeffs::normalized() const {
  const std::array<double, 6> c{A, B, C, D, E, F};
  double n = 0.0;
  for (double v : c) n += v * v;
  n = std::sqrt(n);
  if (n == 0.0) throw DegenerateFit("conic: all coefficients zero");
  double sign = 1.0;
  for (double v : c) {
    if (v != 0.0) {
      sign = v > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  const double s = sign / n;
  return {A * s, B * s, C * s, D * s, E * s, F * s};
}

ConicCoeffs ConicCoeffs::with_unit_constant() const {
  if (F == 0.0) throw DegenerateFit("conic: zero constant term");
  const double s = -1.0 / F;
  return {A * s, B * s, C * s, D * s, E * s, -1.0};
}

double conic_distance(const ConicCoeffs& a, const ConicCoeffs& b) {
  const ConicCoeffs p = a.normalized(), q = b.normalized();
  return std::max({std::abs(p.A - q.A), std::abs(p.B - q.B), std::abs(p.C - q.C),
                   std::abs(p.D - q.D), std::abs(p.E - q.E), std::abs(p.F - q.F)});
}

std::string to_string(ConicClass c) {
  switch (c) {
    case ConicClass::Circle:
      return "circle";
    case ConicClass::Ellipse:
      return "ellipse";
    case ConicClass::Parabola:
      return "parabola";
    case ConicClass::Hyperbola:
      return "hyperbola";
    case ConicClass::Degenerate:
      return "degenerate";
  }
  return "degenerate";
}

namespace {

Point conic_center(const ConicCoeffs& q) {
  // Gradient zero: [2A B; B 2C] c = -[D; E]
  const double det = 4.0 * q.A * q.C - q.B * q.B;
  if (det == 0.0) throw DegenerateFit("conic has no unique center");
  return {(-2.0 * q.C * q.D + q.B * q.E) / det, (q.B * q.D - 2.0 * q.A * q.E) / det};
}

}  // namespace

ConicClass classify(const ConicCoeffs& raw) {
  const ConicCoeffs q = raw.normalized();
  const double scale = std::max({std::abs(q.A), std::abs(q.B), std::abs(q.C)});
  if (scale < 1e-14) return ConicClass::Degenerate;

  Eigen::Matrix3d m;
  m << q.A, q.B / 2, q.D / 2, q.B / 2, q.C, q.E / 2, q.D / 2, q.E / 2, q.F;
  if (std::abs(m.determinant()) < 1e-12 * scale * scale * scale) return ConicClass::Degenerate;

  const double disc = q.discriminant() / (scale * scale);
  if (std::abs(disc) < 1e-10) return ConicClass::Parabola;
  if (disc > 0.0) return ConicClass::Hyperbola;

  // Real ellipse iff the value at the center has the opposite sign of A.
  const double f0 = q(conic_center(q));
  if (f0 * q.A >= 0.0) return ConicClass::Degenerate;
  if (std::abs(q.B) < 1e-9 * scale && std::abs(q.A - q.C) < 1e-9 * scale) {
    return ConicClass::Circle;
  }
  return ConicClass::Ellipse;
}

ConicGeometry ellipse_geometry(const ConicCoeffs& raw) {
  ConicCoeffs q = raw.normalized();
  const ConicClass cls = classify(q);
  if (cls != ConicClass::Ellipse && cls != ConicClass::Circle) {
    throw DegenerateFit("ellipse_geometry: conic is a " + to_string(cls));
  }
  const Point c = conic_center(q);
  double f0 = q(c);
  Eigen::Matrix2d m;
  m << q.A, q.B / 2, q.B / 2, q.C;
  if (q.A < 0.0) {
    m = -m;
    f0 = -f0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
  const Eigen::Vector2d lambda = es.eigenvalues();  // ascending
  const Eigen::Vector2d major = es.eigenvectors().col(0);
  ConicGeometry g;
  g.center = c;
  g.semi_major = std::sqrt(-f0 / lambda(0));
  g.semi_minor = std::sqrt(-f0 / lambda(1));
  double tilt = std::atan2(major(1), major(0));
  if (tilt <= -kPi / 2) tilt += kPi;
  if (tilt > kPi / 2) tilt -= kPi;
  g.tilt = tilt;
  return g;
}

namespace {

struct Normalization {
  Point mean;
  double scale = 1.0;
};

Normalization normalization_of(std::span<const Point> pts) {
  Point m{0.0, 0.0};
  for (const auto& p : pts) m = m + p;
  m = m / static_cast<double>(pts.size());
  double r = 0.0;
  for (const auto& p : pts) r += distance(p, m);
  r /= static_cast<double>(pts.size());
  return {m, r > 0.0 ? r / std::sqrt(2.0) : 1.0};
}

double bbox_diagonal(std::span<const Point> pts) {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  for (const auto& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  return std::hypot(x1 - x0, y1 - y0);
}

}  // namespace

FitReport fit_conic(std::span<const Point> pts) {
  if (pts.size() < 6) throw DegenerateFit("fit_conic: need at least 6 points");
  const auto [m, s] = normalization_of(pts);

  Eigen::MatrixXd design(static_cast<Eigen::Index>(pts.size()), 6);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double u = (pts[i].x - m.x) / s;
    const double v = (pts[i].y - m.y) / s;
    design.row(static_cast<Eigen::Index>(i)) << u * u, u * v, v * v, u, v, 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  if (sv(4) <= 1e-10 * sv(0)) {
    throw DegenerateFit("fit_conic: rank-deficient design (collinear or repeated points)");
  }
  const Eigen::VectorXd n = svd.matrixV().col(5);
  const double a = n(0), b = n(1), c = n(2), d = n(3), e = n(4), f = n(5);

  // Undo u = (x - mx) / s, v = (y - my) / s.
  const double s2 = s * s;
  ConicCoeffs q;
  q.A = a / s2;
  q.B = b / s2;
  q.C = c / s2;
  q.D = (-2.0 * a * m.x - b * m.y) / s2 + d / s;
  q.E = (-b * m.x - 2.0 * c * m.y) / s2 + e / s;
  q.F = (a * m.x * m.x + b * m.x * m.y + c * m.y * m.y) / s2 - (d * m.x + e * m.y) / s + f;

  FitReport rep;
  rep.coeffs = q.normalized();
  rep.rms_residual = implicit_residual(rep.coeffs, pts).rms;
  const double diag = bbox_diagonal(pts);
  rep.is_conic = rep.rms_residual <= 1e-4 * diag * diag;
  rep.classification = classify(rep.coeffs);
  if (rep.classification == ConicClass::Ellipse || rep.classification == ConicClass::Circle) {
    const ConicGeometry g = ellipse_geometry(rep.coeffs);
    rep.center = g.center;
    rep.semi_axes = {g.semi_major, g.semi_minor};
    rep.tilt = g.tilt;
  }
  return rep;
}

FitReport fit_conic(const LocusSamples& samples) {
  const auto pts = samples.points();
  return fit_conic(std::span<const Point>(pts));
}

CircleFit circle_fit(std::span<const Point> pts) {
  if (pts.size() < 3) throw DegenerateFit("circle_fit: need at least 3 points");
  const auto [m, s] = normalization_of(pts);

  // u^2 + v^2 + D u + E v + F = 0 in normalized coordinates.
  Eigen::MatrixXd design(static_cast<Eigen::Index>(pts.size()), 3);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double u = (pts[i].x - m.x) / s;
    const double v = (pts[i].y - m.y) / s;
    const auto row = static_cast<Eigen::Index>(i);
    design.row(row) << u, v, 1.0;
    rhs(row) = -(u * u + v * v);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  if (sv(2) <= 1e-12 * sv(0)) throw DegenerateFit("circle_fit: collinear points");
  const Eigen::Vector3d sol = svd.solve(rhs);

  const Point cu{-sol(0) / 2.0, -sol(1) / 2.0};
  const double r2 = dot(cu, cu) - sol(2);
  if (r2 <= 0.0) throw DegenerateFit("circle_fit: imaginary circle");

  CircleFit fit;
  fit.center = m + cu * s;
  fit.radius = std::sqrt(r2) * s;
  double acc = 0.0;
  for (const auto& p : pts) {
    const double r = distance(p, fit.center) - fit.radius;
    acc += r * r;
  }
  fit.rms = std::sqrt(acc / static_cast<double>(pts.size()));
  return fit;
}

CircleFit circle_fit(const LocusSamples& samples) {
  const auto pts = samples.points();
  return circle_fit(std::span<const Point>(pts));
}

namespace {

double uniform_step(const LocusSamples& samples) {
  if (!samples.closed) throw OpenCurveError("green_area: curve is not closed");
  const std::size_t n = samples.size();
  if (n < 6 || n % 2 != 0) {
    throw std::invalid_argument("green_area: need an even number (>= 6) of samples");
  }
  const double h = samples.period / static_cast<double>(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double dt = samples.samples[k + 1].t - samples.samples[k].t;
    if (std::abs(dt - h) > 1e-9 * h) {
      throw std::invalid_argument("green_area: samples are not uniformly spaced over one period");
    }
  }
  return h;
}

double simpson_periodic(std::span<const Point> pts, std::span<const Point> deriv, double h) {
  const std::size_t n = pts.size();
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double f = 0.5 * (pts[k].x * deriv[k].y - pts[k].y * deriv[k].x);
    acc += (k % 2 == 0 ? 2.0 : 4.0) * f;
  }
  return acc * h / 3.0;
}

}  // namespace

double green_area(const LocusSamples& samples) {
  const double h = uniform_step(samples);
  const auto pts = samples.points();
  const std::size_t n = pts.size();
  std::vector<Point> deriv(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Point& p2 = pts[(k + 2) % n];
    const Point& p1 = pts[(k + 1) % n];
    const Point& m1 = pts[(k + n - 1) % n];
    const Point& m2 = pts[(k + n - 2) % n];
    deriv[k] = (-1.0 * p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * h);
  }
  return simpson_periodic(pts, deriv, h);
}

double green_area(const LocusSamples& samples, std::span<const Point> derivatives) {
  const double h = uniform_step(samples);
  if (derivatives.size() != samples.size()) {
    throw std::invalid_argument("green_area: derivative count mismatch");
  }
  const auto pts = samples.points();
  return simpson_periodic(pts, derivatives, h);
}

ResidualStats implicit_residual(const ConicCoeffs& q, std::span<const Point> pts) {
  const ConicCoeffs nq = q.normalized();
  ResidualStats st;
  double acc = 0.0;
  for (const auto& p : pts) {
    const double r = std::abs(nq(p));
    st.max = std::max(st.max, r);
    acc += r * r;
  }
  if (!pts.empty()) st.rms = std::sqrt(acc / static_cast<double>(pts.size()));
  return st;
}

ResidualStats implicit_residual(const ConicCoeffs& q, const LocusSamples& samples) {
  const auto pts = samples.points();
  return implicit_residual(q, std::span<const Point>(pts));
}

}  // namespace brocard

#include "brocard/homothetic.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <functional>
#include <string>

#include "brocard/sampling.hpp"

namespace brocard {

namespace {

void require_valid(const HomotheticPair& pair) {
  if (!(pair.b > 0.0) || !(pair.a >= pair.b)) {
    throw OutOfRange("homothetic pair requires a >= b > 0");
  }
}

void require_nondegenerate_family(const HomotheticPair& pair, const char* what) {
  require_valid(pair);
  if (pair.a == pair.b) {
    throw DegenerateFamily(std::string(what) + ": a == b makes the formula singular");
  }
}

}  // namespace

Triangle periodic_vertices(const HomotheticPair& pair, double t) {
  require_valid(pair);
  Triangle tri;
  for (std::size_t k = 0; k < 3; ++k) {
    const double u = t + 2.0 * kPi * static_cast<double>(k) / 3.0;
    tri[k] = {pair.a * std::cos(u), pair.b * std::sin(u)};
  }
  return tri;
}

double ellipse_tangency_residual(const Point& p, const Point& q, double ea, double eb) {
  const Point d = q - p;
  const double len = norm(d);
  if (len == 0.0) throw DegenerateInput("ellipse_tangency_residual: coincident points");
  const Point n{-d.y / len, d.x / len};
  const double dist = dot(n, p);
  return ea * ea * n.x * n.x + eb * eb * n.y * n.y - dist * dist;
}

ConicCoeffs brocard_locus_conic(const HomotheticPair& pair, Which which) {
  require_nondegenerate_family(pair, "brocard_locus_conic");
  const double a2 = pair.a * pair.a, b2 = pair.b * pair.b;
  const double d = a2 - b2;
  ConicCoeffs q;
  q.A = (7.0 * a2 * a2 + 6.0 * a2 * b2 + 3.0 * b2 * b2) / (a2 * d * d);
  q.C = (3.0 * a2 * a2 + 6.0 * a2 * b2 + 7.0 * b2 * b2) / (b2 * d * d);
  const double xy = 4.0 * std::sqrt(3.0) * (a2 + b2) / (pair.a * pair.b * d);
  q.B = which == Which::First ? -xy : xy;
  q.F = -1.0;
  return q;
}

double locus_tilt_angle(const HomotheticPair& pair) {
  require_nondegenerate_family(pair, "locus_tilt_angle");
  const double a2 = pair.a * pair.a, b2 = pair.b * pair.b;
  return std::atan(4.0 * std::sqrt(3.0) * (a2 + b2) * pair.a * pair.b /
                   (3.0 * a2 * a2 + 2.0 * a2 * b2 + 3.0 * b2 * b2));
}

double t1_scale(const HomotheticPair& pair) {
  require_nondegenerate_family(pair, "t1_scale");
  const double a2 = pair.a * pair.a, b2 = pair.b * pair.b;
  return (a2 - b2) / (2.0 * (a2 + b2));
}

Point t1_vertex(const HomotheticPair& pair, double t, int i) {
  if (i < 1 || i > 3) throw OutOfRange("t1_vertex: index must be 1, 2 or 3");
  const double k1 = t1_scale(pair);
  const Point p = periodic_vertices(pair, t)[static_cast<std::size_t>(i % 3)];
  return {-k1 * p.x, k1 * p.y};
}

std::pair<double, double> t1_locus_axes(const HomotheticPair& pair) {
  const double k1 = t1_scale(pair);
  return {pair.a * k1, pair.b * k1};
}

double t1_area(const HomotheticPair& pair) {
  require_valid(pair);
  const double a2 = pair.a * pair.a, b2 = pair.b * pair.b;
  const double d = a2 - b2, s = a2 + b2;
  return 3.0 * std::sqrt(3.0) * pair.a * pair.b * d * d / (16.0 * s * s);
}

double similarity_ratio(const HomotheticPair& pair) {
  require_nondegenerate_family(pair, "similarity_ratio");
  const double a2 = pair.a * pair.a, b2 = pair.b * pair.b;
  return 2.0 * (a2 + b2) / (a2 - b2);
}

double circumradius_sq(const HomotheticPair& pair, double t) {
  if (!(pair.a > 0.0) || !(pair.b > 0.0)) throw OutOfRange("circumradius_sq: a, b must be > 0");
  const double a2 = pair.a * pair.a, b2 = pair.b * pair.b;
  const double d = a2 - b2;
  const double den = 32.0 * a2 * b2;
  return -d * d * d * std::cos(6.0 * t) / den + (a2 + b2) * (a2 * a2 + 14.0 * a2 * b2 + b2 * b2) / den;
}

double brocard_circle_area_ratio(const HomotheticPair& pair) {
  require_nondegenerate_family(pair, "brocard_circle_area_ratio");
  const double a2 = pair.a * pair.a, b2 = pair.b * pair.b;
  const double r = (a2 + b2) / (a2 - b2);
  return 4.0 * r * r;
}

ConicCoeffs homothetic_brocard_circle_conic(const HomotheticPair& pair) {
  require_nondegenerate_family(pair, "homothetic_brocard_circle_conic");
  const double a2 = pair.a * pair.a, b2 = pair.b * pair.b;
  const double d = a2 - b2, s = a2 + b2;
  ConicCoeffs q;
  q.A = 4.0 * s * s / (a2 * d * d);
  q.C = 4.0 * s * s / (b2 * d * d);
  q.F = -1.0;
  return q;
}

double e1_y_intercept(const HomotheticPair& pair) {
  require_nondegenerate_family(pair, "e1_y_intercept");
  const double a2 = pair.a * pair.a, b2 = pair.b * pair.b;
  return pair.b * (a2 - b2) / std::sqrt(3.0 * a2 * a2 + 6.0 * a2 * b2 + 7.0 * b2 * b2);
}

double e1_caustic_max(const HomotheticPair& pair) {
  const ConicCoeffs q = brocard_locus_conic(pair, Which::First);
  Eigen::Matrix2d m;
  m << q.A, q.B / 2.0, q.B / 2.0, q.C;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
  const Eigen::Vector2d lam = es.eigenvalues();
  const Eigen::Matrix2d rot = es.eigenvectors();
  const double ia = 2.0 / pair.a, ib = 2.0 / pair.b;

  auto value = [&](double u) {
    const Eigen::Vector2d local{std::cos(u) / std::sqrt(lam(0)), std::sin(u) / std::sqrt(lam(1))};
    const Eigen::Vector2d p = rot * local;
    return (ia * p(0)) * (ia * p(0)) + (ib * p(1)) * (ib * p(1));
  };

  constexpr int kScan = 360;
  double best_u = 0.0, best = value(0.0);
  for (int k = 1; k < kScan; ++k) {
    const double u = 2.0 * kPi * k / kScan;
    const double v = value(u);
    if (v > best) {
      best = v;
      best_u = u;
    }
  }

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_u - 2.0 * kPi / kScan, hi = best_u + 2.0 * kPi / kScan;
  double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
  double f1 = value(x1), f2 = value(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = value(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = value(x1);
    }
  }
  return std::max({best, f1, f2});
}

namespace {

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo * fhi > 0.0) throw OutOfRange("bisect: root not bracketed");
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

SpecialRatios special_ratio_roots() {
  SpecialRatios r;
  r.tangency = bisect([](double ratio) { return e1_caustic_max({ratio, 1.0}) - 1.0; }, 2.0, 3.0);
  r.intercept = bisect([](double ratio) { return e1_y_intercept({ratio, 1.0}) - 0.5; }, 3.0, 5.0);
  return r;
}

double intercept_ratio_closed_form() { return std::sqrt(7.0 + 2.0 * std::sqrt(13.0)); }

namespace {

auto homothetic_tracker(const HomotheticPair& pair, Which which) {
  return [pair, which](double t) {
    const BrocardPair bp = brocard_points(periodic_vertices(pair, t));
    return which == Which::First ? bp.omega1 : bp.omega2;
  };
}

}  // namespace

LocusSamples sample_homothetic_locus(const HomotheticPair& pair, Which which, std::size_t n) {
  require_valid(pair);
  return sample_parallel(uniform_grid(n), homothetic_tracker(pair, which));
}

LocusSamples sample_homothetic_locus_serial(const HomotheticPair& pair, Which which,
                                            std::size_t n) {
  require_valid(pair);
  return sample_serial(uniform_grid(n), homothetic_tracker(pair, which));
}

}  // namespace brocard

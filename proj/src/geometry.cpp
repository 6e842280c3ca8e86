#include "brocard/geometry.hpp"

#include <algorithm>
#include <string>

namespace brocard {

double signed_area(const Triangle& t) {
  return 0.5 * cross(t[1] - t[0], t[2] - t[0]);
}

double area(const Triangle& t) { return std::abs(signed_area(t)); }

double perimeter(const Triangle& t) {
  return distance(t[0], t[1]) + distance(t[1], t[2]) + distance(t[2], t[0]);
}

double sum_squared_sides(const Triangle& t) {
  const Point ab = t[1] - t[0], bc = t[2] - t[1], ca = t[0] - t[2];
  return dot(ab, ab) + dot(bc, bc) + dot(ca, ca);
}

double diameter(const Triangle& t) {
  return std::max({distance(t[0], t[1]), distance(t[1], t[2]), distance(t[2], t[0])});
}

bool is_degenerate(const Triangle& t) {
  const double l = diameter(t);
  const double a = std::abs(signed_area(t));
  if (!std::isfinite(a) || !std::isfinite(l)) return true;
  return l == 0.0 || a < 1e-12 * l * l;
}

void require_nondegenerate(const Triangle& t, const char* what) {
  if (is_degenerate(t)) {
    throw DegenerateInput(std::string(what) + ": degenerate triangle");
  }
}

Triangle reversed(const Triangle& t) { return {t[0], t[2], t[1]}; }

Point line_intersection(const Point& p, const Point& d, const Point& q, const Point& e) {
  const double den = cross(d, e);
  const double scale = norm(d) * norm(e);
  if (scale == 0.0 || std::abs(den) <= 1e-14 * scale) {
    throw DegenerateInput("line_intersection: parallel lines");
  }
  const double s = cross(q - p, e) / den;
  return p + d * s;
}

double brocard_cot(const Triangle& t) {
  require_nondegenerate(t, "brocard_angle");
  const double twice_area = std::abs(cross(t[1] - t[0], t[2] - t[0]));
  double sum = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Point u = t[(i + 1) % 3] - t[i];
    const Point w = t[(i + 2) % 3] - t[i];
    sum += dot(u, w) / twice_area;
  }
  return sum;
}

double brocard_angle(const Triangle& t) { return std::atan2(1.0, brocard_cot(t)); }

namespace {

struct Concurrence {
  Point point;
  double spread;
};

// Intersects the three cevians P_i + s * dir_i and averages the pairwise hits.
Concurrence concur(const Triangle& t, const std::array<Point, 3>& dir) {
  std::array<Point, 3> hits;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    hits[i] = line_intersection(t[i], dir[i], t[j], dir[j]);
  }
  const Point mean = (hits[0] + hits[1] + hits[2]) / 3.0;
  const double spread = std::max({distance(hits[0], hits[1]), distance(hits[1], hits[2]),
                                  distance(hits[2], hits[0])});
  return {mean, spread};
}

}  // namespace

BrocardConstruction brocard_construction(const Triangle& t) {
  const double omega = brocard_angle(t);
  // The interior lies to the left of p1->p2 for counterclockwise input.
  const double side = signed_area(t) > 0.0 ? 1.0 : -1.0;

  std::array<Point, 3> forward, backward;
  for (std::size_t i = 0; i < 3; ++i) {
    forward[i] = rotate(t[(i + 1) % 3] - t[i], side * omega);
    backward[i] = rotate(t[(i + 2) % 3] - t[i], -side * omega);
  }
  const Concurrence c1 = concur(t, forward);
  const Concurrence c2 = concur(t, backward);
  return {{c1.point, c2.point}, c1.spread, c2.spread};
}

BrocardPair brocard_points(const Triangle& t) { return brocard_construction(t).points; }

Point from_barycentric(const Triangle& t, double u, double v, double w) {
  const double s = u + v + w;
  return (t[0] * u + t[1] * v + t[2] * w) / s;
}

namespace {

struct SideSquares {
  double a2, b2, c2;
};

SideSquares side_squares(const Triangle& t) {
  const Point bc = t[2] - t[1], ca = t[0] - t[2], ab = t[1] - t[0];
  return {dot(bc, bc), dot(ca, ca), dot(ab, ab)};
}

}  // namespace

BrocardPair brocard_points_barycentric(const Triangle& t) {
  require_nondegenerate(t, "brocard_points_barycentric");
  const auto [a2, b2, c2] = side_squares(t);
  return {from_barycentric(t, 1.0 / b2, 1.0 / c2, 1.0 / a2),
          from_barycentric(t, 1.0 / c2, 1.0 / a2, 1.0 / b2)};
}

namespace {

Point circumcenter(const Triangle& t) {
  const Point b = t[1] - t[0], c = t[2] - t[0];
  const double d = 2.0 * cross(b, c);
  const double bb = dot(b, b), cc = dot(c, c);
  return t[0] + Point{(c.y * bb - b.y * cc) / d, (b.x * cc - c.x * bb) / d};
}

Point symmedian(const Triangle& t) {
  const auto [a2, b2, c2] = side_squares(t);
  return from_barycentric(t, a2, b2, c2);
}

}  // namespace

Point triangle_center(const Triangle& t, Center k) {
  require_nondegenerate(t, "triangle_center");
  switch (k) {
    case Center::X2:
      return (t[0] + t[1] + t[2]) / 3.0;
    case Center::X3:
      return circumcenter(t);
    case Center::X6:
      return symmedian(t);
    case Center::X182:
      return (circumcenter(t) + symmedian(t)) * 0.5;
  }
  throw UnsupportedCenter("triangle_center: unsupported center");
}

Point triangle_center(const Triangle& t, int k) {
  switch (k) {
    case 2:
    case 3:
    case 6:
    case 182:
      return triangle_center(t, static_cast<Center>(k));
    default:
      throw UnsupportedCenter("triangle_center: X" + std::to_string(k) + " is not supported");
  }
}

CircleGeom circumcircle(const Triangle& t) {
  require_nondegenerate(t, "circumcircle");
  const Point c = circumcenter(t);
  return {c, distance(c, t[0])};
}

CircleGeom brocard_circle(const Triangle& t) {
  require_nondegenerate(t, "brocard_circle");
  const Point x3 = circumcenter(t);
  const Point x6 = symmedian(t);
  const double r = 0.5 * distance(x3, x6);
  // X3 and X6 coincide up to rounding for equilaterals.
  if (r <= 1e-14 * diameter(t)) {
    return {(t[0] + t[1] + t[2]) / 3.0, 0.0};
  }
  return {(x3 + x6) * 0.5, r};
}

}  // namespace brocard

#include "brocard/brocard_triangles.hpp"

namespace brocard {

DerivedTriangle first_brocard_triangle(const Triangle& t) {
  const CircleGeom circle = brocard_circle(t);
  if (circle.radius == 0.0) {
    return {{circle.center, circle.center, circle.center}, true};
  }
  const BrocardPair bp = brocard_points(t);
  DerivedTriangle out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Point& a = t[(i + 1) % 3];
    const Point& b = t[(i + 2) % 3];
    out.tri[i] = line_intersection(a, bp.omega1 - a, b, bp.omega2 - b);
  }
  return out;
}

CircleVertex line_circle_brocard_vertex(const Triangle& t, BrocardTriangleKind kind, int i) {
  if (i < 1 || i > 3) throw OutOfRange("line_circle_brocard_vertex: index must be 1, 2 or 3");
  if (kind == BrocardTriangleKind::First) {
    throw OutOfRange("line_circle_brocard_vertex: only Second and Seventh are cevian-circle triangles");
  }
  const CircleGeom circle = brocard_circle(t);
  const Point anchor = triangle_center(t, kind == BrocardTriangleKind::Second ? Center::X6 : Center::X3);
  if (circle.radius == 0.0) return {circle.center, false, true};

  // Line P + s d with d = anchor - P meets the circle at s = 1 (the anchor
  // lies on the circle) and at s = power(P) / |d|^2 by Vieta.
  const Point p = t[static_cast<std::size_t>(i - 1)];
  const Point d = anchor - p;
  const double dd = dot(d, d);
  if (dd == 0.0) throw DegenerateInput("line_circle_brocard_vertex: vertex coincides with anchor");
  const Point w = p - circle.center;
  const double power = dot(w, w) - circle.radius * circle.radius;
  const double s = power / dd;
  CircleVertex out;
  out.p = p + d * s;
  out.tangent = std::abs(s - 1.0) < 1e-9;
  return out;
}

DerivedTriangle brocard_triangle(const Triangle& t, BrocardTriangleKind kind) {
  if (kind == BrocardTriangleKind::First) return first_brocard_triangle(t);
  DerivedTriangle out;
  for (int i = 1; i <= 3; ++i) {
    const CircleVertex v = line_circle_brocard_vertex(t, kind, i);
    out.tri[static_cast<std::size_t>(i - 1)] = v.p;
    out.degenerate = out.degenerate || v.degenerate;
  }
  return out;
}

}  // namespace brocard

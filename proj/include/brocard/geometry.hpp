#ifndef BROCARD_GEOMETRY_HPP_
#define BROCARD_GEOMETRY_HPP_

#include <array>
#include <cmath>
#include <utility>

#include "brocard/errors.hpp"

namespace brocard {

inline constexpr double kPi = 3.14159265358979323846;

struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point() = default;
  constexpr Point(double x_, double y_) : x(x_), y(y_) {}

  constexpr Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  constexpr Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  constexpr Point operator*(double s) const { return {x * s, y * s}; }
  constexpr Point operator/(double s) const { return {x / s, y / s}; }
  constexpr Point operator-() const { return {-x, -y}; }
  constexpr bool operator==(const Point&) const = default;
};

constexpr Point operator*(double s, const Point& p) { return p * s; }

constexpr double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point& p) { return std::hypot(p.x, p.y); }
inline double distance(const Point& a, const Point& b) { return norm(a - b); }

/// Rotates `p` counterclockwise by `angle` radians about the origin.
inline Point rotate(const Point& p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

/// Three ordered vertices. The order is significant: the first Brocard
/// point is the one whose cevians make angle omega with the directed sides
/// p1->p2, p2->p3, p3->p1.
struct Triangle {
  std::array<Point, 3> v;

  constexpr Triangle() = default;
  constexpr Triangle(Point a, Point b, Point c) : v{a, b, c} {}

  constexpr const Point& operator[](std::size_t i) const { return v[i]; }
  constexpr Point& operator[](std::size_t i) { return v[i]; }
  constexpr const Point& p1() const { return v[0]; }
  constexpr const Point& p2() const { return v[1]; }
  constexpr const Point& p3() const { return v[2]; }
};

struct CircleGeom {
  Point center;
  double radius = 0.0;
};

// Signed area, positive for counterclockwise vertex order.
double signed_area(const Triangle& t);
double area(const Triangle& t);
double perimeter(const Triangle& t);
double sum_squared_sides(const Triangle& t);
// Longest side length.
double diameter(const Triangle& t);
// |signed area| < 1e-12 * (longest side)^2.
bool is_degenerate(const Triangle& t);
void require_nondegenerate(const Triangle& t, const char* what);

Triangle reversed(const Triangle& t);

/// Intersection of the lines p + s*d and q + u*e. Throws DegenerateInput when
/// the lines are parallel.
Point line_intersection(const Point& p, const Point& d, const Point& q, const Point& e);

/// Brocard angle from cot(omega) = cot A + cot B + cot C.
double brocard_angle(const Triangle& t);
double brocard_cot(const Triangle& t);

struct BrocardPair {
  Point omega1;
  Point omega2;
};

/// Constructive Brocard points: each directed side is rotated about its
/// start vertex by omega towards the interior and the three resulting cevians
/// are intersected. Omega1 uses the traversal p1->p2->p3, Omega2 the reverse
/// traversal p1->p3->p2.
BrocardPair brocard_points(const Triangle& t);

/// Same construction, additionally returning the largest pairwise distance
/// between the three cevian intersections of each point (concurrency spread).
struct BrocardConstruction {
  BrocardPair points;
  double spread1 = 0.0;
  double spread2 = 0.0;
};
BrocardConstruction brocard_construction(const Triangle& t);

/// Closed-form cross-check: barycentrics (1/b^2 : 1/c^2 : 1/a^2) and
/// (1/c^2 : 1/a^2 : 1/b^2), with a = |p2p3|, b = |p3p1|, c = |p1p2|.
BrocardPair brocard_points_barycentric(const Triangle& t);

enum class Center : int { X2 = 2, X3 = 3, X6 = 6, X182 = 182 };

Point triangle_center(const Triangle& t, Center k);
/// Throws UnsupportedCenter for any index outside {2, 3, 6, 182}.
Point triangle_center(const Triangle& t, int k);

CircleGeom circumcircle(const Triangle& t);

/// Circle on diameter X3X6 (center X182). An equilateral input yields a
/// zero-radius circle at the centroid.
CircleGeom brocard_circle(const Triangle& t);

// Point from barycentric weights (need not be normalized).
Point from_barycentric(const Triangle& t, double u, double v, double w);

}  // namespace brocard

#endif

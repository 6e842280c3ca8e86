#ifndef BROCARD_BROCARD_TRIANGLES_HPP_
#define BROCARD_BROCARD_TRIANGLES_HPP_

#include "brocard/geometry.hpp"

namespace brocard {

enum class BrocardTriangleKind { First, Second, Seventh };

struct DerivedTriangle {
  Triangle tri;
  // Equilateral input: every vertex collapses to the centroid.
  bool degenerate = false;
};

/// Vertex i is the intersection of P_{i+1} Omega1 with P_{i+2} Omega2
/// (indices mod 3).
DerivedTriangle first_brocard_triangle(const Triangle& t);

struct CircleVertex {
  Point p;
  // The cevian touches the Brocard circle; the vertex is X6 (or X3) itself.
  bool tangent = false;
  bool degenerate = false;
};

/// Second intersection of the cevian P_i X6 (Second) or P_i X3 (Seventh) with
/// the Brocard circle; i in {1,2,3}. Only Second and Seventh are accepted.
CircleVertex line_circle_brocard_vertex(const Triangle& t, BrocardTriangleKind kind, int i);

/// Dispatches on kind; Second and Seventh use line_circle_brocard_vertex.
DerivedTriangle brocard_triangle(const Triangle& t, BrocardTriangleKind kind);

}  // namespace brocard

#endif

#ifndef BROCARD_PORISM_HPP_
#define BROCARD_PORISM_HPP_

#include "brocard/geometry.hpp"
#include "brocard/report.hpp"

namespace brocard {

/// Brocard inellipse with semi-axes (a, b), centered at the origin, major
/// axis along x. Its foci (+-c, 0) are the stationary Brocard points of the
/// family.
struct PorismConfig {
  double a = 1.0;
  double b = 0.8;

  double c() const;       // sqrt(a^2 - b^2)
  double delta1() const;  // sqrt(4a^2 - b^2)
  void validate() const;
};

struct PorismFrame {
  Point center;  // circumcenter (0, -c delta1 / b)
  double R = 0.0;      // 2a^2 / b
  double omega = 0.0;  // arccot(delta1 / b)
};

PorismFrame porism_frame(const PorismConfig& cfg);

/// Distance between the start vertex and the vertex reached after three
/// tangent-chord steps from circumcircle angle theta.
double porism_closure_error(const PorismConfig& cfg, double theta);

/// Tangent-chord construction from Q = center + R (cos theta, sin theta). At
/// each step the tangent with the larger eccentric-angle tangency point is
/// taken, which walks the circumcircle counterclockwise. Throws
/// PorismClosureError when the orbit fails to close within 1e-9 R.
Triangle porism_triangle(const PorismConfig& cfg, double theta);

/// Numerical experiments over n family members: fixed circle carrying the
/// first, second and seventh Brocard triangles, stationary Brocard points of
/// the second one, the two collinear triples, and one circle through the
/// Brocard points of the first Brocard triangle. Requires a > b.
VerificationReport porism_observations(const PorismConfig& cfg, std::size_t n);

}  // namespace brocard

#endif

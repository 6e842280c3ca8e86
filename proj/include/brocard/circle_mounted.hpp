#ifndef BROCARD_CIRCLE_MOUNTED_HPP_
#define BROCARD_CIRCLE_MOUNTED_HPP_

#include "brocard/geometry.hpp"
#include "brocard/locus.hpp"

namespace brocard {

enum class Which : int { First = 1, Second = 2 };

Which which_from_int(int k);

/// Families with two fixed vertices and a third one P(t) = (a cos t, b sin t)
/// revolving on a circle (a == b) or an axis-aligned ellipse.
struct MountedFamilyConfig {
  /// Vertex order of the generated triangle. The Brocard labels depend on it.
  enum class Order { V1V2P, V1PV2 };

  double a = 1.0;
  double b = 1.0;
  Point v1;
  Point v2;
  Order order = Order::V1V2P;

  /// V1 = (0,0), V2 = (0,a).
  static MountedFamilyConfig center_top(double a);
  /// V1 = (0,a), V2 = (a,0), traversed V1 -> P -> V2 so that Omega1/Omega2
  /// follow the closed forms of omega_left_top.
  static MountedFamilyConfig left_top(double a);
  /// V1 = (-a,0), V2 = (a,0).
  static MountedFamilyConfig antipodal(double a);
  /// V1 = (-a,0), V2 = (a,0) on the ellipse with semi-axes (a, b).
  static MountedFamilyConfig ellipse_mounted(double a, double b);
  /// V1 = (x1,0), V2 = (-a,0); the family with analytic areas.
  static MountedFamilyConfig custom_mounted(double a, double x1);

  bool is_circle() const { return a == b; }
  void validate() const;
};

Point boundary_point(const MountedFamilyConfig& cfg, double t);

/// Throws DegenerateInput when P(t) hits a fixed vertex or the three points
/// are collinear.
Triangle mounted_triangle(const MountedFamilyConfig& cfg, double t);

/// Closed-form Brocard loci, V1 = (0,0), V2 = (0,a). Omega1 traces the
/// circle of radius a/3 about (0, 2a/3).
Point omega_center_top(double a, double t, Which which);

/// Closed-form loci for V1 = (0,a), V2 = (a,0). Both share a denominator
/// symmetric in sin t and cos t, so Omega2(t) = D(Omega1(pi/2 - t)) with
/// D(x,y) = (y,x).
Point omega_left_top(double a, double t, Which which);

/// Closed-form loci for V1 = (-a,0), V2 = (a,0); Omega2 is the mirror image
/// (-x, y) of Omega1 at the same t.
Point omega_antipodal(double a, double t, Which which);

/// B2(x,y) = a^2(a^2 - 2ax - 4y^2) + 2ax(x^2+y^2) - (x^2+y^2)^2 and
/// B1(x,y) = B2(-x,y).
double antipodal_quartic(double a, const Point& p, Which which);

/// x^4 - 2x^3 + 2y^2x^2 + 2x - 2y^2x - 1 + y^4 + 4y^2, the printed unit-radius
/// quartic for the antipodal family.
double antipodal_quartic_printed(const Point& p);

struct MountedAreas {
  double a1 = 0.0;
  double a2 = 0.0;
};

/// Areas of the two Brocard loci for V1 = (x1,0), V2 = (-a,0). a1 belongs to
/// the Omega2 locus and a2 to the Omega1 locus of custom_mounted(a, x1).
/// Throws OutOfRange if |x1| > a.
MountedAreas analytic_areas(double a, double x1);

/// Brocard point `which` of mounted_triangle over n uniform t in [0, 2pi),
/// shifted by `phase` grid steps. Computed constructively; degenerate t are
/// skipped and recorded. Runs the OpenMP sampler.
LocusSamples sample_mounted_locus(const MountedFamilyConfig& cfg, Which which, std::size_t n,
                                  double phase = 0.0);
/// Serial reference of sample_mounted_locus.
LocusSamples sample_mounted_locus_serial(const MountedFamilyConfig& cfg, Which which,
                                         std::size_t n, double phase = 0.0);

}  // namespace brocard

#endif

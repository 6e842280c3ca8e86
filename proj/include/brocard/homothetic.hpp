#ifndef BROCARD_HOMOTHETIC_HPP_
#define BROCARD_HOMOTHETIC_HPP_

#include <utility>

#include "brocard/circle_mounted.hpp"
#include "brocard/geometry.hpp"
#include "brocard/locus.hpp"

namespace brocard {

/// Outer ellipse (a, b) and the concentric inner caustic (a/2, b/2). The pair
/// admits a one-parameter family of Poncelet 3-periodics.
struct HomotheticPair {
  double a = 2.0;
  double b = 1.0;

  double inner_a() const { return a / 2.0; }
  double inner_b() const { return b / 2.0; }
};

/// P_k = (a cos(t + 2k pi/3), b sin(t + 2k pi/3)), k = 0, 1, 2: the affine
/// image of an equilateral inscribed in the unit circle. Requires a >= b > 0.
Triangle periodic_vertices(const HomotheticPair& pair, double t);

/// Tangency residual of the line through p, q against the axis-aligned
/// ellipse (ea, eb): support^2 - distance^2 for the unit line normal. Zero
/// iff the line is tangent.
double ellipse_tangency_residual(const Point& p, const Point& q, double ea, double eb);

/// Brocard-point loci E1 (which = First, minus sign on xy) and E2, scaled so
/// that the constant term is -1. Throws DegenerateFamily for a == b.
ConicCoeffs brocard_locus_conic(const HomotheticPair& pair, Which which);

/// Angle between the principal axes of E1 and E2:
/// tan theta = 4 sqrt3 (a^2+b^2) ab / (3a^4 + 2a^2b^2 + 3b^4).
double locus_tilt_angle(const HomotheticPair& pair);

/// Similarity factor k1 = (a^2 - b^2) / (2 (a^2 + b^2)).
double t1_scale(const HomotheticPair& pair);

/// First Brocard triangle vertex via P'_i = k1 Rx P_{sigma(i)}, sigma = (2,3,1),
/// Rx(x,y) = (-x,y). i in {1,2,3}.
Point t1_vertex(const HomotheticPair& pair, double t, int i);

/// Semi-axes of the ellipse traced by the first Brocard triangle vertices.
std::pair<double, double> t1_locus_axes(const HomotheticPair& pair);

/// Invariant area of the first Brocard triangle; 0 for a == b.
double t1_area(const HomotheticPair& pair);

/// 3-periodic to first-Brocard-triangle similarity ratio 2(a^2+b^2)/(a^2-b^2).
double similarity_ratio(const HomotheticPair& pair);

/// Squared circumradius of the 3-periodic at parameter t.
double circumradius_sq(const HomotheticPair& pair, double t);

/// Circumcircle to Brocard-circle area ratio 4(a^2+b^2)^2/(a^2-b^2)^2.
double brocard_circle_area_ratio(const HomotheticPair& pair);

/// Axis-aligned ellipse 4(a^2+b^2)^2 x^2 / (a^2 (a^2-b^2)^2)
/// + 4(a^2+b^2)^2 y^2 / (b^2 (a^2-b^2)^2) - 1.
ConicCoeffs homothetic_brocard_circle_conic(const HomotheticPair& pair);

/// y-intercept of E1: b (a^2 - b^2) / sqrt(3a^4 + 6a^2b^2 + 7b^4).
double e1_y_intercept(const HomotheticPair& pair);

/// Largest value of (2x/a)^2 + (2y/b)^2 over E1; equals 1 when E1 touches the
/// caustic from inside. Coarse scan followed by golden-section refinement.
double e1_caustic_max(const HomotheticPair& pair);

struct SpecialRatios {
  double tangency = 0.0;  // a/b at which E1 is internally tangent to the caustic
  double intercept = 0.0; // a/b at which E1 meets the y axis at b/2
};

/// Both ratios found numerically by bisection (b = 1): tangency on [2, 3]
/// against e1_caustic_max, intercept on [3, 5] against e1_y_intercept.
SpecialRatios special_ratio_roots();

/// sqrt(7 + 2 sqrt 13), the positive root of a^4 - 14 a^2 b^2 - 3 b^4 for b = 1.
double intercept_ratio_closed_form();

/// Brocard point samples over n uniform t in [0, 2pi) (OpenMP sampler).
LocusSamples sample_homothetic_locus(const HomotheticPair& pair, Which which, std::size_t n);
LocusSamples sample_homothetic_locus_serial(const HomotheticPair& pair, Which which,
                                            std::size_t n);

}  // namespace brocard

#endif

#ifndef BROCARD_LOCUS_HPP_
#define BROCARD_LOCUS_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "brocard/geometry.hpp"

namespace brocard {

struct LocusSample {
  double t = 0.0;
  Point p;
};

/// Ordered samples of one tracked point over one family revolution.
/// `skipped_t` records parameters whose triangle was degenerate.
struct LocusSamples {
  std::vector<LocusSample> samples;
  bool closed = true;
  double period = 2.0 * kPi;
  std::vector<double> skipped_t;

  std::size_t size() const { return samples.size(); }
  std::vector<Point> points() const;
};

/// Implicit conic A x^2 + B xy + C y^2 + D x + E y + F = 0.
struct ConicCoeffs {
  double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;

  double operator()(const Point& p) const {
    return A * p.x * p.x + B * p.x * p.y + C * p.y * p.y + D * p.x + E * p.y + F;
  }
  /// Unit Euclidean norm, first nonzero of (A, B, C, D, E, F) positive.
  ConicCoeffs normalized() const;
  /// Scaled so that F = -1 (requires F != 0).
  ConicCoeffs with_unit_constant() const;
  double discriminant() const { return B * B - 4.0 * A * C; }
};

/// Largest componentwise difference after normalizing both conics.
double conic_distance(const ConicCoeffs& a, const ConicCoeffs& b);

enum class ConicClass { Circle, Ellipse, Parabola, Hyperbola, Degenerate };
std::string to_string(ConicClass c);

struct ConicGeometry {
  Point center;
  double semi_major = 0.0;
  double semi_minor = 0.0;
  double tilt = 0.0;  // major-axis direction in (-pi/2, pi/2]
};

ConicClass classify(const ConicCoeffs& q);

/// Center, semi-axes and tilt of a central ellipse. Throws DegenerateFit for
/// anything that is not a real ellipse.
ConicGeometry ellipse_geometry(const ConicCoeffs& q);

struct FitReport {
  ConicCoeffs coeffs;
  double rms_residual = 0.0;
  ConicClass classification = ConicClass::Degenerate;
  bool is_conic = false;  // rms below the non-conic threshold
  Point center;
  std::pair<double, double> semi_axes{0.0, 0.0};
  double tilt = 0.0;
};

/// Algebraic least-squares conic through `pts` (null vector of the monomial
/// design matrix). Data are centered and scaled before the SVD.
FitReport fit_conic(std::span<const Point> pts);
FitReport fit_conic(const LocusSamples& samples);

struct CircleFit {
  Point center;
  double radius = 0.0;
  double rms = 0.0;  // RMS of |dist(p, center) - radius|
};

/// Kasa algebraic circle fit.
CircleFit circle_fit(std::span<const Point> pts);
CircleFit circle_fit(const LocusSamples& samples);

/// Signed enclosed area 0.5 * integral(x dy - y dx), composite Simpson on a
/// uniform periodic grid. Derivatives are 4th-order central differences
/// unless supplied. Throws OpenCurveError if the samples are not flagged
/// closed, and std::invalid_argument if the grid has gaps or an odd count.
double green_area(const LocusSamples& samples);
double green_area(const LocusSamples& samples, std::span<const Point> derivatives);

struct ResidualStats {
  double max = 0.0;
  double rms = 0.0;
};

/// Residual statistics of the normalized conic over the samples.
ResidualStats implicit_residual(const ConicCoeffs& q, std::span<const Point> pts);
ResidualStats implicit_residual(const ConicCoeffs& q, const LocusSamples& samples);

}  // namespace brocard

#endif

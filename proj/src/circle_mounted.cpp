#include "brocard/circle_mounted.hpp"

#include <string>

#include "brocard/sampling.hpp"

namespace brocard {

Which which_from_int(int k) {
  if (k == 1) return Which::First;
  if (k == 2) return Which::Second;
  throw OutOfRange("which must be 1 or 2, got " + std::to_string(k));
}

MountedFamilyConfig MountedFamilyConfig::center_top(double a) {
  return {a, a, {0.0, 0.0}, {0.0, a}, Order::V1V2P};
}

MountedFamilyConfig MountedFamilyConfig::left_top(double a) {
  return {a, a, {0.0, a}, {a, 0.0}, Order::V1PV2};
}

MountedFamilyConfig MountedFamilyConfig::antipodal(double a) {
  return {a, a, {-a, 0.0}, {a, 0.0}, Order::V1V2P};
}

MountedFamilyConfig MountedFamilyConfig::ellipse_mounted(double a, double b) {
  return {a, b, {-a, 0.0}, {a, 0.0}, Order::V1V2P};
}

MountedFamilyConfig MountedFamilyConfig::custom_mounted(double a, double x1) {
  if (std::abs(x1) > a) throw OutOfRange("custom_mounted: |x1| must not exceed a");
  return {a, a, {x1, 0.0}, {-a, 0.0}, Order::V1V2P};
}

void MountedFamilyConfig::validate() const {
  if (!(a > 0.0) || !(b > 0.0)) throw OutOfRange("mounted family: semi-axes must be positive");
  if (v1 == v2) throw OutOfRange("mounted family: fixed vertices coincide");
}

Point boundary_point(const MountedFamilyConfig& cfg, double t) {
  return {cfg.a * std::cos(t), cfg.b * std::sin(t)};
}

Triangle mounted_triangle(const MountedFamilyConfig& cfg, double t) {
  cfg.validate();
  const Point p = boundary_point(cfg, t);
  Triangle tri = cfg.order == MountedFamilyConfig::Order::V1V2P ? Triangle{cfg.v1, cfg.v2, p}
                                                                : Triangle{cfg.v1, p, cfg.v2};
  require_nondegenerate(tri, "mounted_triangle");
  return tri;
}

Point omega_center_top(double a, double t, Which which) {
  const double s = std::sin(t), c = std::cos(t);
  const double den = 5.0 - 4.0 * s;
  if (which == Which::First) {
    return {a * c / den, a * (2.0 - s) / den};
  }
  return {a * (2.0 * c - std::sin(2.0 * t)) / den, a * (2.0 * s + std::cos(2.0 * t)) / den};
}

Point omega_left_top(double a, double t, Which which) {
  const double s = std::sin(t), c = std::cos(t);
  // (sin t - 2) cos t - 2 sin t + 3, symmetric under swapping sin and cos.
  const double den = (s - 2.0) * c - 2.0 * s + 3.0;
  if (which == Which::First) {
    return {a * (s * s + c - s) / den, a * (1.0 - c) / den};
  }
  return {a * (1.0 - s) / den, a * (c * c - c + s) / den};
}

Point omega_antipodal(double a, double t, Which which) {
  const double c2 = std::cos(2.0 * t);
  const double den = c2 - 9.0;
  const Point p1{(-a * c2 - 8.0 * a * std::cos(t) + a) / den,
                 (-2.0 * a * std::sin(2.0 * t) - 4.0 * a * std::sin(t)) / den};
  if (which == Which::First) return p1;
  return {-p1.x, p1.y};
}

double antipodal_quartic(double a, const Point& p, Which which) {
  const double x = which == Which::Second ? p.x : -p.x;
  const double y = p.y;
  const double r2 = x * x + y * y;
  return a * a * (a * a - 2.0 * a * x - 4.0 * y * y) + 2.0 * a * x * r2 - r2 * r2;
}

double antipodal_quartic_printed(const Point& p) {
  const double x = p.x, y = p.y;
  return x * x * x * x - 2.0 * x * x * x + 2.0 * y * y * x * x + 2.0 * x - 2.0 * y * y * x - 1.0 +
         y * y * y * y + 4.0 * y * y;
}

MountedAreas analytic_areas(double a, double x1) {
  if (!(a > 0.0)) throw OutOfRange("analytic_areas: a must be positive");
  if (std::abs(x1) > a) throw OutOfRange("analytic_areas: |x1| must not exceed a");
  const double q = 3.0 * a * a + x1 * x1;
  const double den = q * q * std::sqrt(4.0 * a * a + x1 * x1);
  const double s = x1 + a;
  MountedAreas out;
  out.a1 = 4.0 * s * s * std::pow(a, 5) * kPi / den;
  out.a2 = (2.0 * a * a - a * x1 + x1 * x1) * s * s * s * a * a * kPi / den;
  return out;
}

namespace {

auto mounted_tracker(const MountedFamilyConfig& cfg, Which which) {
  return [cfg, which](double t) {
    const BrocardPair bp = brocard_points(mounted_triangle(cfg, t));
    return which == Which::First ? bp.omega1 : bp.omega2;
  };
}

void check_count(std::size_t n) {
  if (n < 16) throw OutOfRange("sample_mounted_locus: n must be at least 16");
}

}  // namespace

LocusSamples sample_mounted_locus(const MountedFamilyConfig& cfg, Which which, std::size_t n,
                                  double phase) {
  check_count(n);
  cfg.validate();
  return sample_parallel(uniform_grid(n, phase), mounted_tracker(cfg, which));
}

LocusSamples sample_mounted_locus_serial(const MountedFamilyConfig& cfg, Which which,
                                         std::size_t n, double phase) {
  check_count(n);
  cfg.validate();
  return sample_serial(uniform_grid(n, phase), mounted_tracker(cfg, which));
}

}  // namespace brocard

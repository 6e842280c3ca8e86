#include <doctest.h>

#include <stdexcept>

#include "brocard/circle_mounted.hpp"
#include "brocard/homothetic.hpp"
#include "brocard/locus.hpp"
#include "brocard/porism.hpp"
#include "brocard/brocard_triangles.hpp"
#include "brocard/sampling.hpp"
#include "support.hpp"

using namespace brocard;
using namespace testing;

namespace {

// Curve (c + R(phi) (a cos s, b sin s)) with s = t + k sin t: a tilted
// ellipse traced at non-uniform speed, exact area pi a b.
struct WobblyEllipse {
  double a, b, phi, k;
  Point c;
  Point at(double t) const {
    const double s = t + k * std::sin(t);
    return c + rotate({a * std::cos(s), b * std::sin(s)}, phi);
  }
  Point deriv(double t) const {
    const double s = t + k * std::sin(t), ds = 1.0 + k * std::cos(t);
    return rotate({-a * std::sin(s) * ds, b * std::cos(s) * ds}, phi);
  }
};

LocusSamples sample_curve(const WobblyEllipse& e, std::size_t n) {
  return sample_serial(uniform_grid(n), [&](double t) { return e.at(t); });
}

double axis_angle(double t1, double t2) {
  double d = std::fmod(std::abs(t1 - t2), kPi);
  return d > kPi / 2.0 ? kPi - d : d;
}

}  // namespace

TEST_CASE("conic fit of unit circle points") {
  std::vector<Point> pts;
  for (int k = 0; k < 8; ++k) pts.push_back({std::cos(k * kPi / 4.0), std::sin(k * kPi / 4.0)});
  const FitReport f = fit_conic(std::span<const Point>(pts));
  CHECK(conic_distance(f.coeffs, {1, 0, 1, 0, 0, -1}) < 1e-12);
  CHECK(f.classification == ConicClass::Circle);
  CHECK(f.is_conic);
  CHECK(f.semi_axes.first == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("conic fit recovers random ellipses") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = 0.5 + 2.0 * u(rng), b = a * (0.2 + 0.7 * u(rng)), phi = kPi * (u(rng) - 0.5);
    const Point c{4.0 * u(rng) - 2.0, 4.0 * u(rng) - 2.0};
    std::vector<Point> pts;
    for (int k = 0; k < 12; ++k) {
      const double s = 2.0 * kPi * u(rng);
      pts.push_back(c + rotate({a * std::cos(s), b * std::sin(s)}, phi));
    }
    // Implicit form of the same ellipse, built independently of the fit.
    const double cs = std::cos(phi), sn = std::sin(phi);
    const double p = cs * cs / (a * a) + sn * sn / (b * b);
    const double q = 2.0 * cs * sn * (1.0 / (a * a) - 1.0 / (b * b));
    const double r = sn * sn / (a * a) + cs * cs / (b * b);
    const ConicCoeffs exact{p, q, r, -2.0 * p * c.x - q * c.y, -2.0 * r * c.y - q * c.x,
                            p * c.x * c.x + q * c.x * c.y + r * c.y * c.y - 1.0};
    const FitReport f = fit_conic(std::span<const Point>(pts));
    CHECK(conic_distance(f.coeffs, exact) < 1e-10);
    CHECK(f.semi_axes.first == doctest::Approx(a).epsilon(1e-9));
    CHECK(f.semi_axes.second == doctest::Approx(b).epsilon(1e-9));
    CHECK(distance(f.center, c) < 1e-9);
  }
}

TEST_CASE("conic fit of the homothetic brocard locus") {
  const HomotheticPair pair{2.0, 1.0};
  const FitReport f1 = fit_conic(sample_homothetic_locus(pair, Which::First, 64));
  const FitReport f2 = fit_conic(sample_homothetic_locus(pair, Which::Second, 64));
  CHECK(conic_distance(f1.coeffs, brocard_locus_conic(pair, Which::First)) < 1e-9);
  CHECK(f1.classification == ConicClass::Ellipse);
  CHECK(std::abs(axis_angle(f1.tilt, f2.tilt) - locus_tilt_angle(pair)) < 1e-7);
}

TEST_CASE("teardrop is flagged as non-conic") {
  const auto l = sample_mounted_locus(MountedFamilyConfig::center_top(1.0), Which::Second, 64, 0.5);
  const FitReport f = fit_conic(l);
  CHECK_FALSE(f.is_conic);
  // The circular companion locus passes.
  CHECK(fit_conic(sample_mounted_locus(MountedFamilyConfig::center_top(1.0), Which::First, 64, 0.5))
            .is_conic);
}

TEST_CASE("conic fit rejects degenerate input") {
  std::vector<Point> line;
  for (int k = 0; k < 10; ++k) line.push_back({double(k), 2.0 * k});
  CHECK_THROWS_AS(fit_conic(std::span<const Point>(line)), DegenerateFit);
  std::vector<Point> few{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 3}};
  CHECK_THROWS_AS(fit_conic(std::span<const Point>(few)), DegenerateFit);
}

TEST_CASE("classification agrees with the discriminant on random conics") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = 0.3 + 2.0 * u(rng), b = 0.3 + 2.0 * u(rng), phi = kPi * u(rng);
    const Point c{4.0 * u(rng) - 2.0, 4.0 * u(rng) - 2.0};
    const bool hyperbola = u(rng) < 0.5;
    const double sb = hyperbola ? -1.0 : 1.0;
    const double cs = std::cos(phi), sn = std::sin(phi);
    const double p = cs * cs / (a * a) + sb * sn * sn / (b * b);
    const double q = 2.0 * cs * sn * (1.0 / (a * a) - sb / (b * b));
    const double r = sn * sn / (a * a) + sb * cs * cs / (b * b);
    const double scale = std::exp(6.0 * u(rng) - 3.0) * (u(rng) < 0.5 ? -1.0 : 1.0);
    const ConicCoeffs conic{scale * p,
                            scale * q,
                            scale * r,
                            scale * (-2.0 * p * c.x - q * c.y),
                            scale * (-2.0 * r * c.y - q * c.x),
                            scale * (p * c.x * c.x + q * c.x * c.y + r * c.y * c.y - 1.0)};
    const ConicClass cls = classify(conic);
    if (conic.discriminant() < 0.0) {
      CHECK((cls == ConicClass::Ellipse || cls == ConicClass::Circle));
      CHECK(hyperbola == false);
    } else {
      CHECK(cls == ConicClass::Hyperbola);
      CHECK(hyperbola == true);
    }
  }
  CHECK(classify({1, 0, 1, 0, 0, -1}) == ConicClass::Circle);
  CHECK(classify({0, 0, 1, -1, 0, 0}) == ConicClass::Parabola);
  CHECK(classify({1, 0, -1, 0, 0, 0}) == ConicClass::Degenerate);
  CHECK(classify({1, 0, 1, 0, 0, 1}) == ConicClass::Degenerate);
}

TEST_CASE("circle fit") {
  const std::vector<Point> three{{3.0, 1.0}, {1.0, 3.0}, {-1.0, 1.0}};
  const CircleFit c = circle_fit(std::span<const Point>(three));
  CHECK(distance(c.center, {1.0, 1.0}) < 1e-14);
  CHECK(c.radius == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(c.rms < 1e-15);

  const std::vector<Point> line{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK_THROWS_AS(circle_fit(std::span<const Point>(line)), DegenerateFit);

  const CircleFit ct = circle_fit(
      sample_mounted_locus(MountedFamilyConfig::center_top(2.0), Which::First, 1024, 0.5));
  CHECK(distance(ct.center, {0.0, 4.0 / 3.0}) < 1e-9);
  CHECK(ct.radius == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(ct.rms < 1e-9);
}

TEST_CASE("circle fit of first brocard triangle vertices in the porism") {
  const PorismConfig cfg{1.0, 0.8};
  std::vector<Point> pts;
  for (double th : uniform_grid(64)) {
    const Triangle t1 = first_brocard_triangle(porism_triangle(cfg, th)).tri;
    pts.insert(pts.end(), t1.v.begin(), t1.v.end());
  }
  CHECK(circle_fit(std::span<const Point>(pts)).rms < 1e-8);
}

TEST_CASE("green area of a circle") {
  const WobblyEllipse circle{1.0, 1.0, 0.0, 0.0, {0.3, -0.2}};
  CHECK(green_area(sample_curve(circle, 4096)) == doctest::Approx(kPi).epsilon(1e-9));

  // Clockwise traversal flips the sign.
  LocusSamples cw = sample_serial(uniform_grid(512), [](double t) {
    return Point{std::cos(t), -std::sin(t)};
  });
  CHECK(green_area(cw) == doctest::Approx(-kPi).epsilon(1e-9));
}

TEST_CASE("green area of the mounted loci") {
  const auto ct = MountedFamilyConfig::center_top(1.0);
  CHECK(green_area(sample_mounted_locus(ct, Which::Second, 4096, 0.5)) ==
        doctest::Approx(2.0 * kPi / 9.0).epsilon(1e-6));
  const auto ap = MountedFamilyConfig::antipodal(1.0);
  CHECK(green_area(sample_mounted_locus(ap, Which::First, 4096, 0.5)) ==
        doctest::Approx(kPi / kSqrt5).epsilon(1e-6));
}

TEST_CASE("green area convergence order") {
  const WobblyEllipse e{1.3, 0.7, 0.4, 0.6, {0.2, 0.1}};
  const double exact = kPi * e.a * e.b;

  // Finite differences: at least second order under grid doubling.
  double prev = 0.0;
  for (std::size_t n : {32u, 64u, 128u}) {
    const double err = std::abs(green_area(sample_curve(e, n)) - exact);
    if (prev > 0.0) CHECK(std::log2(prev / err) >= 2.0);
    prev = err;
  }

  // Supplied derivatives: at least fourth order until rounding takes over.
  prev = 0.0;
  for (std::size_t n : {16u, 32u, 64u}) {
    const LocusSamples s = sample_curve(e, n);
    std::vector<Point> d;
    for (const auto& q : s.samples) d.push_back(e.deriv(q.t));
    const double err = std::abs(green_area(s, d) - exact);
    if (prev > 0.0 && err > 1e-13) CHECK(std::log2(prev / err) >= 4.0);
    prev = err;
  }
}

TEST_CASE("green area preconditions") {
  const WobblyEllipse circle{1.0, 1.0, 0.0, 0.0, {0.0, 0.0}};
  LocusSamples open = sample_curve(circle, 64);
  open.closed = false;
  CHECK_THROWS_AS(green_area(open), OpenCurveError);
  CHECK_THROWS_AS(green_area(sample_curve(circle, 63)), std::invalid_argument);
  CHECK_THROWS_AS(green_area(sample_curve(circle, 4)), std::invalid_argument);
  LocusSamples gap = sample_curve(circle, 64);
  gap.samples.erase(gap.samples.begin() + 10, gap.samples.begin() + 12);
  CHECK_THROWS_AS(green_area(gap), std::invalid_argument);
}

TEST_CASE("implicit residual") {
  const WobblyEllipse e{2.0, 1.0, 0.0, 0.3, {0.0, 0.0}};
  const ResidualStats exact = implicit_residual({0.25, 0, 1, 0, 0, -1}, sample_curve(e, 100));
  CHECK(exact.max < 1e-12);
  CHECK(exact.rms < 1e-12);

  const HomotheticPair pair{2.0, 1.0};
  const ConicCoeffs e1 = brocard_locus_conic(pair, Which::First);
  CHECK(implicit_residual(e1, sample_homothetic_locus(pair, Which::First, 256)).max < 1e-9);
  // Wrong branch: Omega2 samples are far from E1.
  CHECK(implicit_residual(e1, sample_homothetic_locus(pair, Which::Second, 256)).max > 1e-3);
}

TEST_CASE("conic normalization") {
  const ConicCoeffs q{-2, 0, -2, 0, 0, 2};
  const ConicCoeffs n = q.normalized();
  CHECK(n.A > 0.0);
  CHECK(std::hypot(std::hypot(n.A, n.B, n.C), std::hypot(n.D, n.E, n.F)) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(q.with_unit_constant().F == -1.0);
  CHECK(q.with_unit_constant().A == 1.0);
  CHECK_THROWS_AS(ConicCoeffs{}.normalized(), DegenerateFit);
  CHECK_THROWS_AS((ConicCoeffs{1, 0, 1, 0, 0, 0}.with_unit_constant()), DegenerateFit);
}

TEST_CASE("ellipse geometry") {
  const ConicGeometry g = ellipse_geometry(homothetic_brocard_circle_conic({2.0, 1.0}));
  CHECK(g.semi_major == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(g.semi_minor == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(std::abs(g.tilt) < 1e-14);
  CHECK_THROWS_AS(ellipse_geometry({1, 0, -1, 0, 0, -1}), DegenerateFit);
}

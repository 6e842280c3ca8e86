#include <doctest.h>

#include "brocard/brocard_triangles.hpp"
#include "brocard/homothetic.hpp"
#include "brocard/locus.hpp"
#include "brocard/sampling.hpp"
#include "support.hpp"

using namespace brocard;
using namespace testing;

TEST_CASE("periodic vertices") {
  for (double t : {0.0, 0.4, 2.0}) {
    const Triangle eq = periodic_vertices({1.0, 1.0}, t);
    CHECK(perimeter(eq) == doctest::Approx(3.0 * kSqrt3).epsilon(1e-15));
    CHECK(brocard_angle(eq) == doctest::Approx(kPi / 6.0).epsilon(1e-15));
  }
  const Triangle t = periodic_vertices({2.0, 1.0}, 0.0);
  CHECK(distance(t[0], {2.0, 0.0}) < 1e-15);
  CHECK(distance(t[1], {-1.0, kSqrt3 / 2.0}) < 1e-15);
  CHECK(distance(t[2], {-1.0, -kSqrt3 / 2.0}) < 1e-15);
  CHECK_THROWS_AS(periodic_vertices({1.0, 2.0}, 0.0), OutOfRange);
}

TEST_CASE("sides are tangent to the caustic") {
  for (const HomotheticPair p : {HomotheticPair{2.0, 1.0}, HomotheticPair{3.0, 1.0}, HomotheticPair{1.2, 1.0}}) {
    for (double t : uniform_grid(256)) {
      const Triangle tri = periodic_vertices(p, t);
      for (std::size_t i = 0; i < 3; ++i) {
        CHECK(std::abs(ellipse_tangency_residual(tri[i], tri[(i + 1) % 3], p.inner_a(), p.inner_b())) <
              1e-10);
      }
    }
  }
  // A chord through the center is not tangent.
  CHECK(std::abs(ellipse_tangency_residual({-2.0, 0.0}, {2.0, 0.0}, 1.0, 0.5)) > 0.1);
}

TEST_CASE("brocard locus conics") {
  const HomotheticPair pair{2.0, 1.0};
  const ConicCoeffs e1 = brocard_locus_conic(pair, Which::First);
  const ConicCoeffs e2 = brocard_locus_conic(pair, Which::Second);
  CHECK(e1.B == doctest::Approx(-10.0 * kSqrt3 / 3.0).epsilon(1e-15));
  CHECK(e1.F == -1.0);
  CHECK(e1.A == doctest::Approx((7 * 16 + 6 * 4 + 3) / (4.0 * 9.0)).epsilon(1e-15));
  CHECK(e1.C == doctest::Approx((3 * 16 + 6 * 4 + 7) / 9.0).epsilon(1e-15));
  CHECK(e2.B == -e1.B);
  CHECK(e2.A == e1.A);
  CHECK(e2.C == e1.C);
  CHECK_THROWS_AS(brocard_locus_conic({1.0, 1.0}, Which::First), DegenerateFamily);

  for (const auto& s : sample_homothetic_locus(pair, Which::First, 256).samples) CHECK(std::abs(e1(s.p)) < 1e-9);
  for (const auto& s : sample_homothetic_locus(pair, Which::Second, 256).samples) CHECK(std::abs(e2(s.p)) < 1e-9);
}

TEST_CASE("fitted locus is homothetic to the pair") {
  const FitReport f = fit_conic(sample_homothetic_locus({2.0, 1.0}, Which::First, 256));
  CHECK(f.semi_axes.first / f.semi_axes.second == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(conic_distance(f.coeffs, brocard_locus_conic({2.0, 1.0}, Which::First)) < 1e-7);
}

TEST_CASE("tilt angle") {
  CHECK(std::tan(locus_tilt_angle({2.0, 1.0})) == doctest::Approx(40.0 * kSqrt3 / 59.0).epsilon(1e-14));
  CHECK(std::tan(locus_tilt_angle({1.0 + 1e-6, 1.0})) == doctest::Approx(kSqrt3).epsilon(1e-9));
  CHECK_THROWS_AS(locus_tilt_angle({1.0, 1.0}), DegenerateFamily);
}

TEST_CASE("first brocard triangle vertex map") {
  const HomotheticPair pair{2.0, 1.0};
  CHECK(t1_scale(pair) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(distance(t1_vertex(pair, 0.0, 1), {0.3, 3.0 * kSqrt3 / 20.0}) < 1e-15);

  const auto [ap, bp] = t1_locus_axes(pair);
  CHECK(ap == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(bp == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(ap < pair.a / 2.0);
  CHECK(bp < pair.b / 2.0);
  CHECK(ap / bp == doctest::Approx(pair.a / pair.b).epsilon(1e-15));

  for (double t : uniform_grid(64)) {
    for (int i = 1; i <= 3; ++i) {
      const Point p = t1_vertex(pair, t, i);
      CHECK(std::abs(p.x * p.x / (ap * ap) + p.y * p.y / (bp * bp) - 1.0) < 1e-12);
    }
  }

  const Triangle built = first_brocard_triangle(periodic_vertices(pair, 0.3)).tri;
  for (std::size_t i = 0; i < 3; ++i) {
    double best = 1e300;
    for (int j = 1; j <= 3; ++j) best = std::min(best, distance(built[i], t1_vertex(pair, 0.3, j)));
    CHECK(best < 1e-9);
  }
  CHECK_THROWS_AS(t1_vertex(pair, 0.0, 4), OutOfRange);
  CHECK_THROWS_AS(t1_locus_axes({1.0, 1.0}), DegenerateFamily);
}

TEST_CASE("invariant area and similarity ratio") {
  const HomotheticPair pair{2.0, 1.0};
  CHECK(t1_area(pair) == doctest::Approx(27.0 * kSqrt3 / 200.0).epsilon(1e-15));
  CHECK(similarity_ratio(pair) == doctest::Approx(10.0 / 3.0).epsilon(1e-15));
  CHECK(1.0 / t1_scale(pair) == doctest::Approx(similarity_ratio(pair)).epsilon(1e-15));
  CHECK(t1_area({1.0, 1.0}) == 0.0);

  for (double t : uniform_grid(64)) {
    const Triangle p = periodic_vertices(pair, t);
    const Triangle q{t1_vertex(pair, t, 1), t1_vertex(pair, t, 2), t1_vertex(pair, t, 3)};
    CHECK(area(q) == doctest::Approx(t1_area(pair)).epsilon(1e-10));
    const double k = similarity_ratio(pair);
    CHECK(area(p) / (k * k) == doctest::Approx(t1_area(pair)).epsilon(1e-10));
    CHECK(perimeter(p) / perimeter(first_brocard_triangle(p).tri) ==
          doctest::Approx(10.0 / 3.0).epsilon(1e-10));
  }
}

TEST_CASE("circumradius") {
  for (double t : {0.0, 0.5, 2.0}) CHECK(circumradius_sq({1.0, 1.0}, t) == doctest::Approx(1.0).epsilon(1e-15));
  const HomotheticPair pair{2.0, 1.0};
  for (double t : uniform_grid(64)) {
    const double r = circumcircle(periodic_vertices(pair, t)).radius;
    CHECK(std::abs(r * r - circumradius_sq(pair, t)) < 1e-10);
    // Largest at cos 6t = -1.
    CHECK(circumradius_sq(pair, t) <= circumradius_sq(pair, kPi / 6.0) + 1e-15);
  }
}

TEST_CASE("circumcircle to brocard circle area ratio") {
  const HomotheticPair pair{2.0, 1.0};
  CHECK(brocard_circle_area_ratio(pair) == doctest::Approx(100.0 / 9.0).epsilon(1e-15));
  const double k = similarity_ratio(pair);
  CHECK(brocard_circle_area_ratio(pair) == doctest::Approx(k * k).epsilon(1e-15));
  for (double t : uniform_grid(64)) {
    const Triangle tri = periodic_vertices(pair, t);
    const double q = circumcircle(tri).radius / brocard_circle(tri).radius;
    CHECK(q * q == doctest::Approx(100.0 / 9.0).epsilon(1e-10));
  }
  CHECK_THROWS_AS(brocard_circle_area_ratio({1.0, 1.0}), DegenerateFamily);
}

TEST_CASE("brocard circle conic coincides with the vertex locus") {
  const HomotheticPair pair{2.0, 1.0};
  const ConicGeometry g = ellipse_geometry(homothetic_brocard_circle_conic(pair));
  CHECK(g.semi_major == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(g.semi_minor == doctest::Approx(0.3).epsilon(1e-14));
  const auto [ap, bp] = t1_locus_axes(pair);
  CHECK(conic_distance(homothetic_brocard_circle_conic(pair), {1.0 / (ap * ap), 0, 1.0 / (bp * bp), 0, 0, -1}) <
        1e-15);
  CHECK_THROWS_AS(homothetic_brocard_circle_conic({1.0, 1.0}), DegenerateFamily);
}

TEST_CASE("special ratios") {
  const HomotheticPair pair{2.0, 1.0};
  const double y0 = e1_y_intercept(pair);
  CHECK(y0 == doctest::Approx(3.0 / std::sqrt(79.0)).epsilon(1e-15));
  CHECK(std::abs(brocard_locus_conic(pair, Which::First)({0.0, y0})) < 1e-14);

  // At a/b = 2 the locus is well inside the caustic, at 3 it pokes out.
  CHECK(e1_caustic_max({2.0, 1.0}) < 1.0);
  CHECK(e1_caustic_max({3.0, 1.0}) > 1.0);

  const SpecialRatios r = special_ratio_roots();
  CHECK(std::abs(r.tangency - kSqrt5) < 1e-6);
  CHECK(std::abs(r.intercept - 3.8) < 0.05);
  const double c = intercept_ratio_closed_form();
  CHECK(std::abs(r.intercept - c) < 1e-9);
  CHECK(c * c * c * c - 14.0 * c * c - 3.0 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(e1_y_intercept({c, 1.0}) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("conserved quantities") {
  const HomotheticPair pair{2.0, 1.0};
  const Triangle ref = periodic_vertices(pair, 0.0);
  for (double t : uniform_grid(256)) {
    const Triangle tri = periodic_vertices(pair, t);
    CHECK(brocard_angle(tri) == doctest::Approx(brocard_angle(ref)).epsilon(1e-12));
    CHECK(area(tri) == doctest::Approx(area(ref)).epsilon(1e-12));
    CHECK(sum_squared_sides(tri) == doctest::Approx(sum_squared_sides(ref)).epsilon(1e-12));
  }
}

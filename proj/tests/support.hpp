#ifndef BROCARD_TESTS_SUPPORT_HPP_
#define BROCARD_TESTS_SUPPORT_HPP_

#include <cmath>
#include <random>

#include "brocard/geometry.hpp"

namespace testing {

using brocard::Point;
using brocard::Triangle;

inline const double kSqrt3 = std::sqrt(3.0);
inline const double kSqrt5 = std::sqrt(5.0);

inline Triangle equilateral(Point c = {0.0, 0.0}, double r = 1.0, double phase = 0.0) {
  auto at = [&](int k) {
    const double u = phase + 2.0 * brocard::kPi * k / 3.0;
    return c + Point{r * std::cos(u), r * std::sin(u)};
  };
  return {at(0), at(1), at(2)};
}

inline double min_angle(const Triangle& t) {
  double m = brocard::kPi;
  for (std::size_t i = 0; i < 3; ++i) {
    const Point u = t[(i + 1) % 3] - t[i], v = t[(i + 2) % 3] - t[i];
    m = std::min(m, std::atan2(std::abs(brocard::cross(u, v)), brocard::dot(u, v)));
  }
  return m;
}

// Random triangles in [-1, 1]^2 with every angle above `min_deg`, both
// orientations.
class TriangleSource {
 public:
  explicit TriangleSource(std::uint64_t seed, double min_deg = 5.0)
      : rng_(seed), min_(min_deg * brocard::kPi / 180.0) {}

  Triangle next() {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
      Triangle t{{u(rng_), u(rng_)}, {u(rng_), u(rng_)}, {u(rng_), u(rng_)}};
      if (min_angle(t) > min_) return t;
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  double min_;
};

inline Point reflect(const Point& p, const Point& a, const Point& dir) {
  const Point d = dir / brocard::norm(dir);
  const Point r = p - a;
  return a + 2.0 * brocard::dot(r, d) * d - r;
}

inline Triangle reflect(const Triangle& t, const Point& a, const Point& dir) {
  return {reflect(t[0], a, dir), reflect(t[1], a, dir), reflect(t[2], a, dir)};
}

// Reorders to counterclockwise, keeping p1 first.
inline Triangle ccw(const Triangle& t) {
  return brocard::signed_area(t) < 0.0 ? Triangle{t[0], t[2], t[1]} : t;
}

}  // namespace testing

#endif

#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qb/geom.hpp"
#include "qb/verify.hpp"

namespace qbtest {

using namespace qb;

// Signed-area-aware point-in-convex test; tol > 0 admits boundary points.
inline bool insideConvex(const std::vector<Point>& poly, Point p, double tol = 1e-9) {
  const int n = static_cast<int>(poly.size());
  double area2 = 0.0;
  for (int i = 0; i < n; ++i)
    area2 += cross(poly[static_cast<size_t>(i)], poly[static_cast<size_t>((i + 1) % n)]);
  const double sign = area2 >= 0.0 ? 1.0 : -1.0;
  for (int i = 0; i < n; ++i) {
    Vec2 e = poly[static_cast<size_t>((i + 1) % n)] - poly[static_cast<size_t>(i)];
    if (sign * cross(e, p - poly[static_cast<size_t>(i)]) < -tol) return false;
  }
  return true;
}

// Valid chart draw over a wide box, for realize round-trip properties.
inline QuadParams drawWideParams(SampleRng& rng) {
  for (;;) {
    double a = rng.uniform(0.15, 1.35), b = rng.uniform(0.15, 1.35);
    double c = rng.uniform(0.15, 1.35), d = rng.uniform(0.15, 1.35);
    if (a + b < kPi - 0.05 && b + c < kPi - 0.05 && c + d < kPi - 0.05 &&
        d + a < kPi - 0.05)
      return QuadParams(Angle::radians(a), Angle::radians(b), Angle::radians(c),
                        Angle::radians(d));
  }
}

inline ConvexPolygon acuteTriangle(SampleRng& rng) {
  for (;;) {
    double A = rng.uniform(0.7, kPi / 2.0 - 0.08);
    double B = rng.uniform(0.7, kPi / 2.0 - 0.08);
    double C = kPi - A - B;
    if (C > 0.7 && C < kPi / 2.0 - 0.08)
      return triangleFromAngles(Angle::radians(A), Angle::radians(B));
  }
}

inline ConvexPolygon obtuseTriangle(SampleRng& rng) {
  double A = rng.uniform(kPi / 2.0 + 0.1, kPi - 0.5);
  double B = rng.uniform(0.2, kPi - A - 0.15);
  return triangleFromAngles(Angle::radians(A), Angle::radians(B));
}

inline ConvexPolygon scaled(const ConvexPolygon& poly, double s) {
  std::vector<Point> v = poly.vertices();
  for (Point& p : v) p = s * p;
  return ConvexPolygon(v);
}

}  // namespace qbtest

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qb/geom.hpp"

namespace qb {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Residual of the ladder threshold equation at half-width eps. The root in
// (0, pi/8] marks how far from the square the X(n) corridor survives.
// With x = pi/2 - 2*eps and y = ((n-1)*pi - (n-2)*x)/n, the residual is
//   tan(pi/4 - eps) * cos(2*eps)
//     - sum_{i=1..n} [cos((2i-1)x + (2i-2)y) - cos((2i-1)x + i*pi)].
inline double epsilonResidual(int n, double eps) {
  if (n < 2) throw std::invalid_argument("epsilonResidual: n must be at least 2");
  double x = kPi / 2.0 - 2.0 * eps;
  double y = ((n - 1) * kPi - (n - 2) * x) / n;
  double yp = kPi / 2.0;
  double s = 0.0;
  for (int i = 1; i <= n; ++i) {
    s += std::cos((2 * i - 1) * x + (2 * i - 2) * y);
    s -= std::cos((2 * i - 1) * x + (2 * i) * yp);
  }
  return std::tan(kPi / 4.0 - eps) * std::cos(2.0 * eps) - s;
}

// Least positive root of epsilonResidual(n, .): sign scan over (0, pi/8] in
// steps of pi/4096, then bisection to 1e-14. The residual at 0 is exactly 1.
inline Angle epsilonN(int n) {
  if (n < 2) throw std::invalid_argument("epsilonN: n must be at least 2");
  const double step = kPi / 4096.0;
  double prevE = 0.0;
  double prevF = epsilonResidual(n, 0.0);
  if (!(prevF > 0.0)) throw SolverError("epsilonN: residual at 0 not positive");
  for (double e = step; e <= kPi / 8.0 + 1e-15; e += step) {
    double f = epsilonResidual(n, e);
    if ((prevF > 0.0) == (f > 0.0) && f != 0.0) {
      prevE = e;
      prevF = f;
      continue;
    }
    double lo = prevE, hi = e, flo = prevF;
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
      double mid = 0.5 * (lo + hi);
      double fm = epsilonResidual(n, mid);
      if ((flo > 0.0) != (fm > 0.0)) {
        hi = mid;
      } else {
        lo = mid;
        flo = fm;
      }
    }
    return Angle::radians(0.5 * (lo + hi));
  }
  throw SolverError("epsilonN: no sign change in (0, pi/8] for n = " + std::to_string(n));
}

// Bounds on the ratio of adjacent edge lengths over the eps-near-square chart:
// low = tan(pi/4 - eps) * cos(2*eps), high = tan(pi/4 + eps) / cos(2*eps).
// low * high = 1, and both tend to 1 as eps tends to 0.
inline std::pair<double, double> adjacentEdgeBounds(Angle eps) {
  double e = eps.rad();
  if (!(e >= 0.0) || e >= kPi / 4.0)
    throw std::invalid_argument("adjacentEdgeBounds: eps must lie in [0, pi/4)");
  return {std::tan(kPi / 4.0 - e) * std::cos(2.0 * e),
          std::tan(kPi / 4.0 + e) / std::cos(2.0 * e)};
}

// Chart of the same quadrilateral rerooted at the other diagonal BD, read from
// corner B with the mirrored orientation, so the map is an involution. The
// square is a fixed point, and the rectangle line maps into itself.
inline QuadParams otherDiagonalParams(const QuadParams& q) {
  ConvexPolygon poly = realize(q);
  Point A = poly.vertex(0), B = poly.vertex(1), C = poly.vertex(2), D = poly.vertex(3);
  auto at = [](Point v, Point u, Point w) {
    Vec2 p = u - v, r = w - v;
    return Angle::radians(std::atan2(std::abs(cross(p, r)), dot(p, r)));
  };
  Angle p1 = at(B, A, D);  // between BA and the diagonal BD
  Angle p2 = at(B, D, C);  // between the diagonal and BC
  Angle p3 = at(D, B, C);  // between the diagonal and DC
  Angle p4 = at(D, A, B);  // between DA and the diagonal
  return QuadParams(p1, p4, p3, p2);
}

// The ladder boundary line (n-1)*alpha + (n+1)*beta = n*pi in the alpha-beta
// plane; gradient d(beta)/d(alpha) = -(n-1)/(n+1).
struct RegionLineCoeffs {
  double alphaCoeff = 0.0;
  double betaCoeff = 0.0;
  double rhs = 0.0;

  double gradient() const { return -alphaCoeff / betaCoeff; }
  double evaluate(Angle alpha, Angle beta) const {
    return alphaCoeff * alpha.rad() + betaCoeff * beta.rad() - rhs;
  }
};

inline RegionLineCoeffs regionLine(int n) {
  if (n < 2) throw std::invalid_argument("regionLine: n must be at least 2");
  return {static_cast<double>(n - 1), static_cast<double>(n + 1), n * kPi};
}

}  // namespace qb

#pragma once

#include <array>
#include <stdexcept>
#include <string_view>

#include "qb/geom.hpp"
#include "qb/orbit_catalog.hpp"

namespace qb {

// Corner angles within this of pi/2 count as right; below it as acute.
inline constexpr double kTolAngle = 1e-9;
// Membership tolerance for the ladder boundary lines.
inline constexpr double kTolLine = 1e-9;

enum class Region { Rect, F, R, A, X2, X3, L2, L3 };

inline std::string_view regionName(Region r) {
  switch (r) {
    case Region::Rect: return "Rect";
    case Region::F: return "F";
    case Region::R: return "R";
    case Region::A: return "A";
    case Region::X2: return "X2";
    case Region::X3: return "X3";
    case Region::L2: return "L2";
    case Region::L3: return "L3";
  }
  return {};
}

inline OrbitFamily familyFor(Region r) {
  switch (r) {
    case Region::Rect: return OrbitFamily::rect();
    case Region::F: return OrbitFamily::f();
    case Region::R: return OrbitFamily::r();
    case Region::A: return OrbitFamily::a();
    case Region::X2: return OrbitFamily::x(2);
    case Region::X3: return OrbitFamily::x(3);
    case Region::L2: return OrbitFamily::y(2);
    case Region::L3: return OrbitFamily::y(3);
  }
  throw std::logic_error("familyFor: bad region");
}

struct RegionLabel {
  Region region;
  OrbitFamily family;
};

// alpha: smallest corner angle; beta: the smaller of its two neighbors;
// gamma: the other neighbor; theta: the opposite corner. Ties break toward the
// lower corner index. Rectangles report alpha = beta = pi/2 with corner -1.
struct AlphaBetaPoint {
  Angle alpha;
  Angle beta;
  Angle gamma;
  Angle theta;
  int alphaCorner = -1;
  int betaCorner = -1;
};

inline AlphaBetaPoint alphaBeta(const QuadParams& q) {
  std::array<Angle, 4> cs = cornerAngles(q);
  bool rect = true;
  for (Angle c : cs)
    if (std::abs(c.rad() - kPi / 2.0) > kTolAngle) rect = false;
  if (rect) {
    Angle half = Angle::radians(kPi / 2.0);
    return {half, half, half, half, -1, -1};
  }
  int ai = 0;
  for (int i = 1; i < 4; ++i)
    if (cs[i].rad() < cs[ai].rad()) ai = i;
  int prev = (ai + 3) % 4, next = (ai + 1) % 4;
  int bi = cs[prev].rad() < cs[next].rad()  ? prev
           : cs[next].rad() < cs[prev].rad() ? next
                                             : std::min(prev, next);
  int gi = bi == prev ? next : prev;
  return {cs[ai], cs[bi], cs[gi], cs[(ai + 2) % 4], ai, bi};
}

// Chart of the same quadrilateral reflected across the diagonal AC; corners
// B and D trade places.
inline QuadParams mirrorChart(const QuadParams& q) {
  return QuadParams(q.d(), q.c(), q.b(), q.a());
}

// All parameters within eps of pi/4, strictly.
inline bool nearSquare(const QuadParams& q, Angle eps) {
  for (double p : q.rad())
    if (std::abs(p - kPi / 4.0) >= eps.rad()) return false;
  return true;
}

// Region decision. Routing order matters: corner-sign cases first (rectangle,
// adjacent acute, acute beside right, opposite acute), then the alpha-beta
// halfplane splits along the ladder lines alpha+3*beta = 2*pi and
// alpha+2*beta = 3*pi/2.
inline RegionLabel classify(const QuadParams& q) {
  auto mk = [](Region r) { return RegionLabel{r, familyFor(r)}; };
  std::array<Angle, 4> cs = cornerAngles(q);
  std::array<bool, 4> acute{}, right{};
  bool allRight = true;
  for (int i = 0; i < 4; ++i) {
    acute[i] = cs[i].rad() < kPi / 2.0 - kTolAngle;
    right[i] = std::abs(cs[i].rad() - kPi / 2.0) <= kTolAngle;
    allRight = allRight && right[i];
  }
  if (allRight) return mk(Region::Rect);
  for (int i = 0; i < 4; ++i)
    if (acute[i] && acute[(i + 1) % 4]) return mk(Region::F);
  for (int i = 0; i < 4; ++i)
    if (acute[i] && (right[(i + 1) % 4] || right[(i + 3) % 4])) return mk(Region::R);
  if ((acute[0] && acute[2]) || (acute[1] && acute[3])) return mk(Region::A);

  // One acute corner left, both neighbors obtuse, opposite corner not acute.
  AlphaBetaPoint ab = alphaBeta(q);
  double s2 = ab.alpha.rad() + 3.0 * ab.beta.rad() - 2.0 * kPi;
  double s3 = ab.alpha.rad() + 2.0 * ab.beta.rad() - 1.5 * kPi;
  if (std::abs(s2) <= kTolLine) return mk(Region::L2);
  if (std::abs(s3) <= kTolLine) return mk(Region::L3);
  if (s2 < 0.0) return mk(Region::X2);
  if (s3 < 0.0) return mk(Region::X3);
  throw std::logic_error("classify: alpha-beta point outside every region");
}

}  // namespace qb

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qb {

inline constexpr double kPi = std::numbers::pi;

// Segments with |dx| at or below this are treated as vertical.
inline constexpr double kVerticalTol = 1e-12;

struct VerticalSegmentError : std::domain_error {
  using std::domain_error::domain_error;
};

// Wraps to (-pi, pi].
inline double wrapToPi(double a) {
  double r = std::fmod(a + kPi, 2.0 * kPi);
  if (r <= 0.0) r += 2.0 * kPi;
  return r - kPi;
}

// Wraps to (-pi/2, pi/2]; line directions are defined modulo pi.
inline double wrapToHalfPi(double a) {
  double r = std::fmod(a + kPi / 2.0, kPi);
  if (r <= 0.0) r += kPi;
  return r - kPi / 2.0;
}

class Angle {
 public:
  constexpr Angle() = default;

  static Angle radians(double r) {
    if (!std::isfinite(r)) throw std::invalid_argument("Angle: non-finite value");
    return Angle(r);
  }
  static Angle degrees(double d) { return radians(d * kPi / 180.0); }

  constexpr double rad() const { return rad_; }
  double deg() const { return rad_ * 180.0 / kPi; }

  friend constexpr bool operator==(Angle a, Angle b) = default;
  friend constexpr auto operator<=>(Angle a, Angle b) = default;
  friend Angle operator+(Angle a, Angle b) { return radians(a.rad_ + b.rad_); }
  friend Angle operator-(Angle a, Angle b) { return radians(a.rad_ - b.rad_); }
  friend Angle operator*(double s, Angle a) { return radians(s * a.rad_); }

 private:
  explicit constexpr Angle(double r) : rad_(r) {}
  double rad_ = 0.0;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
};

using Point = Vec2;

inline constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
// Counterclockwise quarter turn.
inline constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

struct Segment {
  Point a;
  Point b;
};

// Direct isometry R(theta) or indirect R(theta)*S with S = diag(1,-1);
// p maps to linear(p) + t. theta stays in (-pi, pi].
class Isometry {
 public:
  Isometry() = default;

  static Isometry identity() { return {}; }
  static Isometry translation(Vec2 t) { return Isometry(0.0, t, false); }
  static Isometry rotation(Angle theta) { return Isometry(theta.rad(), {0.0, 0.0}, false); }

  Vec2 linear(Vec2 v) const {
    if (reversing_) v.y = -v.y;
    double c = std::cos(theta_), s = std::sin(theta_);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
  }
  Point operator()(Point p) const { return linear(p) + t_; }

  // f * g applies g first. Uses S*R(theta) = R(-theta)*S.
  friend Isometry operator*(const Isometry& f, const Isometry& g) {
    double theta = f.theta_ + (f.reversing_ ? -g.theta_ : g.theta_);
    return Isometry(theta, f.linear(g.t_) + f.t_, f.reversing_ != g.reversing_);
  }

  Isometry inverse() const {
    if (reversing_) return Isometry(theta_, -linear(t_), true);
    Isometry r(-theta_, {0.0, 0.0}, false);
    return Isometry(-theta_, -r.linear(t_), false);
  }

  double rotationAngle() const { return theta_; }
  Vec2 translationPart() const { return t_; }
  bool orientationReversing() const { return reversing_; }

  // Reflection in the line through p with direction angle phi.
  static Isometry lineReflection(Point p, double phi) {
    Isometry lin(2.0 * phi, {0.0, 0.0}, true);
    return Isometry(lin.theta_, p - lin.linear(p), true);
  }

 private:
  Isometry(double theta, Vec2 t, bool reversing)
      : theta_(wrapToPi(theta)), t_(t), reversing_(reversing) {}

  double theta_ = 0.0;
  Vec2 t_{};
  bool reversing_ = false;
};

// Reflection in the line through p and q.
inline Isometry reflectAcross(Point p, Point q) {
  Vec2 d = q - p;
  if (norm(d) < 1e-14)
    throw std::invalid_argument("reflectAcross: coincident points");
  return Isometry::lineReflection(p, std::atan2(d.y, d.x));
}

// Strictly convex counterclockwise vertex cycle, validated on construction.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> vertices) : v_(std::move(vertices)) {
    const int n = static_cast<int>(v_.size());
    if (n < 3) throw std::invalid_argument("ConvexPolygon: need at least 3 vertices");
    for (const Point& p : v_)
      if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw std::invalid_argument("ConvexPolygon: non-finite vertex");
    for (int i = 0; i < n; ++i) {
      Vec2 e0 = v_[(i + 1) % n] - v_[i];
      Vec2 e1 = v_[(i + 2) % n] - v_[(i + 1) % n];
      if (!(cross(e0, e1) > 0.0))
        throw std::invalid_argument("ConvexPolygon: vertices not strictly convex ccw");
    }
  }

  int size() const { return static_cast<int>(v_.size()); }
  const std::vector<Point>& vertices() const { return v_; }
  const Point& vertex(int i) const { return v_[mod(i)]; }
  Segment edge(int k) const { return {v_[mod(k)], v_[mod(k + 1)]}; }

  double interiorAngle(int i) const {
    Vec2 u = vertex(i - 1) - vertex(i);
    Vec2 w = vertex(i + 1) - vertex(i);
    return std::atan2(std::abs(cross(u, w)), dot(u, w));
  }

 private:
  int mod(int i) const {
    int n = size();
    int r = i % n;
    return r < 0 ? r + n : r;
  }
  std::vector<Point> v_;
};

// Four-angle chart of a convex quadrilateral ABCD with diagonal AC of length 1:
// a, d are the angles AC makes with AB, AD at A; b, c the angles at C with CB, CD.
// Valid iff all four are positive and a+b, b+c, c+d, d+a each stay below pi.
class QuadParams {
 public:
  QuadParams(Angle a, Angle b, Angle c, Angle d) : p_{a, b, c, d} {
    auto bad = [](double v) { return !(v > 0.0) || !std::isfinite(v); };
    if (bad(a.rad()) || bad(b.rad()) || bad(c.rad()) || bad(d.rad()))
      throw std::invalid_argument("QuadParams: parameters must be positive");
    auto over = [](Angle u, Angle v) { return u.rad() + v.rad() >= kPi; };
    if (over(a, b) || over(b, c) || over(c, d) || over(d, a))
      throw std::invalid_argument("QuadParams: adjacent parameter sums must stay below pi");
  }

  static QuadParams square() {
    Angle q = Angle::radians(kPi / 4.0);
    return QuadParams(q, q, q, q);
  }

  Angle a() const { return p_[0]; }
  Angle b() const { return p_[1]; }
  Angle c() const { return p_[2]; }
  Angle d() const { return p_[3]; }
  Angle param(int i) const { return p_.at(static_cast<size_t>(i)); }
  std::array<double, 4> rad() const {
    return {p_[0].rad(), p_[1].rad(), p_[2].rad(), p_[3].rad()};
  }

  friend bool operator==(const QuadParams&, const QuadParams&) = default;

 private:
  std::array<Angle, 4> p_;
};

// Corner angles (at A, B, C, D) of the realized quadrilateral.
inline std::array<Angle, 4> cornerAngles(const QuadParams& q) {
  auto [a, b, c, d] = q.rad();
  return {Angle::radians(a + d), Angle::radians(kPi - a - b),
          Angle::radians(b + c), Angle::radians(kPi - c - d)};
}

// Vertex placement: A at the origin, C at (1,0), B below the diagonal and D
// above it. Uses the sine rule, so right angles at b or d need no special case.
inline ConvexPolygon realize(const QuadParams& q) {
  auto [a, b, c, d] = q.rad();
  double sab = std::sin(a + b), scd = std::sin(c + d);
  Point B{std::cos(a) * std::sin(b) / sab, -std::sin(a) * std::sin(b) / sab};
  Point D{std::cos(d) * std::sin(c) / scd, std::sin(d) * std::sin(c) / scd};
  return ConvexPolygon({{0.0, 0.0}, B, {1.0, 0.0}, D});
}

// Triangle with the given interior angles at (0,0) and (1,0), apex above.
inline ConvexPolygon triangleFromAngles(Angle at0, Angle at1) {
  double A = at0.rad(), B = at1.rad();
  if (!(A > 0.0) || !(B > 0.0) || !(A + B < kPi))
    throw std::invalid_argument("triangleFromAngles: angles must be positive with sum below pi");
  double s = std::sin(B) / std::sin(A + B);
  return ConvexPolygon({{0.0, 0.0}, {1.0, 0.0}, {std::cos(A) * s, std::sin(A) * s}});
}

// Angle of the line pq against the x axis, in (-pi/2, pi/2).
inline Angle angularSlope(Point p, Point q) {
  double dx = q.x - p.x;
  if (std::abs(dx) <= kVerticalTol)
    throw VerticalSegmentError("angularSlope: segment is vertical");
  return Angle::radians(std::atan((q.y - p.y) / dx));
}

// Inverts the corner map: given target corner angles summing to 2*pi and the
// free parameter a, returns the unique chart member. The corner map has a
// one-dimensional kernel, so a must be supplied.
inline QuadParams quadFromCorners(const std::array<Angle, 4>& corners, Angle a) {
  double A = corners[0].rad(), B = corners[1].rad();
  double C = corners[2].rad(), D = corners[3].rad();
  if (std::abs(A + B + C + D - 2.0 * kPi) > 1e-9)
    throw std::invalid_argument("quadFromCorners: corner angles must sum to 2*pi");
  double av = a.rad();
  double b = kPi - B - av;
  double c = C - b;
  double d = kPi - D - c;
  return QuadParams(a, Angle::radians(b), Angle::radians(c), Angle::radians(d));
}

// Chart member whose largest parameter deviation from pi/4 is minimal. Each
// deviation is |a - k_i| for a breakpoint k_i linear in the targets, so the
// optimum is the midpoint of the extreme breakpoints.
inline QuadParams centeredQuadFromCorners(const std::array<Angle, 4>& corners) {
  double B = corners[1].rad(), C = corners[2].rad(), D = corners[3].rad();
  std::array<double, 4> k = {kPi / 4.0, 0.75 * kPi - B, 1.25 * kPi - B - C,
                             1.75 * kPi - B - C - D};
  auto [lo, hi] = std::minmax_element(k.begin(), k.end());
  return quadFromCorners(corners, Angle::radians(0.5 * (*lo + *hi)));
}

}  // namespace qb

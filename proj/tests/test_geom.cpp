#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qb/geom.hpp"

using namespace qb;
using Catch::Approx;

TEST_CASE("angle wrapping keeps the half-open ranges") {
  REQUIRE(wrapToPi(kPi) == Approx(kPi));
  REQUIRE(wrapToPi(-kPi) == Approx(kPi));
  REQUIRE(wrapToPi(1.5 * kPi) == Approx(-0.5 * kPi));
  REQUIRE(wrapToPi(0.25) == Approx(0.25));
  REQUIRE(wrapToHalfPi(kPi / 2.0) == Approx(kPi / 2.0));
  REQUIRE(wrapToHalfPi(0.6 * kPi) == Approx(-0.4 * kPi));
  REQUIRE(wrapToHalfPi(kPi / 2.0 + 2.0 * kPi) == Approx(kPi / 2.0));
}

TEST_CASE("angle type validates and converts") {
  REQUIRE(Angle::degrees(45).rad() == Approx(kPi / 4.0));
  REQUIRE(Angle::radians(1.0).deg() == Approx(180.0 / kPi));
  REQUIRE_THROWS_AS(Angle::radians(std::numeric_limits<double>::quiet_NaN()),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(Angle::radians(std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("square chart realizes the unit-diagonal square") {
  ConvexPolygon p = realize(QuadParams::square());
  REQUIRE(p.size() == 4);
  REQUIRE(p.vertex(0).x == Approx(0.0).margin(1e-15));
  REQUIRE(p.vertex(0).y == Approx(0.0).margin(1e-15));
  REQUIRE(p.vertex(1).x == Approx(0.5).margin(1e-12));
  REQUIRE(p.vertex(1).y == Approx(-0.5).margin(1e-12));
  REQUIRE(p.vertex(2).x == Approx(1.0).margin(1e-15));
  REQUIRE(p.vertex(2).y == Approx(0.0).margin(1e-15));
  REQUIRE(p.vertex(3).x == Approx(0.5).margin(1e-12));
  REQUIRE(p.vertex(3).y == Approx(0.5).margin(1e-12));
}

TEST_CASE("corner angles are the four parameter sums") {
  QuadParams q(Angle::radians(kPi / 3), Angle::radians(kPi / 6), Angle::radians(kPi / 6),
               Angle::radians(kPi / 3));
  auto cs = cornerAngles(q);
  REQUIRE(cs[0].rad() == Approx(2.0 * kPi / 3.0));
  REQUIRE(cs[1].rad() == Approx(kPi / 2.0));
  REQUIRE(cs[2].rad() == Approx(kPi / 3.0));
  REQUIRE(cs[3].rad() == Approx(kPi / 2.0));
  ConvexPolygon p = realize(q);
  for (int i = 0; i < 4; ++i)
    REQUIRE(p.interiorAngle(i) == Approx(cs[static_cast<size_t>(i)].rad()).margin(1e-9));
}

TEST_CASE("adjacent-acute chart example realizes as expected") {
  QuadParams q(Angle::radians(0.80), Angle::radians(0.80), Angle::radians(0.77),
               Angle::radians(0.76));
  auto cs = cornerAngles(q);
  REQUIRE(cs[0].rad() == Approx(1.5600).margin(1e-4));
  REQUIRE(cs[1].rad() == Approx(1.5416).margin(1e-4));
  REQUIRE(cs[2].rad() == Approx(1.5700).margin(1e-4));
  REQUIRE(cs[3].rad() == Approx(1.6116).margin(1e-4));
  REQUIRE(cs[0].rad() < kPi / 2.0);
  REQUIRE(cs[1].rad() < kPi / 2.0);
}

TEST_CASE("realization round-trips measured corners and keeps the unit diagonal") {
  SampleRng rng(101);
  for (int it = 0; it < 200; ++it) {
    QuadParams q = qbtest::drawWideParams(rng);
    ConvexPolygon p = realize(q);
    auto cs = cornerAngles(q);
    for (int i = 0; i < 4; ++i)
      REQUIRE(p.interiorAngle(i) == Approx(cs[static_cast<size_t>(i)].rad()).margin(1e-9));
    REQUIRE(distance(p.vertex(0), p.vertex(2)) == Approx(1.0).margin(1e-15));
    REQUIRE(p.vertex(1).y < 0.0);
    REQUIRE(p.vertex(3).y > 0.0);
  }
}

TEST_CASE("quad params validation rejects degenerate charts") {
  auto r = [](double v) { return Angle::radians(v); };
  REQUIRE_THROWS_AS(QuadParams(r(0.0), r(0.5), r(0.5), r(0.5)), std::invalid_argument);
  REQUIRE_THROWS_AS(QuadParams(r(-0.1), r(0.5), r(0.5), r(0.5)), std::invalid_argument);
  REQUIRE_THROWS_AS(QuadParams(r(1.8), r(1.5), r(0.5), r(0.5)), std::invalid_argument);
  REQUIRE_THROWS_AS(QuadParams(r(0.5), r(0.5), r(1.6), r(1.6)), std::invalid_argument);
  REQUIRE_NOTHROW(QuadParams(r(1.0), r(1.0), r(1.0), r(1.0)));
}

TEST_CASE("convex polygon validation") {
  REQUIRE_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}}), std::invalid_argument);
  // clockwise square
  REQUIRE_THROWS_AS(ConvexPolygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), std::invalid_argument);
  // collinear triple
  REQUIRE_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), std::invalid_argument);
  // repeated vertex
  REQUIRE_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), std::invalid_argument);
  REQUIRE_NOTHROW(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}

TEST_CASE("reflection across the x axis flips y") {
  Isometry r = reflectAcross({0, 0}, {1, 0});
  Point img = r({1, 1});
  REQUIRE(img.x == Approx(1.0).margin(1e-15));
  REQUIRE(img.y == Approx(-1.0).margin(1e-15));
  REQUIRE(r.orientationReversing());
}

TEST_CASE("reflections across parallel lines compose to a translation") {
  Isometry r1 = reflectAcross({0, 0}, {1, 0});
  Isometry r2 = reflectAcross({0, 1}, {1, 1});
  Isometry t = r2 * r1;
  REQUIRE_FALSE(t.orientationReversing());
  REQUIRE(std::abs(t.rotationAngle()) < 1e-15);
  SampleRng rng(7);
  for (int i = 0; i < 20; ++i) {
    Point p{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    Point q = t(p);
    REQUIRE(q.x == Approx(p.x).margin(1e-12));
    REQUIRE(q.y == Approx(p.y + 2.0).margin(1e-12));
  }
}

TEST_CASE("reflections across crossing lines compose to a rotation about the crossing") {
  Isometry r1 = reflectAcross({0, 0}, {1, 0});
  Isometry r2 = reflectAcross({0, 0}, {std::cos(kPi / 6), std::sin(kPi / 6)});
  Isometry rot = r2 * r1;
  REQUIRE_FALSE(rot.orientationReversing());
  REQUIRE(rot.rotationAngle() == Approx(kPi / 3.0).margin(1e-12));
  Point fixed = rot({0, 0});
  REQUIRE(norm(fixed) < 1e-15);
}

TEST_CASE("reflection requires two distinct points") {
  REQUIRE_THROWS_AS(reflectAcross({1, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("isometry algebra: inverses, involutions, rigidity") {
  SampleRng rng(55);
  for (int it = 0; it < 50; ++it) {
    Point p1{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    Point p2{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    if (distance(p1, p2) < 0.1) continue;
    Isometry refl = reflectAcross(p1, p2);
    Isometry g = refl * Isometry::rotation(Angle::radians(rng.uniform(-3, 3))) *
                 Isometry::translation({rng.uniform(-2, 2), rng.uniform(-2, 2)});
    Isometry gid = g * g.inverse();
    Isometry rr = refl * refl;
    Point a{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    Point b{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    REQUIRE(distance(gid(a), a) < 1e-12);
    REQUIRE(distance(rr(a), a) < 1e-12);
    REQUIRE(distance(g(a), g(b)) == Approx(distance(a, b)).margin(1e-12));
  }
}

TEST_CASE("angular slope of segments") {
  REQUIRE(angularSlope({0, 0}, {1, 0}).rad() == Approx(0.0).margin(1e-15));
  REQUIRE(angularSlope({0, 0}, {1, 1}).rad() == Approx(kPi / 4.0));
  REQUIRE(angularSlope({0, 0}, {2, -1}).rad() == Approx(-0.4636476090008061).margin(1e-15));
  // direction does not matter
  REQUIRE(angularSlope({2, -1}, {0, 0}).rad() == Approx(-0.4636476090008061).margin(1e-15));
  REQUIRE_THROWS_AS(angularSlope({0, 0}, {0, 1}), VerticalSegmentError);
  REQUIRE_THROWS_AS(angularSlope({3, 0}, {3 + 1e-13, 5}), VerticalSegmentError);
  REQUIRE_NOTHROW(angularSlope({3, 0}, {3 + 1e-11, 5}));
}

TEST_CASE("triangle construction from two base angles") {
  ConvexPolygon t = triangleFromAngles(Angle::radians(kPi / 2), Angle::radians(kPi / 4));
  REQUIRE(t.vertex(2).x == Approx(0.0).margin(1e-12));
  REQUIRE(t.vertex(2).y == Approx(1.0).margin(1e-12));
  REQUIRE_THROWS_AS(triangleFromAngles(Angle::radians(2.0), Angle::radians(1.5)),
                    std::invalid_argument);
}

TEST_CASE("corner-target inversion reproduces the chart member") {
  SampleRng rng(202);
  for (int it = 0; it < 100; ++it) {
    QuadParams q = qbtest::drawWideParams(rng);
    auto cs = cornerAngles(q);
    QuadParams back = quadFromCorners(cs, q.a());
    for (int i = 0; i < 4; ++i)
      REQUIRE(back.rad()[static_cast<size_t>(i)] ==
              Approx(q.rad()[static_cast<size_t>(i)]).margin(1e-12));
  }
}

TEST_CASE("centered inversion hits the targets and centers the chart") {
  std::array<Angle, 4> targets = {
      Angle::radians(kPi / 2 - 0.02), Angle::radians(kPi / 2 + 0.018),
      Angle::radians(kPi / 2 - 0.015), Angle::radians(kPi / 2 + 0.017)};
  QuadParams q = centeredQuadFromCorners(targets);
  auto cs = cornerAngles(q);
  for (int i = 0; i < 4; ++i)
    REQUIRE(cs[static_cast<size_t>(i)].rad() ==
            Approx(targets[static_cast<size_t>(i)].rad()).margin(1e-12));
  // no other chart member with the same corners deviates less
  double dev = 0.0;
  for (double p : q.rad()) dev = std::max(dev, std::abs(p - kPi / 4.0));
  SampleRng rng(8);
  for (int it = 0; it < 50; ++it) {
    QuadParams other = quadFromCorners(targets, Angle::radians(q.a().rad() + rng.uniform(-0.01, 0.01)));
    double odev = 0.0;
    for (double p : other.rad()) odev = std::max(odev, std::abs(p - kPi / 4.0));
    REQUIRE(odev >= dev - 1e-12);
  }
  REQUIRE_THROWS_AS(
      centeredQuadFromCorners({Angle::radians(1.5), Angle::radians(1.5),
                               Angle::radians(1.5), Angle::radians(1.5)}),
      std::invalid_argument);
}

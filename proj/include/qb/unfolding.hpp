#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qb/geom.hpp"
#include "qb/orbit_word.hpp"

namespace qb {

// Rotation magnitudes below this count as the identity when testing whether a
// composite isometry is a translation.
inline constexpr double kTolRot = 1e-9;
// Corridor intervals are open; a witness needs at least this much clearance.
inline constexpr double kCorridorMargin = 1e-12;

// Reflection chain of a polygon along a word: polygons[j] is the vertex cycle
// of g_j(P), with g_0 the identity and g_j prepending the reflection in the
// j-th named edge image. sharedEdges[j] sits between polygons[j] and [j+1].
struct Unfolding {
  OrbitWord word;
  std::vector<std::vector<Point>> polygons;
  std::vector<Segment> sharedEdges;
  std::vector<Isometry> isometries;

  const Isometry& composite() const { return isometries.back(); }
};

inline Unfolding unfold(const ConvexPolygon& poly, const OrbitWord& word) {
  const int E = poly.size();
  if (word.maxLetter() >= E)
    throw std::invalid_argument("unfold: word letter exceeds edge count");

  Unfolding u{word, {}, {}, {}};
  u.polygons.reserve(static_cast<size_t>(word.length()) + 1);
  u.sharedEdges.reserve(static_cast<size_t>(word.length()));
  u.isometries.reserve(static_cast<size_t>(word.length()) + 1);

  std::vector<Point> cur = poly.vertices();
  u.polygons.push_back(cur);
  u.isometries.push_back(Isometry::identity());
  for (int ell : word.letters()) {
    Point p = cur[static_cast<size_t>(ell)];
    Point q = cur[static_cast<size_t>((ell + 1) % E)];
    Isometry r = reflectAcross(p, q);
    for (Point& v : cur) v = r(v);
    u.polygons.push_back(cur);
    u.sharedEdges.push_back({p, q});
    u.isometries.push_back(r * u.isometries.back());
  }
  return u;
}

// The composite as a translation vector: present only when the chain closes up
// orientation-preserving, with rotation within kTolRot and a nonzero vector.
inline std::optional<Vec2> closureTranslation(const Unfolding& u) {
  const Isometry& g = u.composite();
  if (g.orientationReversing()) return std::nullopt;
  if (std::abs(g.rotationAngle()) >= kTolRot) return std::nullopt;
  Vec2 t = g.translationPart();
  if (norm(t) < 1e-12) return std::nullopt;
  return t;
}

// Open strip of lines parallel to the closure translation that cross every
// shared edge strictly inside. Offsets are measured against the unit normal
// of the translation direction.
struct CorridorResult {
  Vec2 translation;
  double lower = 0.0;
  double upper = 0.0;
  double width = 0.0;
  // Steps whose edges pin the strip: (argmax of lower, argmin of upper).
  std::pair<int, int> blockingEdges{-1, -1};
  // One crossing point per shared edge at the mid offset; empty when the
  // corridor is narrower than the margin.
  std::vector<Point> witnessPath;

  bool nonempty() const { return width > kCorridorMargin; }
};

inline CorridorResult corridor(const Unfolding& u) {
  std::optional<Vec2> t = closureTranslation(u);
  if (!t)
    throw std::invalid_argument("corridor: unfolding has no translation closure");
  Vec2 v = *t;
  double len = norm(v);
  Vec2 dir{v.x / len, v.y / len};
  Vec2 n = perp(dir);

  CorridorResult r;
  r.translation = v;
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  int loStep = -1, hiStep = -1;
  for (size_t j = 0; j < u.sharedEdges.size(); ++j) {
    double pa = dot(u.sharedEdges[j].a, n);
    double pb = dot(u.sharedEdges[j].b, n);
    if (pa > pb) std::swap(pa, pb);
    if (pa > lo) { lo = pa; loStep = static_cast<int>(j); }
    if (pb < hi) { hi = pb; hiStep = static_cast<int>(j); }
  }
  r.lower = lo;
  r.upper = hi;
  r.width = hi > lo ? hi - lo : 0.0;
  r.blockingEdges = {loStep, hiStep};
  if (r.width > kCorridorMargin) {
    double mid = 0.5 * (lo + hi);
    r.witnessPath.reserve(u.sharedEdges.size());
    for (const Segment& e : u.sharedEdges) {
      double pa = dot(e.a, n), pb = dot(e.b, n);
      double s = (mid - pa) / (pb - pa);
      r.witnessPath.push_back(e.a + s * (e.b - e.a));
    }
  }
  return r;
}

struct Relabeling {
  int rotation = 0;
  bool reflected = false;
};

struct PeriodicityVerdict {
  bool accepted = false;
  std::optional<Relabeling> relabelingUsed;
  // Corridor of the accepting attempt, or of the widest closed attempt when
  // everything was rejected; absent when no attempt closed up.
  std::optional<CorridorResult> corridor;
  std::string reason;
};

// Whether the polygon admits a periodic billiard path of the word's type.
// With tryRelabelings set, all 2E dihedral label changes are attempted in a
// fixed order: rotations 0..E-1 plain, then rotations 0..E-1 reflected.
inline PeriodicityVerdict isPeriodic(const ConvexPolygon& poly, const OrbitWord& word,
                                     bool tryRelabelings = true) {
  if (!word.cyclicallyValid())
    throw std::invalid_argument("isPeriodic: word ends where it starts");
  const int E = poly.size();
  if (word.maxLetter() >= E)
    throw std::invalid_argument("isPeriodic: word letter exceeds edge count");

  PeriodicityVerdict verdict;
  if (!word.evenLength()) {
    verdict.reason = "odd-length word: composite reflection reverses orientation";
    return verdict;
  }

  std::vector<Relabeling> attempts;
  if (tryRelabelings) {
    for (int refl = 0; refl < 2; ++refl)
      for (int rot = 0; rot < E; ++rot)
        attempts.push_back({rot, refl != 0});
  } else {
    attempts.push_back({0, false});
  }

  bool anyClosure = false;
  double bestWidth = -1.0;
  for (const Relabeling& rl : attempts) {
    OrbitWord w = relabel(word, rl.rotation, rl.reflected, E);
    Unfolding u = unfold(poly, w);
    if (!closureTranslation(u)) continue;
    CorridorResult c = corridor(u);
    anyClosure = true;
    if (c.width > bestWidth) {
      bestWidth = c.width;
      verdict.corridor = c;
      verdict.relabelingUsed = rl;
    }
    if (c.nonempty()) {
      verdict.accepted = true;
      verdict.corridor = std::move(c);
      verdict.relabelingUsed = rl;
      return verdict;
    }
  }
  verdict.relabelingUsed.reset();
  verdict.reason = anyClosure ? "corridor empty for every relabeling that closes up"
                              : "no relabeling closes up to a translation";
  if (!anyClosure) verdict.corridor.reset();
  return verdict;
}

// Slope of each shared edge in the corridor frame (translation direction as
// the x axis); nullopt marks a vertical edge.
inline std::vector<std::optional<Angle>> sharedEdgeSlopes(const Unfolding& u,
                                                          const CorridorResult& c) {
  double len = norm(c.translation);
  Vec2 dir{c.translation.x / len, c.translation.y / len};
  Vec2 n = perp(dir);
  std::vector<std::optional<Angle>> out;
  out.reserve(u.sharedEdges.size());
  for (const Segment& e : u.sharedEdges) {
    Point a{dot(e.a, dir), dot(e.a, n)};
    Point b{dot(e.b, dir), dot(e.b, n)};
    if (std::abs(b.x - a.x) <= kVerticalTol)
      out.push_back(std::nullopt);
    else
      out.push_back(angularSlope(a, b));
  }
  return out;
}

}  // namespace qb

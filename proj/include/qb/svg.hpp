#pragma once

#include <algorithm>
#include <cstdio>
#include <limits>
#include <string>

#include "qb/unfolding.hpp"

namespace qb {

namespace detail {

inline std::string fmt6(double v) {
  char buf[64];
  if (v == 0.0) v = 0.0;  // avoid "-0.000000"
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace detail

// Deterministic SVG picture of an unfolding: one outlined cell per polygon,
// the shared edges emphasized, and, when a corridor is supplied, the shaded
// strip plus one period of the witness line. Y grows upward in the plane, so
// emitted y coordinates are negated.
inline std::string renderUnfoldingSvg(const Unfolding& u,
                                      const CorridorResult* corr = nullptr) {
  using detail::fmt6;
  double minX = u.polygons[0][0].x, maxX = minX;
  double minY = u.polygons[0][0].y, maxY = minY;
  for (const auto& poly : u.polygons)
    for (const Point& p : poly) {
      minX = std::min(minX, p.x);
      maxX = std::max(maxX, p.x);
      minY = std::min(minY, p.y);
      maxY = std::max(maxY, p.y);
    }
  double spanX = maxX - minX, spanY = maxY - minY;
  double margin = 0.05 * std::max(spanX, spanY);
  if (margin <= 0.0) margin = 0.05;
  double stroke = 0.004 * std::max(spanX + 2 * margin, spanY + 2 * margin);

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  s += fmt6(minX - margin) + " " + fmt6(-(maxY + margin)) + " " +
       fmt6(spanX + 2 * margin) + " " + fmt6(spanY + 2 * margin) + "\">\n";

  auto pts = [&](auto&& range) {
    std::string out;
    for (const Point& p : range) {
      if (!out.empty()) out += " ";
      out += fmt6(p.x) + "," + fmt6(-p.y);
    }
    return out;
  };

  if (corr && corr->nonempty()) {
    Vec2 v = corr->translation;
    double len = norm(v);
    Vec2 dir{v.x / len, v.y / len};
    Vec2 n = perp(dir);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& poly : u.polygons)
      for (const Point& p : poly) {
        lo = std::min(lo, dot(p, dir));
        hi = std::max(hi, dot(p, dir));
      }
    Point band[4] = {lo * dir + corr->lower * n, hi * dir + corr->lower * n,
                     hi * dir + corr->upper * n, lo * dir + corr->upper * n};
    s += "  <polygon class=\"corridor\" fill=\"#27ae60\" fill-opacity=\"0.25\" "
         "stroke=\"none\" points=\"" +
         pts(band) + "\"/>\n";
  }

  for (const auto& poly : u.polygons) {
    s += "  <polygon class=\"cell\" fill=\"#eef3f8\" fill-opacity=\"0.5\" "
         "stroke=\"#4a6b8a\" stroke-width=\"" +
         fmt6(stroke) + "\" points=\"" + pts(poly) + "\"/>\n";
  }

  for (const Segment& e : u.sharedEdges) {
    s += "  <line class=\"shared\" stroke=\"#c0392b\" stroke-width=\"" +
         fmt6(1.8 * stroke) + "\" x1=\"" + fmt6(e.a.x) + "\" y1=\"" + fmt6(-e.a.y) +
         "\" x2=\"" + fmt6(e.b.x) + "\" y2=\"" + fmt6(-e.b.y) + "\"/>\n";
  }

  if (corr && !corr->witnessPath.empty()) {
    Point q = corr->witnessPath.back();
    Point p = q - corr->translation;
    s += "  <line class=\"witness\" stroke=\"#1f77b4\" stroke-width=\"" +
         fmt6(1.5 * stroke) + "\" stroke-dasharray=\"" + fmt6(4 * stroke) + " " +
         fmt6(2.5 * stroke) + "\" x1=\"" + fmt6(p.x) + "\" y1=\"" + fmt6(-p.y) +
         "\" x2=\"" + fmt6(q.x) + "\" y2=\"" + fmt6(-q.y) + "\"/>\n";
  }

  s += "</svg>\n";
  return s;
}

}  // namespace qb

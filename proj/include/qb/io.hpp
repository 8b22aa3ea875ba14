#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qb/analysis.hpp"
#include "qb/classifier.hpp"
#include "qb/geom.hpp"
#include "qb/search.hpp"
#include "qb/unfolding.hpp"
#include "qb/verify.hpp"

namespace qb {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  std::string field;
  explicit ParseError(const std::string& msg, std::string fieldName = {})
      : std::runtime_error(msg), field(std::move(fieldName)) {}
};

// Numbers are reported to 12 significant digits.
inline double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

// Input document: either the four-angle chart {a,b,c,d} of a quadrilateral,
// a 4-entry corners array (inverted through the centered chart member), or a
// 3-entry corners array naming triangle interior angles. Angles are radians
// unless "unit" says "deg".
struct QuadInput {
  std::optional<QuadParams> quad;
  std::optional<ConvexPolygon> triangle;

  ConvexPolygon polygon() const { return quad ? realize(*quad) : *triangle; }
};

inline QuadInput parseQuadDocument(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("input document must be a JSON object");

  double scale = 1.0;
  if (doc.contains("unit")) {
    if (!doc["unit"].is_string()) throw ParseError("unit must be a string", "unit");
    std::string unit = doc["unit"].get<std::string>();
    if (unit == "deg")
      scale = kPi / 180.0;
    else if (unit != "rad")
      throw ParseError("unit must be \"rad\" or \"deg\"", "unit");
  }
  auto num = [&](const Json& v, const char* field) {
    if (!v.is_number()) throw ParseError("field must be a number", field);
    return v.get<double>() * scale;
  };

  QuadInput in;
  if (doc.contains("corners")) {
    const Json& cs = doc["corners"];
    if (!cs.is_array() || (cs.size() != 3 && cs.size() != 4))
      throw ParseError("corners must hold 3 or 4 angles", "corners");
    if (cs.size() == 3) {
      double s = num(cs[0], "corners") + num(cs[1], "corners") + num(cs[2], "corners");
      if (std::abs(s - kPi) > 1e-9)
        throw ParseError("triangle corner angles must sum to pi", "corners");
      try {
        in.triangle = triangleFromAngles(Angle::radians(num(cs[0], "corners")),
                                         Angle::radians(num(cs[1], "corners")));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), "corners");
      }
      return in;
    }
    try {
      in.quad = centeredQuadFromCorners(
          {Angle::radians(num(cs[0], "corners")), Angle::radians(num(cs[1], "corners")),
           Angle::radians(num(cs[2], "corners")), Angle::radians(num(cs[3], "corners"))});
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), "corners");
    }
    return in;
  }

  for (const char* f : {"a", "b", "c", "d"})
    if (!doc.contains(f)) throw ParseError("missing parameter", f);
  try {
    in.quad = QuadParams(Angle::radians(num(doc["a"], "a")),
                         Angle::radians(num(doc["b"], "b")),
                         Angle::radians(num(doc["c"], "c")),
                         Angle::radians(num(doc["d"], "d")));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), "a");
  }
  return in;
}

inline Json paramsJson(const QuadParams& q) {
  Json arr = Json::array();
  for (double v : q.rad()) arr.push_back(round12(v));
  return arr;
}

inline Json classifyReport(const QuadParams& q) {
  RegionLabel label = classify(q);
  AlphaBetaPoint ab = alphaBeta(q);
  Json out;
  out["region"] = std::string(regionName(label.region));
  out["family"] = label.family.name();
  out["orbitWord"] = wordFor(label.family).str();
  out["alpha"] = round12(ab.alpha.rad());
  out["beta"] = round12(ab.beta.rad());
  out["gamma"] = round12(ab.gamma.rad());
  out["theta"] = round12(ab.theta.rad());
  out["alphaCorner"] = ab.alphaCorner;
  out["betaCorner"] = ab.betaCorner;
  Json corners = Json::array();
  for (Angle c : cornerAngles(q)) corners.push_back(round12(c.rad()));
  out["corners"] = corners;
  out["nearSquare107"] = nearSquare(q, Angle::radians(kPi / 107.0));
  return out;
}

inline Json checkReport(const PeriodicityVerdict& v, const OrbitWord& word) {
  Json out;
  out["accepted"] = v.accepted;
  out["word"] = word.str();
  if (v.relabelingUsed) {
    out["relabeling"] = Json{{"rotation", v.relabelingUsed->rotation},
                             {"reflected", v.relabelingUsed->reflected}};
  } else {
    out["relabeling"] = nullptr;
  }
  if (v.corridor) {
    out["translation"] = Json::array(
        {round12(v.corridor->translation.x), round12(v.corridor->translation.y)});
    out["corridorWidth"] = round12(v.corridor->width);
    out["blockingEdges"] = Json::array(
        {v.corridor->blockingEdges.first, v.corridor->blockingEdges.second});
  } else {
    out["translation"] = nullptr;
    out["corridorWidth"] = nullptr;
    out["blockingEdges"] = nullptr;
  }
  out["reason"] = v.accepted ? Json(nullptr) : Json(v.reason);
  return out;
}

inline Json unfoldReport(const Unfolding& u, const std::optional<CorridorResult>& c) {
  Json out;
  out["word"] = u.word.str();
  out["polygons"] = static_cast<int>(u.polygons.size());
  out["closure"] = c.has_value();
  if (c) {
    out["translation"] = Json::array({round12(c->translation.x), round12(c->translation.y)});
    out["corridorLower"] = round12(c->lower);
    out["corridorUpper"] = round12(c->upper);
    out["corridorWidth"] = round12(c->width);
    out["accepted"] = c->nonempty();
  } else {
    out["translation"] = nullptr;
    out["corridorLower"] = nullptr;
    out["corridorUpper"] = nullptr;
    out["corridorWidth"] = nullptr;
    out["accepted"] = false;
    out["compositeRotation"] = round12(u.composite().rotationAngle());
    out["orientationReversing"] = u.composite().orientationReversing();
  }
  return out;
}

inline Json searchReportJson(const SearchReport& r) {
  Json out;
  out["maxLen"] = r.maxLen;
  out["stableOnly"] = r.stableOnly;
  out["candidates"] = r.candidates;
  Json acc = Json::array();
  for (const AcceptedWord& aw : r.accepted)
    acc.push_back(Json{{"word", aw.word.str()}, {"width", round12(aw.corridorWidth)}});
  out["accepted"] = acc;
  out["elapsedSeconds"] = round12(r.elapsedSeconds);
  return out;
}

inline Json coverReportJson(const CoverReport& r, const std::string& mode) {
  Json out;
  out["mode"] = mode;
  out["eps"] = round12(r.eps);
  out["samples"] = r.samples;
  out["seed"] = r.seed;
  out["failures"] = static_cast<long long>(r.failures.size());
  Json per = Json::object();
  for (const auto& [name, st] : r.perRegion) {
    Json row;
    row["samples"] = st.samples;
    row["verified"] = st.verified;
    row["minWidth"] = st.verified > 0 ? Json(round12(st.minCorridorWidth)) : Json(nullptr);
    per[name] = row;
  }
  out["perRegion"] = per;
  Json details = Json::array();
  for (size_t i = 0; i < r.failures.size() && i < 20; ++i) {
    const VerifyFailure& f = r.failures[i];
    details.push_back(Json{{"params", paramsJson(f.params)},
                           {"region", f.region},
                           {"reason", f.reason}});
  }
  out["failureDetails"] = details;
  return out;
}

inline Json epsilonReport(int n) {
  Angle e = epsilonN(n);
  Json out;
  out["n"] = n;
  out["value"] = round12(e.rad());
  out["residual"] = round12(epsilonResidual(n, e.rad()));
  out["gtPi107"] = e.rad() > kPi / 107.0;
  return out;
}

inline Json errorBody(const std::string& message, const std::string& field = {}) {
  Json out;
  out["error"] = message;
  if (!field.empty()) out["field"] = field;
  return out;
}

}  // namespace qb

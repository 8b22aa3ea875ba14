#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qb/classifier.hpp"
#include "qb/geom.hpp"
#include "qb/unfolding.hpp"

namespace qb {

// Seeded sampler with an explicit 53-bit double conversion so streams are
// reproducible across standard libraries.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

 private:
  std::mt19937_64 gen_;
};

// Uniform draw from the open box (center_i - eps, center_i + eps)^4; redraws
// the rare boundary hits and any invalid parameter combination.
inline QuadParams drawNearCenter(SampleRng& rng, const std::array<double, 4>& center,
                                 double eps) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::array<double, 4> p{};
    bool inside = true;
    for (int i = 0; i < 4; ++i) {
      p[i] = center[i] + rng.uniform(-eps, eps);
      inside = inside && std::abs(p[i] - center[i]) < eps && p[i] > 0.0;
    }
    if (!inside) continue;
    try {
      return QuadParams(Angle::radians(p[0]), Angle::radians(p[1]),
                        Angle::radians(p[2]), Angle::radians(p[3]));
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("drawNearCenter: box keeps leaving the valid chart");
}

inline QuadParams drawNearSquare(SampleRng& rng, double eps) {
  return drawNearCenter(rng, {kPi / 4.0, kPi / 4.0, kPi / 4.0, kPi / 4.0}, eps);
}

// ---- exact constructions on the measure-zero sets ----

// Rectangle line: params (a, pi/2 - a, a, pi/2 - a) realize rectangles.
inline QuadParams rectangleLineSample(double a) {
  Angle av = Angle::radians(a), bv = Angle::radians(kPi / 2.0 - a);
  return QuadParams(av, bv, av, bv);
}

// Acute corner of size pi/2 - s beside an exactly right corner; split in (0,1)
// apportions the slack s between the two obtuse corners.
inline QuadParams rightNeighborSample(double s, double split) {
  double u = split * s;
  return centeredQuadFromCorners({Angle::radians(kPi / 2.0 - s), Angle::radians(kPi / 2.0),
                                  Angle::radians(kPi / 2.0 + s - u),
                                  Angle::radians(kPi / 2.0 + u)});
}

// Exact member of the ladder line for n = 2 or 3. For n = 2 the corner
// opposite alpha carries split * s/3 of the slack; n = 3 forces the opposite
// corner right and the two neighbors equal.
inline QuadParams lineSample(int n, double s, double split) {
  if (n == 2) {
    double w = split * s / 3.0;
    return centeredQuadFromCorners(
        {Angle::radians(kPi / 2.0 - s), Angle::radians(kPi / 2.0 + s / 3.0),
         Angle::radians(kPi / 2.0 + w), Angle::radians(kPi / 2.0 + 2.0 * s / 3.0 - w)});
  }
  if (n == 3) {
    return centeredQuadFromCorners(
        {Angle::radians(kPi / 2.0 - s), Angle::radians(kPi / 2.0 + s / 2.0),
         Angle::radians(kPi / 2.0), Angle::radians(kPi / 2.0 + s / 2.0)});
  }
  throw std::invalid_argument("lineSample: only the n = 2 and n = 3 lines are constructed");
}

// Opposite acute corners A and C (deficits sA, sC); split apportions the
// surplus between the obtuse corners B and D.
inline QuadParams oppositeAcuteSample(double sA, double sC, double split) {
  double A = kPi / 2.0 - sA, C = kPi / 2.0 - sC;
  double B = kPi / 2.0 + split * (sA + sC);
  double D = 2.0 * kPi - A - B - C;
  return centeredQuadFromCorners(
      {Angle::radians(A), Angle::radians(B), Angle::radians(C), Angle::radians(D)});
}

// ---- cover verification ----

struct RegionStats {
  long long samples = 0;
  long long verified = 0;
  double minCorridorWidth = std::numeric_limits<double>::infinity();
};

struct VerifyFailure {
  QuadParams params;
  std::string region;
  std::string reason;
};

struct CoverReport {
  double eps = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;
  std::map<std::string, RegionStats> perRegion;
  std::vector<VerifyFailure> failures;

  bool allVerified() const { return failures.empty(); }
};

namespace detail {

inline void coverOne(CoverReport& rep, const QuadParams& p) {
  RegionLabel label = classify(p);
  std::string name(regionName(label.region));
  RegionStats& st = rep.perRegion[name];
  ++st.samples;
  PeriodicityVerdict v = isPeriodic(realize(p), wordFor(label.family));
  if (v.accepted) {
    ++st.verified;
    st.minCorridorWidth = std::min(st.minCorridorWidth, v.corridor->width);
  } else {
    rep.failures.push_back({p, name, v.reason});
  }
}

inline CoverReport coverRun(const std::array<double, 4>& center, double eps,
                            long long samples, std::uint64_t seed) {
  if (!(eps > 0.0)) throw std::invalid_argument("cover run: eps must be positive");
  for (double c : center)
    if (eps >= c) throw std::invalid_argument("cover run: eps leaves the valid chart");
  CoverReport rep;
  rep.eps = eps;
  rep.samples = samples;
  rep.seed = seed;
  SampleRng rng(seed);
  for (long long i = 0; i < samples; ++i) coverOne(rep, drawNearCenter(rng, center, eps));
  return rep;
}

}  // namespace detail

// Samples the eps ball around the square, classifies each draw, and verifies
// the classified orbit on it. Single-threaded and reproducible for a seed.
inline CoverReport verifyCover(Angle eps, long long samples, std::uint64_t seed) {
  return detail::coverRun({kPi / 4.0, kPi / 4.0, kPi / 4.0, kPi / 4.0}, eps.rad(),
                          samples, seed);
}

// Same sweep around a rectangle of the given aspect ratio (>= 1); aspect 1 is
// verifyCover.
inline CoverReport verifyNearRectangle(double aspect, Angle eps, long long samples,
                                       std::uint64_t seed) {
  if (!(aspect >= 1.0))
    throw std::invalid_argument("verifyNearRectangle: aspect must be at least 1");
  double a0 = std::atan2(1.0, aspect);
  return detail::coverRun({a0, kPi / 2.0 - a0, a0, kPi / 2.0 - a0}, eps.rad(), samples,
                          seed);
}

// Exact samples on the four measure-zero sets: the rectangle line, the right
// neighbor set (beta = pi/2), and the two ladder lines. Each sample must
// classify onto its set and accept the set's orbit word.
inline CoverReport verifyBoundaries(Angle eps, long long samplesPerSet,
                                    std::uint64_t seed) {
  double e = eps.rad();
  if (!(e > 0.0) || e >= kPi / 8.0)
    throw std::invalid_argument("verifyBoundaries: eps must lie in (0, pi/8)");
  CoverReport rep;
  rep.eps = e;
  rep.samples = 4 * samplesPerSet;
  rep.seed = seed;
  SampleRng rng(seed);

  struct Set {
    Region region;
    QuadParams (*make)(SampleRng&, double);
  };
  const Set sets[] = {
      {Region::Rect, [](SampleRng& r, double e2) {
         return rectangleLineSample(kPi / 4.0 + r.uniform(-e2, e2));
       }},
      {Region::R, [](SampleRng& r, double e2) {
         return rightNeighborSample(r.uniform(0.15, 0.8) * e2, r.uniform(0.1, 0.9));
       }},
      {Region::L2, [](SampleRng& r, double e2) {
         return lineSample(2, r.uniform(0.15, 0.8) * e2, r.uniform(0.1, 0.9));
       }},
      {Region::L3, [](SampleRng& r, double e2) {
         return lineSample(3, r.uniform(0.15, 0.8) * e2, r.uniform(0.1, 0.9));
       }},
  };
  for (const Set& set : sets) {
    std::string name(regionName(set.region));
    RegionStats& st = rep.perRegion[name];
    OrbitWord word = wordFor(familyFor(set.region));
    for (long long i = 0; i < samplesPerSet; ++i) {
      QuadParams p = set.make(rng, e);
      ++st.samples;
      RegionLabel got = classify(p);
      if (got.region != set.region) {
        rep.failures.push_back({p, name, "classified as " +
                                             std::string(regionName(got.region))});
        continue;
      }
      PeriodicityVerdict v = isPeriodic(realize(p), word);
      if (v.accepted) {
        ++st.verified;
        st.minCorridorWidth = std::min(st.minCorridorWidth, v.corridor->width);
      } else {
        rep.failures.push_back({p, name, v.reason});
      }
    }
  }
  return rep;
}

// ---- canonical chart and the named lines of the X2 chain ----

// Chart of the same quadrilateral with the beta corner counterclockwise-next
// from the alpha corner, mirroring across the diagonal when needed. Canonical
// words then map through letter -> (letter + alphaCorner) mod 4.
struct CanonicalChart {
  QuadParams params;
  int alphaCorner = 0;
  bool mirrored = false;
};

inline CanonicalChart canonicalChart(const QuadParams& q) {
  std::array<Angle, 4> cs = cornerAngles(q);
  int ai = 0;
  for (int i = 1; i < 4; ++i)
    if (cs[i].rad() < cs[ai].rad()) ai = i;
  if (std::abs(cs[ai].rad() - kPi / 2.0) <= kTolAngle)
    throw std::invalid_argument("canonicalChart: rectangle has no distinguished corner");
  double next = cs[(ai + 1) % 4].rad(), prev = cs[(ai + 3) % 4].rad();
  if (next <= prev) return {q, ai, false};
  // Mirroring reverses the corner cycle around A, moving corner i to (4-i)%4.
  return {mirrorChart(q), (4 - ai) % 4, true};
}

// Steps of the canonical X2 chain carrying the named lines. h1 is the first
// base step; l3 and l4 are the second and third diagonal steps; the step-9
// line is the chain's vertical mirror axis.
inline constexpr int kX2StepH1 = 0;
inline constexpr int kX2StepL3 = 2;
inline constexpr int kX2StepL4 = 3;
inline constexpr int kX2StepMid = 9;

struct X2SlopeReport {
  std::optional<double> h1, l3, l4;  // corridor-frame slopes; nullopt is vertical
  double h1Expected = 0.0;           // pi/2 - alpha
  double l3Expected = 0.0;           // pi/2 + 2*beta, mod pi
  double l4Expected = 0.0;           // pi/2 + 3*beta + alpha, mod pi
  bool midVertical = false;
  double width = 0.0;
  double mirrorDefect = 0.0;  // worst vertex misfit of the step-9 mirror pairing
};

inline X2SlopeReport x2Slopes(const QuadParams& q) {
  CanonicalChart chart = canonicalChart(q);
  AlphaBetaPoint ab = alphaBeta(chart.params);
  OrbitWord word = relabel(wordFor(OrbitFamily::x(2)), chart.alphaCorner, false, 4);
  Unfolding u = unfold(realize(chart.params), word);
  std::optional<Vec2> t = closureTranslation(u);
  if (!t) throw std::invalid_argument("x2Slopes: X2 chain does not close up");
  CorridorResult c = corridor(u);
  std::vector<std::optional<Angle>> slopes = sharedEdgeSlopes(u, c);

  X2SlopeReport rep;
  auto val = [&](int step) -> std::optional<double> {
    const std::optional<Angle>& s = slopes[static_cast<size_t>(step)];
    if (!s) return std::nullopt;
    return s->rad();
  };
  rep.h1 = val(kX2StepH1);
  rep.l3 = val(kX2StepL3);
  rep.l4 = val(kX2StepL4);
  rep.h1Expected = kPi / 2.0 - ab.alpha.rad();
  rep.l3Expected = wrapToHalfPi(kPi / 2.0 + 2.0 * ab.beta.rad());
  rep.l4Expected = wrapToHalfPi(kPi / 2.0 + 3.0 * ab.beta.rad() + ab.alpha.rad());
  rep.midVertical = !slopes[kX2StepMid].has_value();
  rep.width = c.width;

  const Segment& axis = u.sharedEdges[kX2StepMid];
  Isometry mirror = reflectAcross(axis.a, axis.b);
  double worst = 0.0;
  const int last = static_cast<int>(u.polygons.size()) - 1;  // 20
  for (int k = 0; k < last; ++k) {
    const auto& src = u.polygons[static_cast<size_t>(k)];
    const auto& dst = u.polygons[static_cast<size_t>(last - 1 - k)];
    for (const Point& p : src) {
      double best = std::numeric_limits<double>::infinity();
      for (const Point& d2 : dst) best = std::min(best, distance(mirror(p), d2));
      worst = std::max(worst, best);
    }
  }
  rep.mirrorDefect = worst;
  return rep;
}

}  // namespace qb

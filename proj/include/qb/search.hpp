#pragma once

#include <chrono>
#include <stdexcept>
#include <vector>

#include "qb/geom.hpp"
#include "qb/orbit_catalog.hpp"
#include "qb/unfolding.hpp"

namespace qb {

struct AcceptedWord {
  OrbitWord word;
  double corridorWidth = 0.0;
};

struct SearchReport {
  int maxLen = 0;
  bool stableOnly = false;
  long long candidates = 0;  // canonical cyclic words enumerated
  std::vector<AcceptedWord> accepted;
  double elapsedSeconds = 0.0;
};

namespace detail {

// Depth-first enumeration of cyclic words over {0..3} in canonical form (the
// lexicographically least rotation). Pruning: the first letter is the minimum,
// consecutive letters differ, and first != last at the leaf.
template <typename Fn>
void enumerateCanonical(int len, Fn&& visit) {
  std::vector<int> w(static_cast<size_t>(len));
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == len) {
      if (w.back() == w.front()) return;
      OrbitWord word = OrbitWord::fromLetters(w);
      if (canonicalRotation(word) == word) visit(word);
      return;
    }
    for (int letter = 0; letter < 4; ++letter) {
      if (depth > 0 && letter == w[static_cast<size_t>(depth - 1)]) continue;
      if (depth > 0 && letter < w[0]) continue;
      w[static_cast<size_t>(depth)] = letter;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// Brute-force oracle: enumerates every canonical cyclic word of even length up
// to maxLen and records those the quadrilateral accepts, with explicit edge
// labels (no relabeling search). Deterministic; sorted by length then letters.
inline SearchReport searchWords(const QuadParams& params, int maxLen,
                                bool stableOnly = false) {
  if (maxLen < 2 || maxLen > 20 || maxLen % 2 != 0)
    throw std::invalid_argument("searchWords: maxLen must be even and within 2..20");
  auto start = std::chrono::steady_clock::now();
  ConvexPolygon poly = realize(params);

  SearchReport report;
  report.maxLen = maxLen;
  report.stableOnly = stableOnly;
  for (int len = 2; len <= maxLen; len += 2) {
    detail::enumerateCanonical(len, [&](const OrbitWord& w) {
      ++report.candidates;
      if (stableOnly && !isStable(w)) return;
      PeriodicityVerdict v = isPeriodic(poly, w, /*tryRelabelings=*/false);
      if (v.accepted) report.accepted.push_back({w, v.corridor->width});
    });
  }
  report.elapsedSeconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qb

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qb/orbit_word.hpp"

namespace qb {

// The families of periodic bounce patterns the classifier can emit.
// Rect, F, R, A are single words; X and Y are ladders indexed by n >= 2.
struct OrbitFamily {
  enum class Tag { Rect, F, R, A, X, Y };

  Tag tag = Tag::Rect;
  int n = 0;

  static OrbitFamily rect() { return {Tag::Rect, 0}; }
  static OrbitFamily f() { return {Tag::F, 0}; }
  static OrbitFamily r() { return {Tag::R, 0}; }
  static OrbitFamily a() { return {Tag::A, 0}; }
  static OrbitFamily x(int n) { return indexed(Tag::X, n); }
  static OrbitFamily y(int n) { return indexed(Tag::Y, n); }

  std::string name() const {
    switch (tag) {
      case Tag::Rect: return "Rect";
      case Tag::F: return "F";
      case Tag::R: return "R";
      case Tag::A: return "A";
      case Tag::X: return "X" + std::to_string(n);
      case Tag::Y: return "Y" + std::to_string(n);
    }
    return {};
  }

  friend bool operator==(const OrbitFamily&, const OrbitFamily&) = default;

 private:
  static OrbitFamily indexed(Tag t, int n) {
    if (n < 2) throw std::invalid_argument("OrbitFamily: ladder index must be at least 2");
    return {t, n};
  }
};

// Canonical word of a family, over edge labels 0..3 with edge 0 joining the
// alpha corner to the beta corner. X(n) has length 8n+4 and Y(n) length 2n+4.
inline OrbitWord wordFor(const OrbitFamily& fam) {
  using Tag = OrbitFamily::Tag;
  auto rep = [](std::vector<int>& w, int a, int b, int times) {
    for (int i = 0; i < times; ++i) {
      w.push_back(a);
      w.push_back(b);
    }
  };
  switch (fam.tag) {
    case Tag::Rect: return OrbitWord::parse("0202");
    case Tag::F: return OrbitWord::parse("012012");
    case Tag::R: return OrbitWord::parse("012021");
    case Tag::A: return OrbitWord::parse("01203213");
    case Tag::X: {
      std::vector<int> w;
      w.push_back(0);
      rep(w, 1, 3, fam.n);
      w.push_back(0);
      rep(w, 1, 3, fam.n - 1);
      w.insert(w.end(), {1, 3, 1});
      rep(w, 3, 1, fam.n - 1);
      w.push_back(0);
      rep(w, 3, 1, fam.n);
      w.insert(w.end(), {0, 3});
      return OrbitWord::fromLetters(std::move(w));
    }
    case Tag::Y: {
      std::vector<int> w{0, 1};
      rep(w, 3, 1, fam.n);
      w.insert(w.end(), {0, 3});
      return OrbitWord::fromLetters(std::move(w));
    }
  }
  throw std::logic_error("wordFor: bad family tag");
}

// A word is stable when, for every letter, its count at even positions equals
// its count at odd positions. Odd-length words are never stable.
inline bool isStable(const OrbitWord& w) {
  if (!w.evenLength()) return false;
  std::map<int, std::pair<int, int>> counts;
  const auto& ls = w.letters();
  for (size_t i = 0; i < ls.size(); ++i) {
    if (i % 2 == 0)
      counts[ls[i]].first++;
    else
      counts[ls[i]].second++;
  }
  for (const auto& [letter, c] : counts)
    if (c.first != c.second) return false;
  return true;
}

// The word traversed twice. Requires first != last so the juncture is valid.
inline OrbitWord squareWord(const OrbitWord& w) {
  if (!w.cyclicallyValid())
    throw std::invalid_argument("squareWord: word ends where it starts");
  std::vector<int> out = w.letters();
  out.insert(out.end(), w.letters().begin(), w.letters().end());
  return OrbitWord::fromLetters(std::move(out));
}

}  // namespace qb
